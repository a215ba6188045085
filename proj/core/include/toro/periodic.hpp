#pragma once

#include <boost/rational.hpp>

#include "toro/cubical.hpp"
#include "toro/simplicial.hpp"

namespace toro {

/// Exact rational coordinates; no floating point enters any geometric
/// predicate.
using Rat = boost::rational<long long>;

long long rat_floor(const Rat& r);

/// Closed interval [lo, hi] on the line (hi >= lo), used for projection
/// intervals of cells; hi - lo < 1 except for degenerate inputs.
struct Interval {
    Rat lo, hi;
};

/// Does [lo, hi] meet the open interval (s, e) on the circle R/Z?
bool meets_open_mod1(const Interval& cell, const Rat& s, const Rat& e);

/// Signed number of times the oriented segment x0 -> x1 crosses the point
/// c + Z, counting a segment that ends exactly on the point.
long long crossings(const Rat& x0, const Rat& x1, const Rat& c);

/// Quotient complex of a periodic complex: either a simplicial complex
/// with exact vertex coordinates (first d coordinates taken mod 1) or a
/// cubical grid complex.  Per-cell lifts into the covering space are
/// recovered from the coordinates (shortest-arc rule); a cell crosses a
/// periodic direction iff its lift shifts are not all equal.
class PeriodicComplex {
public:
    enum class Kind { Simplicial, Cubical };

    static PeriodicComplex simplicial(std::vector<std::vector<Rat>> vertex_coords, std::size_t d,
                                      const std::vector<std::vector<CellId>>& simplices, Scalar p);
    static PeriodicComplex cubical(std::vector<long long> extents, std::size_t periodic_axes,
                                   const std::vector<Cube>& cubes, Scalar p);
    static PeriodicComplex from_cubical(CubicalComplex cc);

    Kind kind() const { return kind_; }
    std::size_t periodicity() const { return d_; }
    std::size_t ambient_dim() const { return n_; }
    Scalar characteristic() const;

    const CellComplex& complex() const;
    const SimplicialComplex& simplicial_complex() const { return sc_; }
    const CubicalComplex& cubical_complex() const { return cub_; }

    /// Coordinate of a vertex in one direction (simplicial model).
    const std::vector<std::vector<Rat>>& coords() const { return coords_; }

    /// Projection interval of a cell in a periodic direction, using the
    /// cell's own lift; lo is normalised into [0, 1).
    Interval projection(CellId cell, std::size_t dir) const;

    /// Oriented projection of a 1-cell (x0, x1) in its own lift.  For
    /// cells that are not 1-dimensional both values equal projection().lo.
    std::pair<Rat, Rat> oriented_projection(CellId cell, std::size_t dir) const;

    /// True iff the cell crosses the periodic boundary in the direction.
    bool wraps(CellId cell, std::size_t dir) const;

    /// Lift shift (0 or 1) of the slot-th vertex of a simplicial cell.
    int lift_shift(CellId cell, std::size_t dir, std::size_t slot) const {
        return lifts_[cell][dir][slot];
    }

private:
    Kind kind_ = Kind::Simplicial;
    std::size_t d_ = 0;
    std::size_t n_ = 0;
    SimplicialComplex sc_;
    CubicalComplex cub_;
    std::vector<std::vector<Rat>> coords_;
    // simplicial lifts: per cell, per periodic direction, per vertex slot a
    // 0/1 shift making the lifted coordinates span an arc shorter than 1
    std::vector<std::vector<std::vector<int>>> lifts_;

    void compute_lifts();
};

/// Cellulation of the base circle for one periodic direction.
struct BaseCellulation {
    std::size_t direction = 0;
    std::vector<Rat> vertex_angles; // strictly increasing in [0, 1)
    bool artificial_vertex = false; // a midpoint vertex was inserted
    Rat artificial_angle;

    std::size_t num_vertices() const { return vertex_angles.size(); }
    CellId vertex_cell(std::size_t j) const { return j; }
    CellId edge_cell(std::size_t j) const { return vertex_angles.size() + j; }

    /// Open star of a base cell as an interval (s, e) with e - s < 1 for
    /// vertices (s, e may leave [0,1)); edge j spans (a_j, a_{j+1}).
    std::pair<Rat, Rat> star(CellId base_cell) const;

    /// Crossing angle used by the orientation cocycle: the midpoint of
    /// edge j for both edge j and vertex j.
    Rat crossing_angle(CellId base_cell) const;

    /// The circle as a cell complex: vertices 0..m-1, edges m..2m-1 with
    /// edge j from vertex j to vertex j+1 mod m.
    CellComplex to_complex(Scalar p) const;
};

/// Distinct coordinates of the vertices in the direction; when they all
/// coincide inserts an antipodal artificial vertex (unless disabled).
BaseCellulation base_cellulation(const PeriodicComplex& g, std::size_t dir,
                                 bool allow_midpoint = true);

/// Star preimage sets over a prepared working complex.
struct StarAssignment {
    // per base cell: cells of W whose projection meets the open star
    std::vector<std::vector<CellId>> preimage;
    // closure of the preimage
    std::vector<std::vector<CellId>> closed;
    // maximal subcomplex of the preimage
    std::vector<std::vector<CellId>> retract;
};

StarAssignment star_preimages(const PeriodicComplex& w, const BaseCellulation& b);

/// The quotient complex subdivided (simplicial) or refined (cubical)
/// until every cell projects inside some closed base star, plus the
/// composed carrier chain map from the original complex.
struct PreparedComplex {
    PeriodicComplex w;
    ChainMap carrier;
    std::size_t rounds = 0;
};

PreparedComplex subdivide_for_fibers(const PeriodicComplex& g, const BaseCellulation& b,
                                     std::size_t max_rounds = 8);

/// One further subdivision (or cubical refinement) round on a prepared
/// complex, composing the carrier.
PreparedComplex subdivide_extra(const PreparedComplex& pc);

/// k copies of g glued along direction dir; k = 1 returns g itself.
PeriodicComplex k_fold_cover(const PeriodicComplex& g, std::size_t dir, std::size_t k);

} // namespace toro
