#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toro/subspace.hpp"

namespace toro {

using CellId = std::size_t;

struct Cell {
    CellId id = 0;
    std::size_t dim = 0;
    std::string label;
};

/// Finite regular cell complex with graded cells and explicit incidence
/// data.  The face poset follows the convention sigma <= tau iff tau is a
/// face of sigma, so vertices are the maximal elements.
class CellComplex {
public:
    CellComplex() = default;
    CellComplex(std::vector<Cell> cells,
                std::vector<std::vector<std::pair<CellId, Scalar>>> boundary, Scalar p);

    std::size_t size() const { return cells_.size(); }
    std::size_t max_dim() const { return max_dim_; }
    Scalar characteristic() const { return p_; }

    const Cell& cell(CellId id) const { return cells_[id]; }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<std::pair<CellId, Scalar>>& boundary_of(CellId id) const {
        return boundary_[id];
    }

    /// Ids of the k-cells in increasing id order.
    const std::vector<CellId>& cells_of_dim(std::size_t k) const;
    /// Position of a k-cell among cells_of_dim(k).
    std::size_t index_in_dim(CellId id) const { return index_in_dim_[id]; }

    /// Codimension-1 faces (without multiplicity, sorted).
    const std::vector<CellId>& faces(CellId id) const { return faces_[id]; }
    /// Codimension-1 cofaces (sorted).
    const std::vector<CellId>& cofaces(CellId id) const { return cofaces_[id]; }

    /// The matrix of the boundary operator C_k -> C_{k-1}.
    FieldMatrix boundary_matrix(std::size_t k) const;

    /// All faces of the given cells, transitively, as a sorted id set.
    std::vector<CellId> closure(const std::vector<CellId>& ids) const;

    bool is_closed(const std::set<CellId>& sub) const;

    /// Checks boundary-of-boundary, gradation and incidence sanity; throws
    /// ValidationError with a distinct diagnostic per violated invariant.
    void validate() const;

private:
    std::vector<Cell> cells_;
    std::vector<std::vector<std::pair<CellId, Scalar>>> boundary_;
    std::vector<std::vector<CellId>> faces_;
    std::vector<std::vector<CellId>> cofaces_;
    std::vector<std::vector<CellId>> by_dim_;
    std::vector<std::size_t> index_in_dim_;
    std::size_t max_dim_ = 0;
    Scalar p_ = 2;
};

/// A chain (or cochain) in a fixed degree, with one coefficient per cell
/// of that degree, indexed by position in cells_of_dim(degree).
struct ChainVector {
    std::size_t degree = 0;
    std::vector<Scalar> coeffs;

    bool operator==(const ChainVector&) const = default;
    bool is_zero() const;
};

ChainVector zero_chain(const CellComplex& c, std::size_t degree);
ChainVector add(const ChainVector& a, const ChainVector& b, Scalar p);
ChainVector sub(const ChainVector& a, const ChainVector& b, Scalar p);
ChainVector scale(const ChainVector& a, Scalar s, Scalar p);

/// A chain map between two complexes, stored cell by cell.
struct ChainMap {
    // chain_of[id] = image chain in the target complex, same degree as id
    std::vector<ChainVector> chain_of;

    ChainVector apply(const CellComplex& target, const ChainVector& z,
                      const CellComplex& source, Scalar p) const;
};

/// Boundary of a chain.
ChainVector boundary(const CellComplex& c, const ChainVector& z);
/// Coboundary of a cochain (transpose boundary).
ChainVector coboundary(const CellComplex& c, const ChainVector& phi);

/// Basis of a (relative) homology group with explicit representatives and
/// a linear coordinate functional on cycles.
class HomologyBasis {
public:
    std::size_t degree() const { return degree_; }
    std::size_t rank() const { return reps_.size(); }
    const std::vector<ChainVector>& representatives() const { return reps_; }

    /// Class coordinates of a (relative) cycle; throws ValidationError if
    /// the chain is not a relative cycle of the pair.
    std::vector<Scalar> coords_of(const ChainVector& z) const;

    /// Like coords_of but without the cycle check (for callers that have
    /// already verified it).
    std::vector<Scalar> coords_of_unchecked(const ChainVector& z) const;

    bool is_relative_cycle(const ChainVector& z) const;

private:
    friend HomologyBasis homology_impl(const CellComplex&, const std::vector<CellId>&,
                                       const std::vector<CellId>&, const std::vector<CellId>&,
                                       std::size_t, bool);
    std::size_t degree_ = 0;
    std::vector<CellId> kept_;              // kept cells of the degree, increasing
    std::vector<std::size_t> kept_index_;   // position in coeffs for each kept cell
    FieldMatrix coord_matrix_;              // rank x |kept|
    FieldMatrix rel_boundary_;              // for the cycle check
    std::vector<ChainVector> reps_;
    Scalar p_ = 2;
    std::size_t chain_len_ = 0;
};

/// Homology of the complex in the given degree.  Out-of-range degrees
/// produce an empty basis.
HomologyBasis homology(const CellComplex& c, std::size_t degree);

/// Homology of the pair (c, sub): the quotient chain complex with the
/// cells of sub removed.  sub must be a closed subcomplex.
HomologyBasis relative_homology(const CellComplex& c, const std::set<CellId>& sub,
                                std::size_t degree);

/// Relative cohomology of the pair, via transposed boundary matrices.
/// Representatives are cochains supported on the kept cells.
HomologyBasis cohomology(const CellComplex& c, const std::set<CellId>& sub, std::size_t degree);

/// Homology of the chain complex spanned by an arbitrary kept-cell set
/// with the boundary projected onto it.  The kept set must be closed
/// enough that the projected boundary still squares to zero (true for
/// closed subcomplexes and for open stars inside their closures).
HomologyBasis homology_of_kept(const CellComplex& c, const std::set<CellId>& kept,
                               std::size_t degree);

/// Largest subset of keep closed under taking faces.
std::vector<CellId> maximal_subcomplex(const CellComplex& c, const std::vector<CellId>& keep);

/// The complex restricted to a closed id set, with an id translation
/// table old -> new (dense).
struct SubcomplexView {
    CellComplex complex;
    std::vector<CellId> to_old;             // new id -> old id
    std::vector<std::optional<CellId>> to_new; // old id -> new id
};

SubcomplexView restrict_complex(const CellComplex& c, const std::vector<CellId>& closed_ids);

/// Product complex with the usual graded boundary signs.
CellComplex product_complex(const CellComplex& a, const CellComplex& b);
/// Cell id of (ca, cb) inside product_complex(a, b).
CellId product_cell_id(const CellComplex& a, const CellComplex& b, CellId ca, CellId cb);

/// Euler characteristic from cell counts.
long long euler_characteristic(const CellComplex& c);

} // namespace toro
