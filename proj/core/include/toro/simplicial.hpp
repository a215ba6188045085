#pragma once

#include <map>

#include "toro/complex.hpp"

namespace toro {

/// A cell complex whose cells carry ordered vertex lists (ascending vertex
/// id).  Vertices are the 0-cells and vertex id == cell id.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds from maximal (or any) simplices given as vertex id sets;
    /// all faces are generated.  num_vertices fixes the vertex count so
    /// isolated vertices survive.
    static SimplicialComplex from_simplices(std::size_t num_vertices,
                                            const std::vector<std::vector<CellId>>& simplices,
                                            Scalar p);

    const CellComplex& complex() const { return complex_; }
    const std::vector<CellId>& vertices_of(CellId cell) const { return verts_[cell]; }

    /// Cell id for a vertex set, if present.
    std::optional<CellId> find(const std::vector<CellId>& sorted_vertices) const;

private:
    CellComplex complex_;
    std::vector<std::vector<CellId>> verts_;
    std::map<std::vector<CellId>, CellId> lookup_;
};

/// Barycentric subdivision together with the subdivision chain map
/// (original cell -> sum of its subdividing simplices, with signs).
struct Subdivision {
    SimplicialComplex sub;
    ChainMap carrier;
    // new vertex id of the barycenter of each original cell
    std::vector<CellId> barycenter_of;
};

/// Throws UnsupportedGeometry if the input is not simplicial.
Subdivision barycentric_subdivide(const SimplicialComplex& c);

/// Front-face cap product of a chain with a cochain of degree d: on a
/// simplex [v0..vn] the cochain is evaluated on the front d-face and the
/// back (n-d)-face is kept.  Satisfies
///   boundary(z cap phi) = (-1)^d (boundary(z) cap phi - z cap delta(phi)).
ChainVector cap_product(const SimplicialComplex& c, const ChainVector& z, const ChainVector& phi);

} // namespace toro
