#pragma once

#include "toro/periodic.hpp"
#include "toro/sheaf.hpp"

namespace toro::fixtures {

// The periodic graph with three rows of vertices per column and four
// edges per period: row3->row3 (the horizontal line), row3->row2,
// row2->row1 and row1->row3.  Its fiber homology over the circle has the
// dimensions (vertex 5, edge 4) upstairs and (vertex 3, edge 4) downstairs.
inline PeriodicComplex running_example(std::size_t n, Scalar p) {
    std::vector<std::vector<Rat>> coords;
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t r = 0; r < 3; ++r)
            coords.push_back({Rat(static_cast<long long>(m), static_cast<long long>(n)),
                              Rat(static_cast<long long>(r + 1))});
    auto v = [n](std::size_t m, std::size_t r) { return 3 * (m % n) + r; };
    std::vector<std::vector<CellId>> simplices;
    for (std::size_t m = 0; m < n; ++m) {
        simplices.push_back({v(m, 2), v(m + 1, 2)}); // the horizontal line
        simplices.push_back({v(m, 2), v(m + 1, 1)});
        simplices.push_back({v(m, 1), v(m + 1, 0)});
        simplices.push_back({v(m, 0), v(m + 1, 2)});
    }
    return PeriodicComplex::simplicial(std::move(coords), 1, simplices, p);
}

// The chain of the horizontal line of running_example(n), as a cycle in
// the quotient complex (all row3->row3 edges, coherently oriented).
inline ChainVector horizontal_line(const PeriodicComplex& g, std::size_t n) {
    const auto& sc = g.simplicial_complex();
    const auto& c = g.complex();
    ChainVector z = zero_chain(c, 1);
    const Scalar p = c.characteristic();
    for (std::size_t m = 0; m < n; ++m) {
        CellId a = 3 * m + 2, b = 3 * ((m + 1) % n) + 2;
        std::vector<CellId> key{std::min(a, b), std::max(a, b)};
        CellId e = *sc.find(key);
        // orient from column m to column m+1
        Scalar coeff = a < b ? 1 : fp_neg(1, p);
        std::size_t pos = c.index_in_dim(e);
        z.coeffs[pos] = fp_add(z.coeffs[pos], coeff, p);
    }
    return z;
}

// A finitely supported cycle of the covering space pushed down to the
// quotient: go right along row3->row2, row2->row1, row1->row3 and return
// along three horizontal edges.  Null-homologous in the cover, hence
// non-toroidal downstairs.
inline ChainVector finite_lift_cycle(const PeriodicComplex& g, std::size_t n, std::size_t m0) {
    if (n < 4) throw std::runtime_error("finite lift cycle needs n >= 4");
    const auto& sc = g.simplicial_complex();
    const auto& c = g.complex();
    const Scalar p = c.characteristic();
    ChainVector z = zero_chain(c, 1);
    auto v = [n](std::size_t m, std::size_t r) { return 3 * (m % n) + r; };
    auto put = [&](CellId a, CellId b, bool forward) {
        std::vector<CellId> key{std::min(a, b), std::max(a, b)};
        CellId e = *sc.find(key);
        Scalar coeff = (a < b) == forward ? 1 : fp_neg(1, p);
        std::size_t pos = c.index_in_dim(e);
        z.coeffs[pos] = fp_add(z.coeffs[pos], coeff, p);
    };
    // forward diagonals
    put(v(m0, 2), v(m0 + 1, 1), true);
    put(v(m0 + 1, 1), v(m0 + 2, 0), true);
    put(v(m0 + 2, 0), v(m0 + 3, 2), true);
    // back along the horizontal line
    put(v(m0 + 2, 2), v(m0 + 3, 2), false);
    put(v(m0 + 1, 2), v(m0 + 2, 2), false);
    put(v(m0, 2), v(m0 + 1, 2), false);
    return z;
}

// A cubical model of a cylinder: a 2-complex in a periodic x time a free
// y grid, one tube of squares around the periodic direction.
inline PeriodicComplex cubical_tube(long long nx, Scalar p) {
    std::vector<Cube> cubes;
    for (long long x = 0; x < nx; ++x) cubes.push_back(Cube{{x, 0}, 0b11});
    return PeriodicComplex::cubical({nx, 1}, 1, cubes, p);
}

// Explicit bisheaf of the running example over an m-vertex circle, with
// the displayed repeated-unit matrices: sheaf F^5 at vertices, F^4 at
// edges; homology cosheaf F^3 at vertices, F^4 at edges.
inline Bisheaf explicit_running_bisheaf(std::size_t m, Scalar p) {
    auto base = std::make_shared<CellComplex>(circle_complex(m, p));
    Bisheaf b;
    b.sheaf.base = base;
    b.cosheaf.base = base;
    auto R = FieldMatrix::from_rows(
        {{1, 0, 1, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}}, p);
    auto L = FieldMatrix::from_rows(
        {{1, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}}, p);
    auto Lc = FieldMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}, p);
    auto Rc = FieldMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}, p);
    auto Vv = FieldMatrix::from_rows({{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}, p);
    b.sheaf.stalk_dim.assign(2 * m, 4);
    b.cosheaf.stalk_dim.assign(2 * m, 4);
    b.vertical.assign(2 * m, FieldMatrix::identity(4, p));
    for (std::size_t j = 0; j < m; ++j) {
        b.sheaf.stalk_dim[j] = 5;
        b.cosheaf.stalk_dim[j] = 3;
        b.vertical[j] = Vv;
        CellId e = m + j, v = j, w = (j + 1) % m;
        b.sheaf.maps[{e, v}] = R;  // edge to the vertex it starts at
        b.sheaf.maps[{e, w}] = L;  // edge to the vertex it ends at
        b.cosheaf.maps[{e, v}] = Lc;
        b.cosheaf.maps[{e, w}] = Rc;
    }
    return b;
}

// Degree-1 bisheaf of the twisted-tube example over a two-vertex circle
// (v0 under a disc, v1 between discs), transcribed matrices.
inline Bisheaf torsion_bisheaf_deg1(Scalar p) {
    auto base = std::make_shared<CellComplex>(circle_complex(2, p));
    Bisheaf b;
    b.sheaf.base = base;
    b.cosheaf.base = base;
    b.sheaf.stalk_dim = {4, 3, 3, 3};
    b.cosheaf.stalk_dim = {1, 1, 1, 1};
    auto one = FieldMatrix::identity(1, p);
    b.sheaf.maps[{2, 0}] = FieldMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, p);
    b.sheaf.maps[{2, 1}] = FieldMatrix::identity(3, p);
    b.sheaf.maps[{3, 1}] = FieldMatrix::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, p);
    b.sheaf.maps[{3, 0}] = FieldMatrix::from_rows({{1, 0, 0, 1}, {0, 1, 0, -1}, {0, 0, 1, 0}}, p);
    b.cosheaf.maps[{2, 0}] = one;
    b.cosheaf.maps[{2, 1}] = one;
    b.cosheaf.maps[{3, 1}] = one;
    b.cosheaf.maps[{3, 0}] = one;
    b.vertical = {FieldMatrix::from_rows({{1, 1, 1, 0}}, p),
                  FieldMatrix::from_rows({{1, 1, 1}}, p),
                  FieldMatrix::from_rows({{1, 1, 1}}, p),
                  FieldMatrix::from_rows({{1, 1, 1}}, p)};
    return b;
}

// Degree-2 bisheaf of the same example; the monodromy around the circle
// composes to the swap.
inline Bisheaf torsion_bisheaf_deg2(Scalar p) {
    auto base = std::make_shared<CellComplex>(circle_complex(2, p));
    Bisheaf b;
    b.sheaf.base = base;
    b.cosheaf.base = base;
    b.sheaf.stalk_dim = {4, 3, 3, 3};
    b.cosheaf.stalk_dim = {2, 2, 2, 2};
    auto id2 = FieldMatrix::identity(2, p);
    b.sheaf.maps[{2, 0}] = FieldMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, p);
    b.sheaf.maps[{2, 1}] = FieldMatrix::identity(3, p);
    b.sheaf.maps[{3, 1}] = FieldMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, p);
    b.sheaf.maps[{3, 0}] = FieldMatrix::from_rows({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, -1}}, p);
    b.cosheaf.maps[{2, 0}] = id2;
    b.cosheaf.maps[{2, 1}] = id2;
    b.cosheaf.maps[{3, 1}] = FieldMatrix::from_rows({{0, 1}, {1, 0}}, p);
    b.cosheaf.maps[{3, 0}] = id2;
    auto V4 = FieldMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 1, 0}}, p);
    auto V3 = FieldMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}, p);
    b.vertical = {V4, V3, V3, V3};
    return b;
}

// One-periodic slice of the triply periodic minimal surface example: the
// constant rank-one local system with identity maps everywhere.
inline Bisheaf schwarz_p_bisheaf_1d(Scalar p) {
    auto base = std::make_shared<CellComplex>(circle_complex(2, p));
    Bisheaf b;
    b.sheaf.base = base;
    b.cosheaf.base = base;
    b.sheaf.stalk_dim = {1, 1, 1, 1};
    b.cosheaf.stalk_dim = {1, 1, 1, 1};
    auto one = FieldMatrix::identity(1, p);
    for (const Relation& r : covering_relations(*base)) {
        b.sheaf.maps[r] = one;
        b.cosheaf.maps[r] = one;
    }
    b.vertical.assign(4, one);
    return b;
}

// Its two-periodic diagnostic: the rank-one local systems on a torus base
// with all vertical maps zero (the degree-two cap vanishes).
inline Bisheaf schwarz_p_bisheaf_2d(Scalar p) {
    auto c1 = circle_complex(2, p);
    auto base = std::make_shared<CellComplex>(product_complex(c1, c1));
    Bisheaf b;
    b.sheaf.base = base;
    b.cosheaf.base = base;
    b.sheaf.stalk_dim.assign(base->size(), 1);
    b.cosheaf.stalk_dim.assign(base->size(), 1);
    auto one = FieldMatrix::identity(1, p);
    for (const Relation& r : covering_relations(*base)) {
        b.sheaf.maps[r] = one;
        b.cosheaf.maps[r] = one;
    }
    b.vertical.assign(base->size(), FieldMatrix::zero(1, 1, p));
    return b;
}

} // namespace toro::fixtures
