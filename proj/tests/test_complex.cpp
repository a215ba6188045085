#include "doctest.h"

#include "toro/complex.hpp"
#include "toro/simplicial.hpp"

using namespace toro;

namespace {

// circle with n vertices and n edges (v_j -> v_{j+1 mod n})
CellComplex circle(std::size_t n, Scalar p) {
    std::vector<Cell> cells;
    std::vector<std::vector<std::pair<CellId, Scalar>>> bnd;
    for (std::size_t j = 0; j < n; ++j) {
        cells.push_back({j, 0, "v" + std::to_string(j)});
        bnd.push_back({});
    }
    for (std::size_t j = 0; j < n; ++j) {
        cells.push_back({n + j, 1, "e" + std::to_string(j)});
        CellId a = j, b = (j + 1) % n;
        if (a == b)
            bnd.push_back({});
        else
            bnd.push_back({{b, 1}, {a, fp_neg(1, p)}});
    }
    return CellComplex(std::move(cells), std::move(bnd), p);
}

} // namespace

TEST_CASE("validate accepts simple complexes and rejects bad gradation") {
    CellComplex pt({{0, 0, "v"}}, {{}}, 2);
    CHECK_NOTHROW(pt.validate());

    auto tri = SimplicialComplex::from_simplices(3, {{0, 1, 2}}, 2);
    CHECK_NOTHROW(tri.complex().validate());

    // edge listing another edge as a face
    std::vector<Cell> cells{{0, 1, "e0"}, {1, 1, "e1"}};
    std::vector<std::vector<std::pair<CellId, Scalar>>> bnd{{}, {{0, 1}}};
    CellComplex bad(std::move(cells), std::move(bnd), 2);
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("circle homology for several sizes and fields") {
    for (Scalar p : {2u, 3u, 5u}) {
        for (std::size_t n : {1u, 2u, 4u, 7u}) {
            auto c = circle(n, p);
            c.validate();
            CHECK(homology(c, 0).rank() == 1);
            CHECK(homology(c, 1).rank() == 1);
            CHECK(homology(c, 2).rank() == 0);
        }
    }
}

TEST_CASE("two disjoint vertices have H0 of rank 2") {
    CellComplex c({{0, 0, "a"}, {1, 0, "b"}}, {{}, {}}, 2);
    CHECK(homology(c, 0).rank() == 2);
}

TEST_CASE("degree out of range gives rank 0") {
    auto c = circle(3, 2);
    CHECK(homology(c, 5).rank() == 0);
}

TEST_CASE("relative homology of the interval mod endpoints") {
    // one edge, both endpoints in the subcomplex
    auto sc = SimplicialComplex::from_simplices(2, {{0, 1}}, 2);
    std::set<CellId> ends{0, 1};
    CHECK(relative_homology(sc.complex(), ends, 1).rank() == 1);
    CHECK(relative_homology(sc.complex(), ends, 0).rank() == 0);

    // (X, X) has vanishing homology in every degree
    std::set<CellId> all{0, 1, 2};
    CHECK(relative_homology(sc.complex(), all, 0).rank() == 0);
    CHECK(relative_homology(sc.complex(), all, 1).rank() == 0);

    // non-closed subcomplex is rejected
    std::set<CellId> open_sub{2};
    CHECK_THROWS_AS(relative_homology(sc.complex(), open_sub, 1), ValidationError);
}

TEST_CASE("cohomology examples") {
    auto c = circle(5, 2);
    CHECK(cohomology(c, {}, 1).rank() == 1);
    CHECK(cohomology(c, {}, 0).rank() == 1);

    auto sc = SimplicialComplex::from_simplices(2, {{0, 1}}, 3);
    std::set<CellId> ends{0, 1};
    CHECK(cohomology(sc.complex(), ends, 1).rank() == 1);
    std::set<CellId> all{0, 1, 2};
    CHECK(cohomology(sc.complex(), all, 1).rank() == 0);
}

TEST_CASE("coords_of is linear, standard on representatives, zero on boundaries") {
    for (Scalar p : {2u, 3u}) {
        auto sc = SimplicialComplex::from_simplices(4, {{0, 1, 2}, {1, 2, 3}, {0, 3}}, p);
        const auto& c = sc.complex();
        c.validate();
        auto h1 = homology(c, 1);
        REQUIRE(h1.rank() == 1);
        for (std::size_t i = 0; i < h1.rank(); ++i) {
            auto coords = h1.coords_of(h1.representatives()[i]);
            for (std::size_t j = 0; j < coords.size(); ++j)
                CHECK(coords[j] == (i == j ? 1u : 0u));
        }
        // boundaries map to zero
        const auto& tris = c.cells_of_dim(2);
        for (std::size_t t = 0; t < tris.size(); ++t) {
            ChainVector z = zero_chain(c, 2);
            z.coeffs[t] = 1;
            auto b = boundary(c, z);
            auto coords = h1.coords_of(b);
            for (Scalar v : coords) CHECK(v == 0);
        }
        // linearity on sums of cycles
        auto z1 = h1.representatives()[0];
        auto b1 = boundary(c, ChainVector{2, {1, 0}});
        auto mix = add(z1, b1, p);
        CHECK(h1.coords_of(mix) == h1.coords_of(z1));
    }
}

TEST_CASE("euler characteristic equals alternating homology ranks") {
    for (Scalar p : {2u, 3u}) {
        std::vector<CellComplex> corpus;
        corpus.push_back(circle(4, p));
        corpus.push_back(SimplicialComplex::from_simplices(4, {{0, 1, 2}, {1, 2, 3}}, p).complex());
        corpus.push_back(SimplicialComplex::from_simplices(5, {{0, 1, 2, 3}, {3, 4}}, p).complex());
        for (const auto& c : corpus) {
            c.validate();
            long long alt = 0;
            for (std::size_t k = 0; k <= c.max_dim(); ++k) {
                long long r = static_cast<long long>(homology(c, k).rank());
                alt += k % 2 == 0 ? r : -r;
            }
            CHECK(euler_characteristic(c) == alt);
        }
    }
}

TEST_CASE("maximal_subcomplex") {
    auto sc = SimplicialComplex::from_simplices(4, {{0, 1, 2}, {1, 2, 3}}, 2);
    const auto& c = sc.complex();

    // an already closed set is returned unchanged
    auto closed = c.closure({*sc.find({0, 1, 2})});
    CHECK(maximal_subcomplex(c, closed) == closed);

    // a bare edge with no endpoints collapses to nothing
    CHECK(maximal_subcomplex(c, {*sc.find({0, 1})}).empty());

    // open star of vertex 1 in the two-triangle square: definition replay
    std::vector<CellId> star;
    for (const Cell& cell : c.cells()) {
        auto vs = sc.vertices_of(cell.id);
        if (std::find(vs.begin(), vs.end(), 1u) != vs.end()) star.push_back(cell.id);
    }
    auto got = maximal_subcomplex(c, star);
    std::set<CellId> star_set(star.begin(), star.end());
    std::set<CellId> expect;
    for (CellId id : star) {
        bool all_faces_in = true;
        for (CellId f : c.closure({id}))
            if (!star_set.count(f)) all_faces_in = false;
        if (all_faces_in) expect.insert(id);
    }
    // iterate the definition to a fixed point
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = expect.begin(); it != expect.end();) {
            bool ok = true;
            for (CellId f : c.closure({*it}))
                if (f != *it && !expect.count(f)) ok = false;
            if (!ok) {
                it = expect.erase(it);
                changed = true;
            } else
                ++it;
        }
    }
    CHECK(std::set<CellId>(got.begin(), got.end()) == expect);
}

TEST_CASE("product complex of two circles is a torus") {
    for (Scalar p : {2u, 3u}) {
        auto t = product_complex(circle(2, p), circle(2, p));
        t.validate();
        CHECK(homology(t, 0).rank() == 1);
        CHECK(homology(t, 1).rank() == 2);
        CHECK(homology(t, 2).rank() == 1);
    }
}
