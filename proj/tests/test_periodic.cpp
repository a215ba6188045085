#include "doctest.h"

#include "fixtures.hpp"

using namespace toro;

TEST_CASE("rational helpers") {
    CHECK(rat_floor(Rat(7, 2)) == 3);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_floor(Rat(3)) == 3);
    CHECK(crossings(Rat(1, 4), Rat(3, 4), Rat(1, 2)) == 1);
    CHECK(crossings(Rat(3, 4), Rat(1, 4), Rat(1, 2)) == -1);
    CHECK(crossings(Rat(0), Rat(1, 2), Rat(1, 2)) == 1); // endpoint counts
    CHECK(crossings(Rat(1, 2), Rat(1), Rat(1, 2)) == 0);
    CHECK(crossings(Rat(1, 8), Rat(17, 8), Rat(1, 2)) == 2);
}

TEST_CASE("interval meets open arc mod 1") {
    CHECK(meets_open_mod1({Rat(9, 10), Rat(11, 10)}, Rat(0), Rat(1, 4)));
    CHECK(!meets_open_mod1({Rat(1, 4), Rat(1, 2)}, Rat(1, 2), Rat(3, 4)));
    CHECK(meets_open_mod1({Rat(1, 4), Rat(1, 4)}, Rat(0), Rat(1, 2)));
    CHECK(!meets_open_mod1({Rat(1, 2), Rat(1, 2)}, Rat(1, 2), Rat(1)));
}

TEST_CASE("wrap flags recomputed from coordinates are coherent") {
    auto g = fixtures::running_example(4, 2);
    const auto& c = g.complex();
    for (CellId id = 0; id < c.size(); ++id) {
        Interval iv = g.projection(id, 0);
        CHECK(iv.hi - iv.lo < 1);
        CHECK(Rat(0) <= iv.lo);
        CHECK(iv.lo < 1);
    }
    // the edge from column 3 to column 0 wraps, the others do not
    const auto& sc = g.simplicial_complex();
    CellId wrap_edge = *sc.find({2, 9 + 2});
    CHECK(g.wraps(wrap_edge, 0));
    CellId plain_edge = *sc.find({2, 3 + 2});
    CHECK(!g.wraps(plain_edge, 0));
}

TEST_CASE("base cellulation of the running example") {
    auto g = fixtures::running_example(4, 2);
    auto b = base_cellulation(g, 0);
    REQUIRE(b.num_vertices() == 4);
    CHECK(b.vertex_angles == std::vector<Rat>{Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4)});
    CHECK(!b.artificial_vertex);
    auto circle = b.to_complex(2);
    circle.validate();
    CHECK(homology(circle, 1).rank() == 1);
}

TEST_CASE("base cellulation with two and three coordinates") {
    std::vector<std::vector<Rat>> coords{{Rat(0)}, {Rat(1, 2)}};
    auto g = PeriodicComplex::simplicial(coords, 1, {{0, 1}}, 2);
    auto b = base_cellulation(g, 0);
    CHECK(b.num_vertices() == 2);

    std::vector<std::vector<Rat>> coords3{{Rat(1, 10)}, {Rat(2, 5)}, {Rat(9, 10)}};
    auto g3 = PeriodicComplex::simplicial(coords3, 1, {{0, 1}, {1, 2}}, 2);
    auto b3 = base_cellulation(g3, 0);
    REQUIRE(b3.num_vertices() == 3);
    CHECK(b3.vertex_angles == std::vector<Rat>{Rat(1, 10), Rat(2, 5), Rat(9, 10)});
}

TEST_CASE("single-angle complex gets an artificial antipodal base vertex") {
    std::vector<std::vector<Rat>> coords{{Rat(1, 4), Rat(0)}, {Rat(1, 4), Rat(1)}};
    auto g = PeriodicComplex::simplicial(coords, 1, {{0, 1}}, 2);
    auto b = base_cellulation(g, 0);
    REQUIRE(b.num_vertices() == 2);
    CHECK(b.artificial_vertex);
    CHECK(b.artificial_angle == Rat(3, 4));
    CHECK_THROWS_AS(base_cellulation(g, 0, false), UnsupportedGeometry);

    // the far vertex star has empty preimage
    auto prep = subdivide_for_fibers(g, b);
    auto sa = star_preimages(prep.w, b);
    std::size_t far = b.vertex_angles[0] == Rat(3, 4) ? 0 : 1;
    CHECK(sa.preimage[far].empty());
}

TEST_CASE("star preimages of the running example count twelve cells per edge star") {
    auto g = fixtures::running_example(4, 2);
    auto b = base_cellulation(g, 0);
    auto prep = subdivide_for_fibers(g, b);
    CHECK(prep.rounds == 1); // aligned input: exactly the retract round
    auto sa = star_preimages(prep.w, b);

    for (std::size_t j = 0; j < 4; ++j) {
        CellId e = b.edge_cell(j), v = b.vertex_cell(j);
        CHECK(sa.preimage[e].size() == 12);
        // nesting into both endpoint stars
        for (CellId upper : {b.vertex_cell(j), b.vertex_cell((j + 1) % 4)}) {
            std::set<CellId> big(sa.preimage[upper].begin(), sa.preimage[upper].end());
            for (CellId id : sa.preimage[e]) CHECK(big.count(id));
        }
        // fiber homology downstairs: four pieces over an edge, three over a vertex
        std::set<CellId> ye(sa.retract[e].begin(), sa.retract[e].end());
        CHECK(homology_of_kept(prep.w.complex(), ye, 0).rank() == 4);
        std::set<CellId> yv(sa.retract[v].begin(), sa.retract[v].end());
        CHECK(homology_of_kept(prep.w.complex(), yv, 0).rank() == 3);
        // relative fiber homology upstairs: five over a vertex, four over an edge
        std::set<CellId> xv(sa.preimage[v].begin(), sa.preimage[v].end());
        CHECK(homology_of_kept(prep.w.complex(), xv, 1).rank() == 5);
        std::set<CellId> xe(sa.preimage[e].begin(), sa.preimage[e].end());
        CHECK(homology_of_kept(prep.w.complex(), xe, 1).rank() == 4);
    }
}

TEST_CASE("carrier of the fiber subdivision is a chain map") {
    auto g = fixtures::running_example(4, 3);
    auto b = base_cellulation(g, 0);
    auto prep = subdivide_for_fibers(g, b);
    auto z = fixtures::horizontal_line(g, 4);
    REQUIRE(boundary(g.complex(), z).is_zero());
    auto img = prep.carrier.apply(prep.w.complex(), z, g.complex(), 3);
    CHECK(boundary(prep.w.complex(), img).is_zero());
    CHECK(!img.is_zero());
}

TEST_CASE("cubical grid star preimages read off the columns") {
    auto g = fixtures::cubical_tube(4, 2);
    g.complex().validate();
    auto b = base_cellulation(g, 0);
    REQUIRE(b.num_vertices() == 4);
    auto prep = subdivide_for_fibers(g, b);
    prep.w.complex().validate();
    auto sa = star_preimages(prep.w, b);
    for (std::size_t j = 0; j < 4; ++j) {
        // every cell in an edge-star preimage projects into the open edge
        auto [s, e] = b.star(b.edge_cell(j));
        for (CellId id : sa.preimage[b.edge_cell(j)])
            CHECK(meets_open_mod1(prep.w.projection(id, 0), s, e));
        // the strip has a contractible interval fiber over every base cell
        std::set<CellId> ye(sa.retract[b.edge_cell(j)].begin(), sa.retract[b.edge_cell(j)].end());
        CHECK(homology_of_kept(prep.w.complex(), ye, 0).rank() == 1);
        CHECK(homology_of_kept(prep.w.complex(), ye, 1).rank() == 0);
    }
}

TEST_CASE("k-fold covers") {
    auto g = fixtures::running_example(4, 2);

    auto g1 = k_fold_cover(g, 0, 1);
    CHECK(g1.complex().size() == g.complex().size());

    auto g2 = k_fold_cover(g, 0, 2);
    g2.complex().validate();
    CHECK(g2.complex().cells_of_dim(0).size() == 2 * g.complex().cells_of_dim(0).size());
    CHECK(g2.complex().cells_of_dim(1).size() == 2 * g.complex().cells_of_dim(1).size());
    CHECK(homology(g2.complex(), 0).rank() == 1);

    // cover of the cubical tube doubles the cells and stays a tube
    auto t = fixtures::cubical_tube(3, 2);
    auto t2 = k_fold_cover(t, 0, 2);
    t2.complex().validate();
    CHECK(t2.complex().cells_of_dim(2).size() == 2 * t.complex().cells_of_dim(2).size());
    CHECK(homology(t2.complex(), 1).rank() == homology(t.complex(), 1).rank());
}

TEST_CASE("cover star assignments are copies of the base assignment") {
    auto g = fixtures::running_example(4, 2);
    auto b = base_cellulation(g, 0);
    auto prep = subdivide_for_fibers(g, b);
    auto sa = star_preimages(prep.w, b);

    auto g2 = k_fold_cover(g, 0, 2);
    auto b2 = base_cellulation(g2, 0);
    REQUIRE(b2.num_vertices() == 8);
    auto prep2 = subdivide_for_fibers(g2, b2);
    auto sa2 = star_preimages(prep2.w, b2);
    for (std::size_t j = 0; j < 8; ++j) {
        CHECK(sa2.preimage[b2.vertex_cell(j)].size() ==
              sa.preimage[b.vertex_cell(j % 4)].size());
        CHECK(sa2.preimage[b2.edge_cell(j)].size() == sa.preimage[b.edge_cell(j % 4)].size());
    }
}
