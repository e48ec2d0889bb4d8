#include "gridlift/corpus.hpp"
#include "gridlift/triangulation.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gridlift;

TEST_CASE("validate accepts a single triangle and a split square")
{
    CHECK(validate(corpus::triangle()).ok());
    CHECK(validate(corpus::split_square(true)).ok());
    CHECK(validate(corpus::split_square(false)).ok());
}

TEST_CASE("validate rejects two triangles sharing only a vertex")
{
    std::vector<Triangle> tris{{{0, 1, 2}}, {{0, 3, 4}}};
    PlaneTriangulation g({0, 1, 2, 3, 4}, tris, {0, 1, 2, 0, 3, 4});
    auto rep = validate(g);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violation->kind != ViolationKind::TooSmall);
    CHECK_FALSE(PlaneTriangulation::try_from_triangles({0, 1, 2, 3, 4}, tris).has_value());
}

TEST_CASE("validate rejects non-manifold and mis-oriented input")
{
    // three triangles on edge 0-1
    std::vector<Triangle> fan{{{0, 1, 2}}, {{1, 0, 3}}, {{0, 1, 4}}};
    CHECK_FALSE(PlaneTriangulation::try_from_triangles({0, 1, 2, 3, 4}, fan).has_value());
    std::vector<Triangle> flipped{{{0, 1, 2}}, {{0, 2, 3}}};
    auto g = PlaneTriangulation::try_from_triangles({0, 1, 2, 3}, flipped);
    CHECK(g.has_value());
    std::vector<Triangle> bad{{{0, 1, 2}}, {{0, 3, 2}}};
    auto h = PlaneTriangulation::try_from_triangles({0, 1, 2, 3}, bad);
    CHECK((!h.has_value() || !validate(*h).ok()));
}

TEST_CASE("shedding vertices of stacked K4 and the split square")
{
    auto k4 = corpus::stacked_k4();
    CHECK(is_shedding_vertex(k4, 0));
    CHECK(is_shedding_vertex(k4, 1));
    CHECK(is_shedding_vertex(k4, 2));

    auto sq = corpus::split_square(true);
    CHECK_FALSE(is_shedding_vertex(sq, 0));
    CHECK(is_shedding_vertex(sq, 3));
    CHECK(is_shedding_vertex(sq, 1));
    CHECK_FALSE(is_shedding_vertex(sq, 2));
    CHECK(is_diagonal(sq, 0, 2));
    CHECK_FALSE(is_diagonal(sq, 0, 1));
    CHECK(diagonal_partners(sq, 0) == std::vector<VertexId>{2});
}

TEST_CASE("shedding_sequence examples")
{
    auto tri = shedding_sequence(corpus::triangle(), 0, 1);
    CHECK(tri.order == std::vector<VertexId>{0, 1, 2});

    auto sq = shedding_sequence(corpus::split_square(true), 0, 1);
    CHECK(sq.order == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(sq.degree_at(4) == 2);

    auto k4 = corpus::stacked_k4();
    auto s = shedding_sequence(k4, 0, 1);
    CHECK(is_shedding_sequence(k4, s.order));
    CHECK((s.order == std::vector<VertexId>{0, 1, 2, 3} || s.order == std::vector<VertexId>{0, 1, 3, 2}));
    CHECK(is_shedding_sequence(k4, {0, 1, 3, 2}));
    CHECK(is_shedding_sequence(k4, {0, 1, 3, 2}));
    CHECK_FALSE(is_shedding_sequence(k4, {0, 3, 1, 2}));

    CHECK_THROWS(shedding_sequence(corpus::split_square(true), 0, 2));
}

TEST_CASE("find_shedding_in_region on the split square")
{
    auto sq = corpus::split_square(true);
    CHECK(find_shedding_in_region(sq, Edge::of(0, 2), 3) == 3);
    CHECK(find_shedding_in_region(sq, Edge::of(0, 2), 1) == 1);
    CHECK_THROWS_AS(find_shedding_in_region(sq, Edge::of(0, 1), 3), NotADiagonal);
}

TEST_CASE("find_shedding_in_region on a fan matches brute force")
{
    auto g = corpus::polygon_fan(7);
    for (VertexId d : diagonal_partners(g, 0)) {
        for (VertexId side : g.boundary()) {
            if (side == 0 || side == d)
                continue;
            auto region = diagonal_side(g, Edge::of(0, d), side);
            VertexId v = find_shedding_in_region(g, Edge::of(0, d), side);
            CHECK(std::find(region.begin(), region.end(), v) != region.end());
            CHECK(v != 0);
            CHECK(v != d);
            CHECK(is_shedding_vertex(g, v));
            bool any = false;
            for (VertexId w : region)
                any = any || (w != 0 && w != d && g.is_boundary(w) && is_shedding_vertex(g, w));
            CHECK(any);
        }
    }
}

TEST_CASE("fast shedding test agrees with the definition")
{
    std::vector<PlaneTriangulation> gs;
    for (auto& inst : corpus::hand_instances())
        gs.push_back(inst.graph);
    for (std::uint64_t s = 1; s <= 15; ++s) {
        gs.push_back(corpus::random_stacked(6 + s, s));
        gs.push_back(corpus::random_disk(10 + s, 1 + s % 4, s));
    }
    for (const auto& g : gs) {
        if (g.n() < 4)
            continue;
        for (VertexId v : g.boundary())
            CHECK(is_shedding_vertex_fast(g, v) == is_shedding_vertex(g, v));
    }
}

TEST_CASE("shedding sequences are valid and reproducible")
{
    for (std::uint64_t s = 1; s <= 20; ++s) {
        auto g = corpus::random_disk(12 + s, s % 5, s);
        const auto& b = g.boundary();
        auto a = shedding_sequence(g, b[0], b[1]);
        std::string why;
        CHECK_MESSAGE(is_shedding_sequence(g, a.order, &why), why);
        CHECK(a == shedding_sequence(g, b[0], b[1]));
        auto rev = shedding_sequence(g, b[1], b[0]);
        CHECK(rev.at(1) == b[1]);
        CHECK(is_shedding_sequence(g, rev.order));
        for (std::size_t i = 4; i <= a.size(); ++i)
            CHECK(a.degree_at(i) >= 2);
    }
}

TEST_CASE("remove_vertex keeps a valid disk and rejects interior vertices")
{
    auto k4 = corpus::stacked_k4();
    CHECK_THROWS_AS(k4.remove_vertex(3), NotBoundary);
    auto g = k4.remove_vertex(0);
    CHECK(validate(g).ok());
    CHECK(g.n() == 3);
    CHECK(g.boundary().size() == 3);
}

TEST_CASE("euler relation on random instances")
{
    for (std::uint64_t s = 1; s <= 10; ++s) {
        auto g = corpus::random_disk(30, 5, s);
        REQUIRE(validate(g).ok());
        // V - E + F = 1 for a disk with F bounded faces
        CHECK(long(g.n()) - long(g.edge_count()) + long(g.triangles().size()) == 1);
    }
}
