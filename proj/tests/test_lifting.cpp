#include "gridlift/corpus.hpp"
#include "gridlift/lifting.hpp"
#include "gridlift/verify.hpp"

#include <doctest.h>

using namespace gridlift;

namespace {

LiftedPolyhedron lift_of(const PlaneTriangulation& g)
{
    auto seq = shedding_sequence(g, g.boundary()[0], g.boundary()[1]);
    return lift(grid_embed(g, seq), seq);
}

}  // namespace

TEST_CASE("height_bound values")
{
    CHECK(height_bound(3, 0) == 1);
    CHECK(height_bound(4, 1) == 32702465);
    CHECK(height_bound(10, 1) == parse_int("49900000001"));
}

TEST_CASE("triangle lifts flat")
{
    auto p = lift_of(corpus::triangle());
    for (const auto& h : p.heights)
        CHECK(h == 0);
    CHECK(p.facets.size() == 1);
    CHECK(p.max_height() == 0);
}

TEST_CASE("stacked K4 lifts to a tetrahedron")
{
    auto g = corpus::stacked_k4();
    auto seq = make_sequence(g, {0, 1, 3, 2});
    auto p = lift(grid_embed(g, seq), seq);
    CHECK(p.heights[0] == 0);
    CHECK(p.heights[1] == 0);
    CHECK(p.heights[3] == 0);
    CHECK(p.heights[2] == 1);
    CHECK(p.m[2] == 0);
    CHECK(check_lift_convex(p).pass);

    auto poly = truncate_to_polytope(p);
    CHECK(poly.vertices.size() == 4);
    CHECK(poly.faces.size() == 4);
    std::vector<std::array<std::size_t, 3>> faces;
                for (const auto& f : poly.faces)
                    faces.push_back({f[0], f[1], f[2]});
    CHECK(check_polytope_convex(poly.points, faces).pass);
}

TEST_CASE("square boundary cannot be truncated")
{
    auto p = lift_of(corpus::split_square(true));
    CHECK(check_lift_convex(p).pass);
    CHECK_THROWS_AS(truncate_to_polytope(p), BoundaryNotTriangle);
}

TEST_CASE("lift of a non sequentially convex drawing is refused")
{
    auto g = corpus::split_square(true);
    auto seq = shedding_sequence(g, 0, 1);
    // (1,2) pushed to the right of (2,2) makes the upper chain fold back
    PlaneTriangulation bad(g.vertices(), g.triangles(), g.boundary(),
                           std::vector<IntPoint2>{{1, 1}, {2, 1}, {2, 2}, {3, 2}});
    CHECK_THROWS_AS(lift_drawing(bad, seq), NotSequentiallyConvex);
}

TEST_CASE("lifts of random instances are convex and respect the step bound")
{
    for (std::uint64_t s = 1; s <= 12; ++s) {
        PlaneTriangulation g = s % 2 ? corpus::random_stacked(5 + 3 * s, s)
                                     : corpus::random_disk(6 + 3 * s, 2, s);
        auto seq = shedding_sequence(g, g.boundary()[0], g.boundary()[1]);
        auto emb = grid_embed(g, seq);
        auto p = lift(emb, seq);
        CAPTURE(s);
        CHECK(check_lift_convex(p).pass);
        CHECK(globally_convex(p.graph, p.points));
        CHECK(check_vertical_projection(emb.graph, p.points).pass);
        CHECK(check_step_heights(p.graph, p.sequence, p.points).pass);
        for (std::size_t i = 4; i <= seq.size(); ++i) {
            VertexId v = seq.at(i);
            CHECK(p.heights[v] >= 1);
            CHECK(p.heights[v] <= height_bound(g.n(), p.m[v]));
        }
        if (g.boundary().size() == 3) {
            auto poly = truncate_to_polytope(p);
            std::vector<std::array<std::size_t, 3>> faces;
                for (const auto& f : poly.faces)
                    faces.push_back({f[0], f[1], f[2]});
            CHECK(check_polytope_convex(poly.points, faces).pass);
            CHECK(poly.faces.size() == g.triangles().size() + 1);
        }
    }
}

TEST_CASE("heights are minimal")
{
    auto g = corpus::random_stacked(12, 4);
    auto seq = shedding_sequence(g, g.boundary()[0], g.boundary()[1]);
    auto p = lift(grid_embed(g, seq), seq);
    // lowering any later vertex by one breaks convexity of its prefix
    for (std::size_t i = 4; i <= seq.size(); ++i) {
        auto pts = p.points;
        VertexId v = seq.at(i);
        pts[v].z -= 1;
        auto prefix = prefix_graph(p.graph, seq, i);
        CHECK_FALSE(globally_convex(prefix, pts));
    }
}
