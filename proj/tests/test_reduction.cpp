#include "gridlift/corpus.hpp"
#include "gridlift/reduction.hpp"

#include <doctest.h>

using namespace gridlift;

namespace {

std::vector<PlaneTriangulation> sample()
{
    std::vector<PlaneTriangulation> gs;
    for (auto& inst : corpus::hand_instances())
        gs.push_back(inst.graph);
    for (std::uint64_t s = 1; s <= 12; ++s) {
        gs.push_back(corpus::random_stacked(5 + 3 * s, s));
        gs.push_back(corpus::random_disk(8 + 2 * s, 1 + s % 3, 100 + s));
    }
    return gs;
}

SheddingSequence default_sequence(const PlaneTriangulation& g)
{
    return shedding_sequence(g, g.boundary()[0], g.boundary()[1]);
}

}  // namespace

TEST_CASE("T3 of a triangle has three nodes")
{
    auto g = corpus::triangle();
    auto seq = shedding_sequence(g, 0, 1);
    auto trees = build_shedding_trees(orient_for_base(g, seq), seq);
    CHECK(trees.node_count(2) == 1);
    CHECK(trees.node_count(3) == 3);
    CHECK(trees.canonical(3) == "(.,.)");
    CHECK(trees.nodes[0].left_child == long(SheddingTrees::left_node(3)));
    CHECK(trees.nodes[0].right_child == long(SheddingTrees::right_node(3)));
}

TEST_CASE("split square gives five nodes in T4")
{
    auto g = corpus::split_square(true);
    auto seq = shedding_sequence(g, 0, 1);
    auto og = orient_for_base(g, seq);
    auto trees = build_shedding_trees(og, seq);
    CHECK(trees.node_count(4) == 5);
    const auto& left = trees.nodes[SheddingTrees::left_node(4)];
    const auto& right = trees.nodes[SheddingTrees::right_node(4)];
    CHECK(left.parent == right.parent);
    CHECK(left.step == 4);
    // a_4 = 3 is attached along the edge 0-2
    const auto& par = trees.nodes[left.parent];
    CHECK(Edge::of(par.left, par.right) == Edge::of(0, 2));
}

TEST_CASE("all degree-two steps contract nothing")
{
    auto g = corpus::polygon_fan(6);
    auto seq = shedding_sequence(g, 0, 1);
    auto trees = build_shedding_trees(orient_for_base(g, seq), seq);
    auto rs = reduce(trees, seq);
    bool all_two = true;
    for (std::size_t i = 4; i <= seq.size(); ++i)
        all_two = all_two && seq.degree_at(i) == 2;
    REQUIRE(all_two);
    CHECK(rs.contracted.empty());
    CHECK(rs.size() == seq.size());
    CHECK(rs.canonical(seq.size()) == trees.canonical(seq.size()));
}

TEST_CASE("stacked K4 reduces to T3")
{
    auto g = corpus::stacked_k4();
    // the interior vertex cannot come last
    auto seq = make_sequence(g, {0, 1, 3, 2});
    REQUIRE(seq.degree_at(4) == 3);
    auto trees = build_shedding_trees(orient_for_base(g, seq), seq);
    auto rs = reduce(trees, seq);
    CHECK(rs.steps == std::vector<std::size_t>{1, 2, 3});
    CHECK(rs.canonical(4) == "(.,.)");
    CHECK(rs.node_count(4) == 3);
    CHECK(rs.h[4] == 3);
}

TEST_CASE("reduced triangulation with three steps")
{
    auto g = corpus::triangle();
    auto seq = shedding_sequence(g, 0, 1);
    auto trees = build_shedding_trees(orient_for_base(g, seq), seq);
    auto red = build_reduced_triangulation(reduce(trees, seq), trees);
    CHECK(red.size == 3);
    CHECK(red.m == 0);
    CHECK(red.m_prime == 0);
    CHECK(red.points[1] == IntPoint2{-1, 0});
    CHECK(red.points[2] == IntPoint2{1, 0});
    CHECK(red.points[3] == IntPoint2{0, 1});
}

TEST_CASE("reduced structures over the sample")
{
    for (const auto& g : sample()) {
        auto seq = default_sequence(g);
        auto og = orient_for_base(g, seq);
        auto trees = build_shedding_trees(og, seq);
        auto rs = reduce(trees, seq);
        auto red = build_reduced_triangulation(rs, trees);
        std::size_t R = rs.size();
        CAPTURE(g.n());

        // rho is an increasing bijection and h is a step function onto 1..R
        for (std::size_t r = 1; r <= R; ++r)
            CHECK(rs.rho[rs.steps[r - 1]] == r);
        for (std::size_t i = 1; i <= seq.size(); ++i) {
            std::size_t hi = rs.h[i];
            REQUIRE(hi >= 1);
            CHECK(rs.steps[hi - 1] <= i);
            if (hi < R)
                CHECK(i < rs.steps[hi]);
        }
        for (std::size_t i = 3; i <= seq.size(); ++i)
            CHECK(rs.full_binary(i));

        CHECK(validate(red.gstar).ok());
        CHECK(red.m + red.m_prime + 3 == R);
        CHECK(red.width() <= ExactInt(2 * (R - 2)));
        CHECK(red.height() <= ExactInt((R - 1) * (R - 2) / 2));
        CHECK(is_shedding_sequence(red.gstar, red.astar.order));
        for (std::size_t r = 4; r <= R; ++r)
            CHECK(red.astar.degree_at(r) == 2);

        // reduced tree shapes match the shedding trees of G* itself
        auto star_trees = build_shedding_trees(orient_for_base(red.gstar, red.astar), red.astar);
        for (std::size_t r = 3; r <= R; ++r)
            CHECK(star_trees.canonical(r) == rs.canonical(rs.steps[r - 1]));
    }
}

TEST_CASE("template points are strictly convex")
{
    for (const auto& g : sample()) {
        auto seq = default_sequence(g);
        auto trees = build_shedding_trees(orient_for_base(g, seq), seq);
        auto red = build_reduced_triangulation(reduce(trees, seq), trees);
        for (const auto& t : red.gstar.triangles())
            CHECK(orient2d(red.points[t.v[0] + 1], red.points[t.v[1] + 1], red.points[t.v[2] + 1]) == 1);
        CHECK(red.max_abs_slope() <= ExactRat(g.n()));
    }
}

TEST_CASE("malformed sequence is rejected")
{
    auto g = corpus::split_square(true);
    auto seq = make_sequence(g, {0, 2, 1, 3});
    CHECK_THROWS(build_shedding_trees(orient_for_base(g, seq), seq));
}
