#include "gridlift/corpus.hpp"
#include "gridlift/embedding.hpp"
#include "gridlift/verify.hpp"

#include <doctest.h>

using namespace gridlift;

namespace {

std::vector<PlaneTriangulation> sample()
{
    std::vector<PlaneTriangulation> gs;
    for (auto& inst : corpus::hand_instances())
        gs.push_back(inst.graph);
    for (std::uint64_t s = 1; s <= 10; ++s) {
        gs.push_back(corpus::random_stacked(4 + 4 * s, s));
        gs.push_back(corpus::random_disk(8 + 3 * s, 1 + s % 4, 50 + s));
    }
    return gs;
}

SheddingSequence default_sequence(const PlaneTriangulation& g)
{
    return shedding_sequence(g, g.boundary()[0], g.boundary()[1]);
}

ExactRat abs_rat(const ExactRat& q) { return q < 0 ? ExactRat(-q) : q; }

}  // namespace

TEST_CASE("place_high_degree hand example")
{
    std::vector<IntPoint2> run{{0, 0}, {1, 3}, {4, 3}, {5, 0}};
    auto pl = place_high_degree(run);
    CHECK(pl.s == 3);
    CHECK(pl.u == -3);
    CHECK(pl.meet == Point2{make_rat(5, 2), make_rat(15, 2)});
    CHECK(pl.gamma == make_rat(1, 2));
    CHECK(pl.point == IntPoint2{3, 10});
}

TEST_CASE("place_high_degree rejects parallel support lines")
{
    std::vector<IntPoint2> run{{0, 0}, {1, 1}, {2, 1}, {3, 2}};
    CHECK_THROWS_AS(place_high_degree(run), ParallelSupportLines);
}

TEST_CASE("place_degree_two without shear copies the template apex")
{
    // w1 w2 equal to the template edge b1 b2 gives eta = 0
    auto pl = place_degree_two({-22, 0}, {22, 0}, {-22, 0}, {22, 0}, {0, 132});
    CHECK(pl.eta == 0);
    CHECK(pl.point == IntPoint2{0, 132});
}

TEST_CASE("triangle: rational and grid coordinates")
{
    auto g = corpus::triangle();
    auto seq = shedding_sequence(g, 0, 1);
    auto rat = rational_embed(g, seq);
    CHECK(rat.coords[0] == Point2{0, 0});
    CHECK(rat.coords[1] == Point2{2, 0});
    CHECK(rat.coords[2] == Point2{1, 1});

    auto emb = grid_embed(g, seq);
    CHECK(emb.templ.alpha == 22);
    CHECK(emb.templ.beta == 132);
    CHECK(emb.coords[0] == IntPoint2{-22, 0});
    CHECK(emb.coords[1] == IntPoint2{22, 0});
    CHECK(emb.coords[2] == IntPoint2{0, 132});
}

TEST_CASE("scaled template constants")
{
    for (const auto& g : sample()) {
        auto seq = default_sequence(g);
        auto og = orient_for_base(g, seq);
        auto trees = build_shedding_trees(og, seq);
        auto red = build_reduced_triangulation(reduce(trees, seq), trees);
        auto t = scale_template(red, g.n());
        std::size_t n = g.n();
        CAPTURE(n);
        CHECK(t.alpha == ExactInt(2 * n * n + n + 1));
        CHECK(t.beta == 2 * ExactInt(n) * t.alpha);
        CHECK(t.max_abs_slope <= ExactRat(2 * n * n));
        CHECK(t.min_slope_gap >= ExactRat(2 * n));
        CHECK(t.width() <= t.alpha * ExactInt(2 * (n - 2)));
        // (0,0) lies on the base edge
        CHECK(t.z[1].y == 0);
        CHECK(t.z[2].y == 0);
        CHECK(t.z[1].x <= 0);
        CHECK(t.z[2].x >= 0);
    }
}

TEST_CASE("rational embedding is a sequentially convex drawing")
{
    for (const auto& g : sample()) {
        auto seq = default_sequence(g);
        auto rat = rational_embed(g, seq);
        CHECK(rat.coords[seq.at(1)] == Point2{0, 0});
        CHECK(rat.coords[seq.at(2)] == Point2{2, 0});
        CHECK(check_embedding(rat.graph, rat.coords).pass);
        CHECK(check_sequentially_convex(rat.graph, seq, rat.coords).pass);
    }
}

TEST_CASE("grid embedding over the sample")
{
    for (const auto& g : sample()) {
        auto seq = default_sequence(g);
        auto emb = grid_embed(g, seq);
        std::size_t n = g.n();
        ExactInt nn(n);
        CAPTURE(n);
        CHECK(emb.audit.size() == n - 2);
        CHECK(emb.coords[seq.at(1)].x < 0);
        CHECK(emb.coords[seq.at(2)].x > 0);
        CHECK(emb.width() <= 4 * nn * nn * nn);
        CHECK(emb.height() <= 8 * nn * nn * nn * nn * nn);
        CHECK_FALSE(sequential_convexity_failure(emb.graph, seq, emb.coords).has_value());
        CHECK(check_face_isomorphic(g, emb.graph).pass);
        CHECK(check_embedding(emb.graph).pass);
        for (std::size_t k = 0; k + 1 < emb.chain.size(); ++k) {
            auto s = slope(emb.coords[emb.chain[k]], emb.coords[emb.chain[k + 1]]);
            CHECK(abs_rat(s) <= ExactRat(2 * n * n + n));
        }
        for (const auto& a : emb.audit) {
            CHECK(a.slopes_decreasing);
            CHECK(a.min_x_slack >= 0);
            CHECK(a.max_slope_deviation <= ExactRat(n));
            if (a.s_shift) {
                CHECK(*a.s_shift > 0);
                CHECK(*a.s_shift < 1);
                CHECK(*a.u_shift > 0);
                CHECK(*a.u_shift <= 1);
            }
        }
    }
}

TEST_CASE("grid embedding is deterministic")
{
    auto g = corpus::random_stacked(40, 9);
    auto seq = default_sequence(g);
    auto a = grid_embed(g, seq);
    auto b = grid_embed(g, seq);
    CHECK(a.coords == b.coords);
}
