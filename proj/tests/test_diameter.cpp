#include "gridlift/corpus.hpp"
#include "gridlift/diameter.hpp"
#include "gridlift/verify.hpp"

#include <doctest.h>

#include <set>

using namespace gridlift;

TEST_CASE("tau profile of a triangle")
{
    auto g = corpus::triangle();
    auto prof = tau_profile(g, shedding_sequence(g, 0, 1));
    CHECK(prof.heights == std::vector<std::size_t>{1, 2, 3});
    CHECK(prof.tau == 3);
    CHECK(prof.precedes(0, 2));
    CHECK_FALSE(prof.precedes(2, 0));
}

TEST_CASE("tau profile of the split square")
{
    auto g = corpus::split_square(true);
    auto seq = make_sequence(g, {0, 1, 2, 3});
    auto prof = tau_profile(g, seq);
    std::set<VertexId> preds(prof.predecessors[3].begin(), prof.predecessors[3].end());
    CHECK(preds == std::set<VertexId>{0, 2});
    CHECK(prof.heights[3] == 4);
    CHECK(prof.tau == 4);
}

TEST_CASE("exhaustive minimum tau")
{
    CHECK(min_tau_exhaustive(corpus::triangle()).first == 3);
    CHECK(min_tau_exhaustive(corpus::split_square(true)).first == 4);
    CHECK(min_tau_exhaustive(corpus::split_square(false)).first == 4);
    CHECK(min_tau_exhaustive(corpus::stacked_k4()).first == 4);
    auto [tau, seq] = min_tau_exhaustive(corpus::octahedron());
    CHECK(is_shedding_sequence(corpus::octahedron(), seq.order));
    CHECK(tau_profile(corpus::octahedron(), seq).tau == tau);
    CHECK_THROWS_AS(min_tau_exhaustive(corpus::random_stacked(10, 1)), TooLarge);
}

TEST_CASE("exhaustive minimum is a lower bound on sampled sequences")
{
    for (std::uint64_t s = 1; s <= 6; ++s) {
        auto g = corpus::random_stacked(7 + s % 3, s);
        auto best = min_tau_exhaustive(g).first;
        for (VertexId u : g.boundary())
            for (VertexId v : g.boundary())
                if (g.is_boundary_edge(u, v))
                    CHECK(best <= tau_profile(g, shedding_sequence(g, u, v)).tau);
    }
}

TEST_CASE("tau equals the longest chain")
{
    for (std::uint64_t s = 1; s <= 20; ++s) {
        auto g = corpus::random_disk(10 + 2 * s, s % 4, s);
        auto seq = shedding_sequence(g, g.boundary()[0], g.boundary()[1]);
        CHECK(tau_profile(g, seq).tau == longest_chain(g, seq));
    }
}

TEST_CASE("bound formulas")
{
    SheddingPlan plan;
    plan.p = plan.q = 5;
    plan.l = 3;
    CHECK(plan.tau_bound() == 180);
    CHECK(plan.antichain_bound() == 120);
}

TEST_CASE("grid generator")
{
    CHECK_THROWS_AS(gen_grid_triangulation(1, 5, 2, 1), BadParams);
    CHECK_THROWS_AS(gen_grid_triangulation(5, 5, 1, 1), BadParams);

    std::set<std::vector<std::array<VertexId, 3>>> seen;
    for (std::uint64_t s = 0; s < 40; ++s) {
        auto g = gen_grid_triangulation(2, 2, 2, s);
        CHECK(g.base.triangles().size() == 2);
        std::vector<std::array<VertexId, 3>> tris;
        for (const auto& t : g.base.triangles())
            tris.push_back(t.v);
        std::sort(tris.begin(), tris.end());
        seen.insert(tris);
    }
    CHECK(seen.size() == 2);

    auto a = gen_grid_triangulation(5, 5, 3, 17);
    auto b = gen_grid_triangulation(5, 5, 3, 17);
    CHECK(a.base.triangles() == b.base.triangles());
    CHECK(validate(a.base).ok());
    for (VertexId v : a.base.vertices())
        for (VertexId w : a.base.neighbors(v)) {
            ExactInt dx = abs(a.base.coord(v).x - a.base.coord(w).x);
            ExactInt dy = abs(a.base.coord(v).y - a.base.coord(w).y);
            CHECK(dx <= 2);
            CHECK(dy <= 2);
        }
}

TEST_CASE("grid shedding on the 5x5 grid with l = 3")
{
    for (std::uint64_t s = 1; s <= 5; ++s) {
        auto grid = gen_grid_triangulation(5, 5, 3, s);
        auto plan = grid_shedding(grid);
        CHECK(is_shedding_sequence(grid.base, plan.sequence.order));
        auto prof = tau_profile(grid.base, plan.sequence);
        CHECK(prof.tau <= 180);
        CHECK(plan.antichains.size() <= 120);
        CHECK(check_antichains(grid.base, plan.sequence, plan.antichains).pass);
    }
}

TEST_CASE("all-same-diagonal 4x4 grid")
{
    std::vector<Triangle> tris;
    std::vector<IntPoint2> coords;
    auto id = [](std::size_t x, std::size_t y) { return VertexId((y - 1) * 4 + (x - 1)); };
    for (std::size_t y = 1; y <= 4; ++y)
        for (std::size_t x = 1; x <= 4; ++x)
            coords.push_back({long(x), long(y)});
    for (std::size_t y = 1; y < 4; ++y)
        for (std::size_t x = 1; x < 4; ++x) {
            tris.push_back({{id(x, y), id(x + 1, y), id(x + 1, y + 1)}});
            tris.push_back({{id(x, y), id(x + 1, y + 1), id(x, y + 1)}});
        }
    std::vector<VertexId> verts(16);
    for (VertexId v = 0; v < 16; ++v)
        verts[v] = v;
    auto g = PlaneTriangulation::from_triangles(verts, tris, coords);
    auto grid = make_grid_triangulation(g, 4, 4, 2);
    auto plan = grid_shedding(grid);
    CHECK(is_shedding_sequence(grid.base, plan.sequence.order));
    CHECK(tau_profile(grid.base, plan.sequence).tau <= 96);
    CHECK(check_antichains(grid.base, plan.sequence, plan.antichains).pass);
}

TEST_CASE("grid shedding bounds over a parameter sweep")
{
    for (std::size_t p = 2; p <= 10; p += 2)
        for (std::size_t q = 2; q <= 10; q += 3)
            for (std::size_t l : {2, 3}) {
                auto grid = gen_grid_triangulation(p, q, l, p * 31 + q * 7 + l);
                auto plan = grid_shedding(grid);
                CAPTURE(p);
                CAPTURE(q);
                CAPTURE(l);
                auto prof = tau_profile(grid.base, plan.sequence);
                CHECK(prof.tau <= plan.tau_bound());
                CHECK(plan.antichains.size() <= plan.antichain_bound());
                CHECK(plan.antichains.size() >= prof.tau);
                CHECK(plan.stage_batches[0] <= 3 * q * l);
                CHECK(plan.stage_batches[1] <= 3 * q * l);
                CHECK(plan.stage_batches[2] <= 2 * p * l);
                std::size_t total = 0;
                for (const auto& a : plan.antichains)
                    total += a.size();
                CHECK(total == p * q);
                CHECK(check_antichains(grid.base, plan.sequence, plan.antichains).pass);
            }
}

TEST_CASE("make_grid_triangulation rejects long edges")
{
    auto grid = gen_grid_triangulation(6, 6, 3, 5);
    bool has_long = false;
    for (VertexId v : grid.base.vertices())
        for (VertexId w : grid.base.neighbors(v))
            has_long = has_long || abs(grid.base.coord(v).x - grid.base.coord(w).x) == 2 ||
                       abs(grid.base.coord(v).y - grid.base.coord(w).y) == 2;
    if (has_long)
        CHECK_THROWS_AS(make_grid_triangulation(grid.base, 6, 6, 2), BadParams);
    CHECK_NOTHROW(make_grid_triangulation(grid.base, 6, 6, 3));
}
