#include "gridlift/corpus.hpp"

#include <random>

namespace gridlift::corpus {

namespace {

std::vector<VertexId> iota_ids(std::size_t n)
{
    std::vector<VertexId> ids(n);
    for (std::size_t k = 0; k < n; ++k)
        ids[k] = static_cast<VertexId>(k);
    return ids;
}

}  // namespace

PlaneTriangulation triangle()
{
    return PlaneTriangulation(iota_ids(3), {{{0, 1, 2}}}, {0, 1, 2});
}

PlaneTriangulation split_square(bool main_diagonal)
{
    std::vector<IntPoint2> coords{{1, 1}, {2, 1}, {2, 2}, {1, 2}};
    std::vector<Triangle> tris = main_diagonal
                                     ? std::vector<Triangle>{{{0, 1, 2}}, {{0, 2, 3}}}
                                     : std::vector<Triangle>{{{0, 1, 3}}, {{1, 2, 3}}};
    return PlaneTriangulation(iota_ids(4), std::move(tris), {0, 1, 2, 3}, std::move(coords));
}

PlaneTriangulation stacked_k4()
{
    return PlaneTriangulation(iota_ids(4), {{{0, 1, 3}}, {{1, 2, 3}}, {{2, 0, 3}}}, {0, 1, 2});
}

PlaneTriangulation polygon_fan(std::size_t k)
{
    std::vector<Triangle> tris;
    for (std::size_t j = 1; j + 1 < k; ++j)
        tris.push_back({{0, static_cast<VertexId>(j), static_cast<VertexId>(j + 1)}});
    return PlaneTriangulation(iota_ids(k), std::move(tris), iota_ids(k));
}

PlaneTriangulation octahedron()
{
    return PlaneTriangulation(iota_ids(6),
                              {{{0, 1, 3}}, {{1, 4, 3}}, {{1, 2, 4}}, {{2, 5, 4}}, {{2, 0, 5}},
                               {{0, 3, 5}}, {{3, 4, 5}}},
                              {0, 1, 2});
}

PlaneTriangulation random_stacked(std::size_t n, std::uint64_t seed)
{
    if (n < 3)
        throw Error("random_stacked: need n >= 3");
    std::mt19937_64 rng(seed);
    std::vector<Triangle> tris{{{0, 1, 2}}};
    for (std::size_t x = 3; x < n; ++x) {
        std::uniform_int_distribution<std::size_t> pick(0, tris.size() - 1);
        std::size_t f = pick(rng);
        Triangle t = tris[f];
        VertexId v = static_cast<VertexId>(x);
        tris[f] = {{t.v[0], t.v[1], v}};
        tris.push_back({{t.v[1], t.v[2], v}});
        tris.push_back({{t.v[2], t.v[0], v}});
    }
    return PlaneTriangulation(iota_ids(n), std::move(tris), {0, 1, 2});
}

PlaneTriangulation compact(const PlaneTriangulation& g)
{
    std::vector<VertexId> relabel(g.id_bound(), 0);
    for (std::size_t k = 0; k < g.vertices().size(); ++k)
        relabel[g.vertices()[k]] = static_cast<VertexId>(k);
    std::vector<Triangle> tris;
    for (const auto& t : g.triangles())
        tris.push_back({{relabel[t.v[0]], relabel[t.v[1]], relabel[t.v[2]]}});
    std::vector<VertexId> cycle;
    for (VertexId v : g.boundary())
        cycle.push_back(relabel[v]);
    std::optional<std::vector<IntPoint2>> coords;
    if (g.has_coords()) {
        coords.emplace();
        for (VertexId v : g.vertices())
            coords->push_back(g.coord(v));
    }
    return PlaneTriangulation(iota_ids(g.n()), std::move(tris), std::move(cycle),
                              std::move(coords));
}

PlaneTriangulation random_disk(std::size_t n, std::size_t extra, std::uint64_t seed)
{
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    PlaneTriangulation g = random_stacked(n + extra, seed);
    for (std::size_t k = 0; k < extra && g.n() > 3; ++k) {
        std::vector<VertexId> cands;
        for (VertexId v : g.boundary())
            if (is_shedding_vertex_fast(g, v))
                cands.push_back(v);
        std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
        g = g.remove_vertex(cands[pick(rng)]);
    }
    return compact(g);
}

std::vector<Instance> hand_instances()
{
    std::vector<Instance> out;
    out.push_back({"triangle", triangle()});
    out.push_back({"square-main", split_square(true)});
    out.push_back({"square-anti", split_square(false)});
    out.push_back({"stacked-k4", stacked_k4()});
    out.push_back({"octahedron", octahedron()});
    for (std::size_t k = 4; k <= 8; ++k)
        out.push_back({"fan-" + std::to_string(k), polygon_fan(k)});
    return out;
}

}  // namespace gridlift::corpus
