#include "gridlift/lifting.hpp"

#include <algorithm>
#include <optional>

namespace gridlift {

ExactInt LiftedPolyhedron::max_height() const
{
    ExactInt top = 0;
    for (VertexId v : graph.vertices())
        top = std::max(top, heights[v]);
    return top;
}

ExactInt height_bound(std::size_t n, const ExactInt& m)
{
    ExactInt n8;
    mpz_pow_ui(n8.get_mpz_t(), ExactInt(n).get_mpz_t(), 8);
    return 499 * n8 * m + 1;
}

LiftedPolyhedron lift_drawing(const PlaneTriangulation& g, const SheddingSequence& seq)
{
    if (!g.has_coords())
        throw NotSequentiallyConvex("drawing has no coordinates");
    const auto& coords = *g.coords();
    if (auto why = sequential_convexity_failure(g, seq, coords))
        throw NotSequentiallyConvex(*why);

    const std::size_t n = seq.size();
    std::vector<std::size_t> rank(g.id_bound(), 0);
    for (std::size_t i = 1; i <= n; ++i)
        rank[seq.at(i)] = i;

    // Incident triangles per vertex, and the step at which each triangle appears.
    std::vector<std::vector<std::size_t>> incident(g.id_bound());
    std::vector<std::size_t> born(g.triangles().size());
    for (std::size_t t = 0; t < g.triangles().size(); ++t) {
        const auto& tri = g.triangles()[t];
        born[t] = std::max({rank[tri.v[0]], rank[tri.v[1]], rank[tri.v[2]]});
        for (VertexId v : tri.v)
            incident[v].push_back(t);
    }

    LiftedPolyhedron out;
    out.graph = g;
    out.sequence = seq;
    out.heights.assign(g.id_bound(), 0);
    out.m.assign(g.id_bound(), 0);
    out.points.assign(g.id_bound(), {});
    std::vector<std::optional<Plane>> planes(g.triangles().size());
    auto plane_of = [&](std::size_t t) -> const Plane& {
        if (!planes[t]) {
            const auto& tri = g.triangles()[t];
            planes[t] = plane_through(out.points[tri.v[0]], out.points[tri.v[1]], out.points[tri.v[2]]);
        }
        return *planes[t];
    };

    for (std::size_t i = 1; i <= n; ++i) {
        const VertexId a = seq.at(i);
        const IntPoint2& p = coords[a];
        if (i > 3) {
            std::optional<ExactRat> top;
            ExactInt m = 0;
            bool first = true;
            for (VertexId w : g.neighbors(a)) {
                if (rank[w] >= i)
                    continue;
                if (first || out.heights[w] > m)
                    m = out.heights[w];
                first = false;
                for (std::size_t t : incident[w]) {
                    if (born[t] >= i)
                        continue;
                    ExactRat z = eval_plane(plane_of(t), p.x, p.y);
                    if (!top || z > *top)
                        top = z;
                }
            }
            out.heights[a] = floor(*top) + 1;
            out.m[a] = m;
        }
        out.points[a] = {p.x, p.y, out.heights[a]};
    }

    for (VertexId v : g.vertices()) {
        std::size_t bits = bit_length(out.heights[v]);
        out.max_height_bits = std::max(out.max_height_bits, bits);
        out.total_height_bits += bits;
    }
    out.facets = g.triangles();
    return out;
}

LiftedPolyhedron lift(const GridEmbedding& emb, const SheddingSequence& seq)
{
    return lift_drawing(emb.graph, seq);
}

Polytope truncate_to_polytope(const LiftedPolyhedron& p)
{
    const auto& b = p.graph.boundary();
    if (b.size() != 3)
        throw BoundaryNotTriangle("boundary has " + std::to_string(b.size()) + " vertices");
    Polytope out;
    out.vertices = p.graph.vertices();
    out.points = p.points;
    for (const auto& t : p.facets)
        out.faces.push_back({t.v[0], t.v[2], t.v[1]});
    out.faces.push_back({b[0], b[1], b[2]});
    return out;
}

}  // namespace gridlift
