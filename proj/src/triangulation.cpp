#include "gridlift/triangulation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

namespace gridlift {

namespace {

std::uint64_t key(VertexId a, VertexId b)
{
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::size_t bound_of(const std::vector<VertexId>& vertices)
{
    return vertices.empty() ? 0 : static_cast<std::size_t>(vertices.back()) + 1;
}

}  // namespace

PlaneTriangulation::PlaneTriangulation(std::vector<VertexId> vertices,
                                       std::vector<Triangle> triangles,
                                       std::vector<VertexId> boundary,
                                       std::optional<std::vector<IntPoint2>> coords)
    : vertices_(std::move(vertices))
    , triangles_(std::move(triangles))
    , boundary_(std::move(boundary))
    , coords_(std::move(coords))
{
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    index();
}

void PlaneTriangulation::index()
{
    std::size_t bound = bound_of(vertices_);
    for (const auto& t : triangles_)
        for (VertexId x : t.v)
            bound = std::max<std::size_t>(bound, x + 1);
    for (VertexId x : boundary_)
        bound = std::max<std::size_t>(bound, x + 1);
    neighbors_.assign(bound, {});
    boundary_pos_.assign(bound, -1);
    present_.assign(bound, 0);
    for (VertexId v : vertices_)
        present_[v] = 1;
    for (const auto& t : triangles_) {
        for (int k = 0; k < 3; ++k) {
            VertexId a = t.v[k];
            VertexId b = t.v[(k + 1) % 3];
            if (a == b)
                continue;
            neighbors_[a].push_back(b);
            neighbors_[b].push_back(a);
        }
    }
    for (auto& nb : neighbors_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    for (std::size_t k = 0; k < boundary_.size(); ++k)
        boundary_pos_[boundary_[k]] = static_cast<long>(k);
}

std::optional<PlaneTriangulation>
PlaneTriangulation::try_from_triangles(std::vector<VertexId> vertices,
                                       std::vector<Triangle> triangles,
                                       std::optional<std::vector<IntPoint2>> coords)
{
    std::set<std::uint64_t> directed;
    for (const auto& t : triangles)
        for (int k = 0; k < 3; ++k)
            directed.insert(key(t.v[k], t.v[(k + 1) % 3]));

    std::map<VertexId, VertexId> succ;
    std::size_t boundary_edges = 0;
    for (std::uint64_t d : directed) {
        VertexId a = static_cast<VertexId>(d >> 32);
        VertexId b = static_cast<VertexId>(d & 0xffffffffu);
        if (directed.count(key(b, a)))
            continue;
        ++boundary_edges;
        if (!succ.emplace(a, b).second)
            return std::nullopt;
    }
    if (succ.empty())
        return std::nullopt;

    std::vector<VertexId> cycle;
    VertexId start = succ.begin()->first;
    VertexId cur = start;
    do {
        cycle.push_back(cur);
        auto it = succ.find(cur);
        if (it == succ.end() || cycle.size() > boundary_edges)
            return std::nullopt;
        cur = it->second;
    } while (cur != start);
    if (cycle.size() != boundary_edges)
        return std::nullopt;
    return PlaneTriangulation(std::move(vertices), std::move(triangles), std::move(cycle),
                              std::move(coords));
}

PlaneTriangulation
PlaneTriangulation::from_triangles(std::vector<VertexId> vertices, std::vector<Triangle> triangles,
                                   std::optional<std::vector<IntPoint2>> coords)
{
    auto g = try_from_triangles(std::move(vertices), std::move(triangles), std::move(coords));
    if (!g)
        throw Error("boundary edges do not form a single simple cycle");
    return *std::move(g);
}

bool PlaneTriangulation::contains(VertexId v) const
{
    return v < present_.size() && present_[v];
}

bool PlaneTriangulation::is_boundary(VertexId v) const
{
    return v < boundary_pos_.size() && boundary_pos_[v] >= 0;
}

long PlaneTriangulation::boundary_index(VertexId v) const
{
    return v < boundary_pos_.size() ? boundary_pos_[v] : -1;
}

bool PlaneTriangulation::has_edge(VertexId u, VertexId v) const
{
    if (u >= neighbors_.size())
        return false;
    const auto& nb = neighbors_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<VertexId>& PlaneTriangulation::neighbors(VertexId v) const
{
    static const std::vector<VertexId> none;
    return v < neighbors_.size() ? neighbors_[v] : none;
}

std::size_t PlaneTriangulation::edge_count() const
{
    std::size_t sum = 0;
    for (const auto& nb : neighbors_)
        sum += nb.size();
    return sum / 2;
}

bool PlaneTriangulation::is_directed_boundary_edge(VertexId u, VertexId v) const
{
    long pu = boundary_index(u);
    if (pu < 0 || boundary_.size() < 2)
        return false;
    return boundary_[(static_cast<std::size_t>(pu) + 1) % boundary_.size()] == v;
}

bool PlaneTriangulation::is_boundary_edge(VertexId u, VertexId v) const
{
    return is_directed_boundary_edge(u, v) || is_directed_boundary_edge(v, u);
}

const IntPoint2& PlaneTriangulation::coord(VertexId v) const
{
    if (!coords_ || v >= coords_->size())
        throw Error("no coordinates for vertex " + std::to_string(v));
    return (*coords_)[v];
}

PlaneTriangulation PlaneTriangulation::remove_vertex(VertexId v) const
{
    long pos = boundary_index(v);
    if (pos < 0)
        throw NotBoundary("vertex " + std::to_string(v) + " is not a boundary vertex");
    const std::size_t b = boundary_.size();
    VertexId prev = boundary_[(static_cast<std::size_t>(pos) + b - 1) % b];
    VertexId next = boundary_[(static_cast<std::size_t>(pos) + 1) % b];

    std::vector<Triangle> kept;
    kept.reserve(triangles_.size());
    std::unordered_map<VertexId, VertexId> link;
    for (const auto& t : triangles_) {
        if (!t.contains(v)) {
            kept.push_back(t);
            continue;
        }
        int k = t.v[0] == v ? 0 : (t.v[1] == v ? 1 : 2);
        link[t.v[(k + 1) % 3]] = t.v[(k + 2) % 3];
    }

    // Link of a boundary vertex is the path next -> ... -> prev.
    std::vector<VertexId> path{next};
    while (path.back() != prev) {
        auto it = link.find(path.back());
        if (it == link.end() || path.size() > link.size() + 1)
            throw Error("link of vertex " + std::to_string(v) + " is not a path");
        path.push_back(it->second);
    }

    std::vector<VertexId> cycle;
    cycle.reserve(b + path.size());
    for (std::size_t k = 1; k < b; ++k) {
        VertexId w = boundary_[(static_cast<std::size_t>(pos) + k) % b];
        cycle.push_back(w);
        if (w == prev)
            for (std::size_t j = path.size() - 1; j-- > 1;)
                cycle.push_back(path[j]);
    }

    std::vector<VertexId> verts;
    verts.reserve(vertices_.size());
    for (VertexId w : vertices_)
        if (w != v)
            verts.push_back(w);
    return PlaneTriangulation(std::move(verts), std::move(kept), std::move(cycle), coords_);
}

PlaneTriangulation PlaneTriangulation::reversed() const
{
    std::vector<Triangle> tris;
    tris.reserve(triangles_.size());
    for (const auto& t : triangles_)
        tris.push_back({{t.v[0], t.v[2], t.v[1]}});
    std::vector<VertexId> cycle(boundary_.rbegin(), boundary_.rend());
    return PlaneTriangulation(vertices_, std::move(tris), std::move(cycle), coords_);
}

std::optional<PlaneTriangulation>
PlaneTriangulation::induced(const std::vector<VertexId>& subset) const
{
    std::vector<char> in(id_bound(), 0);
    for (VertexId v : subset)
        if (v < in.size())
            in[v] = 1;
    std::vector<Triangle> tris;
    for (const auto& t : triangles_)
        if (in[t.v[0]] && in[t.v[1]] && in[t.v[2]])
            tris.push_back(t);
    return try_from_triangles(subset, std::move(tris), coords_);
}

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::TooSmall: return "too-small";
    case ViolationKind::BadTriangle: return "bad-triangle";
    case ViolationKind::DuplicateEdge: return "duplicate-directed-edge";
    case ViolationKind::NonManifoldEdge: return "non-manifold-edge";
    case ViolationKind::IsolatedVertex: return "isolated-vertex";
    case ViolationKind::NotTwoConnected: return "not-2-connected";
    case ViolationKind::BadBoundary: return "bad-boundary";
    case ViolationKind::Disconnected: return "disconnected";
    case ViolationKind::EulerMismatch: return "euler-mismatch";
    }
    return "unknown";
}

ValidationReport validate(const PlaneTriangulation& g)
{
    auto fail = [](ViolationKind kind, std::string msg) {
        return ValidationReport{Violation{kind, std::move(msg)}};
    };
    const std::size_t n = g.n();
    if (n < 3 || g.triangles().empty())
        return fail(ViolationKind::TooSmall, "fewer than 3 vertices or no triangles");

    std::set<std::uint64_t> directed;
    std::vector<std::size_t> incidence(g.id_bound(), 0);
    for (std::size_t ti = 0; ti < g.triangles().size(); ++ti) {
        const auto& t = g.triangles()[ti];
        for (VertexId x : t.v)
            if (!g.contains(x))
                return fail(ViolationKind::BadTriangle,
                            "triangle " + std::to_string(ti) + " uses unknown vertex " +
                                std::to_string(x));
        if (t.v[0] == t.v[1] || t.v[1] == t.v[2] || t.v[0] == t.v[2])
            return fail(ViolationKind::BadTriangle,
                        "triangle " + std::to_string(ti) + " repeats a vertex");
        for (int k = 0; k < 3; ++k) {
            if (!directed.insert(key(t.v[k], t.v[(k + 1) % 3])).second)
                return fail(ViolationKind::DuplicateEdge,
                            "directed edge " + std::to_string(t.v[k]) + "->" +
                                std::to_string(t.v[(k + 1) % 3]) + " appears twice");
            ++incidence[t.v[k]];
        }
    }
    for (VertexId v : g.vertices())
        if (incidence[v] == 0)
            return fail(ViolationKind::IsolatedVertex,
                        "vertex " + std::to_string(v) + " lies on no triangle");

    // The link of every vertex must be a single path or a single cycle.
    std::vector<std::unordered_map<VertexId, VertexId>> link(g.id_bound());
    for (const auto& t : g.triangles())
        for (int k = 0; k < 3; ++k)
            link[t.v[k]][t.v[(k + 1) % 3]] = t.v[(k + 2) % 3];
    for (VertexId v : g.vertices()) {
        const auto& lk = link[v];
        std::map<VertexId, int> indeg;
        for (const auto& [a, b] : lk)
            ++indeg[b];
        VertexId start = lk.begin()->first;
        std::size_t starts = 0;
        for (const auto& [a, b] : lk)
            if (!indeg.count(a)) {
                start = a;
                ++starts;
            }
        if (starts > 1)
            return fail(ViolationKind::NotTwoConnected,
                        "vertex " + std::to_string(v) + " is a cut vertex (pinched link)");
        std::size_t steps = 0;
        VertexId cur = start;
        while (true) {
            auto it = lk.find(cur);
            if (it == lk.end())
                break;
            ++steps;
            cur = it->second;
            if (cur == start || steps > lk.size())
                break;
        }
        if (steps != lk.size())
            return fail(ViolationKind::NotTwoConnected,
                        "link of vertex " + std::to_string(v) + " is not connected");
    }

    std::size_t boundary_edges = 0;
    for (std::uint64_t d : directed) {
        VertexId a = static_cast<VertexId>(d >> 32);
        VertexId b = static_cast<VertexId>(d & 0xffffffffu);
        if (!directed.count(key(b, a)))
            ++boundary_edges;
    }
    const auto& cyc = g.boundary();
    if (cyc.size() < 3)
        return fail(ViolationKind::BadBoundary, "boundary cycle shorter than 3");
    {
        std::set<VertexId> seen(cyc.begin(), cyc.end());
        if (seen.size() != cyc.size())
            return fail(ViolationKind::BadBoundary, "boundary cycle is not simple");
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
        VertexId a = cyc[k];
        VertexId b = cyc[(k + 1) % cyc.size()];
        if (!g.contains(a))
            return fail(ViolationKind::BadBoundary,
                        "boundary vertex " + std::to_string(a) + " is unknown");
        if (!directed.count(key(a, b)) || directed.count(key(b, a)))
            return fail(ViolationKind::BadBoundary,
                        "boundary step " + std::to_string(a) + "->" + std::to_string(b) +
                            " is not a boundary edge consistent with the triangles");
    }
    if (boundary_edges != cyc.size())
        return fail(ViolationKind::BadBoundary, "boundary cycle misses some boundary edges");

    std::vector<char> seen(g.id_bound(), 0);
    std::queue<VertexId> queue;
    queue.push(g.vertices().front());
    seen[g.vertices().front()] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (VertexId w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
    }
    if (reached != n)
        return fail(ViolationKind::Disconnected, "graph is disconnected");

    const std::size_t b = cyc.size();
    const std::size_t tri = g.triangles().size();
    const std::size_t edges = g.edge_count();
    if (tri + b + 2 != 2 * n || edges + b + 3 != 3 * n)
        return fail(ViolationKind::EulerMismatch,
                    "expected " + std::to_string(2 * n - b - 2) + " triangles and " +
                        std::to_string(3 * n - b - 3) + " edges, found " +
                        std::to_string(tri) + " and " + std::to_string(edges));
    return {};
}

bool is_shedding_vertex(const PlaneTriangulation& g, VertexId v)
{
    if (!g.is_boundary(v))
        throw NotBoundary("vertex " + std::to_string(v) + " is not a boundary vertex");
    if (g.n() < 4)
        throw Error("is_shedding_vertex requires at least 4 vertices");
    return validate(g.remove_vertex(v)).ok();
}

bool is_diagonal(const PlaneTriangulation& g, VertexId u, VertexId v)
{
    return g.has_edge(u, v) && g.is_boundary(u) && g.is_boundary(v) && !g.is_boundary_edge(u, v);
}

std::vector<VertexId> diagonal_partners(const PlaneTriangulation& g, VertexId v)
{
    std::vector<VertexId> out;
    if (!g.is_boundary(v))
        return out;
    for (VertexId w : g.neighbors(v))
        if (is_diagonal(g, v, w))
            out.push_back(w);
    return out;
}

bool is_shedding_vertex_fast(const PlaneTriangulation& g, VertexId v)
{
    if (!g.is_boundary(v))
        throw NotBoundary("vertex " + std::to_string(v) + " is not a boundary vertex");
    if (g.n() < 4)
        throw Error("is_shedding_vertex requires at least 4 vertices");
    for (VertexId w : g.neighbors(v))
        if (is_diagonal(g, v, w))
            return false;
    return true;
}

SheddingSequence make_sequence(const PlaneTriangulation& g, std::vector<VertexId> order)
{
    std::vector<long> rank(g.id_bound(), -1);
    for (std::size_t k = 0; k < order.size(); ++k)
        if (order[k] < rank.size())
            rank[order[k]] = static_cast<long>(k);
    SheddingSequence seq;
    seq.degrees.reserve(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::size_t d = 0;
        for (VertexId w : g.neighbors(order[k]))
            if (rank[w] >= 0 && rank[w] < static_cast<long>(k))
                ++d;
        seq.degrees.push_back(d);
    }
    seq.order = std::move(order);
    return seq;
}

bool is_shedding_sequence(const PlaneTriangulation& g, const std::vector<VertexId>& order,
                          std::string* why)
{
    auto reject = [&](std::string msg) {
        if (why)
            *why = std::move(msg);
        return false;
    };
    if (order.size() != g.n())
        return reject("sequence length differs from vertex count");
    {
        std::vector<VertexId> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.vertices())
            return reject("sequence is not a permutation of the vertices");
    }
    if (!g.is_boundary_edge(order[0], order[1]))
        return reject("a_1 a_2 is not a boundary edge");
    if (!validate(g).ok())
        return reject("input triangulation is invalid");
    PlaneTriangulation cur = g;
    for (std::size_t i = order.size(); i >= 4; --i) {
        VertexId a = order[i - 1];
        if (!cur.is_boundary(a))
            return reject("a_" + std::to_string(i) + " is not on the boundary of G_" +
                          std::to_string(i));
        cur = cur.remove_vertex(a);
        if (auto rep = validate(cur); !rep.ok())
            return reject("G_" + std::to_string(i - 1) + " invalid: " + rep.violation->message);
    }
    return true;
}

SheddingSequence shedding_sequence(const PlaneTriangulation& g, VertexId u, VertexId v)
{
    if (!g.is_boundary_edge(u, v))
        throw Error("shedding_sequence: " + std::to_string(u) + "-" + std::to_string(v) +
                    " is not a boundary edge");
    std::vector<VertexId> tail;
    PlaneTriangulation cur = g;
    while (cur.n() > 3) {
        std::optional<VertexId> pick;
        for (VertexId w : cur.boundary())
            if (w != u && w != v && is_shedding_vertex_fast(cur, w) && (!pick || w < *pick))
                pick = w;
        if (!pick)
            throw NoSheddingVertex("no shedding vertex at size " + std::to_string(cur.n()));
        tail.push_back(*pick);
        cur = cur.remove_vertex(*pick);
    }
    std::vector<VertexId> order{u, v};
    for (VertexId w : cur.vertices())
        if (w != u && w != v)
            order.push_back(w);
    order.insert(order.end(), tail.rbegin(), tail.rend());
    return make_sequence(g, std::move(order));
}

PlaneTriangulation prefix_graph(const PlaneTriangulation& g, const SheddingSequence& seq,
                                std::size_t i)
{
    PlaneTriangulation cur = g;
    for (std::size_t k = seq.size(); k > i; --k)
        cur = cur.remove_vertex(seq.at(k));
    return cur;
}

std::vector<VertexId> diagonal_side(const PlaneTriangulation& g, Edge diag, VertexId side)
{
    if (!is_diagonal(g, diag.a, diag.b))
        throw NotADiagonal(std::to_string(diag.a) + "-" + std::to_string(diag.b) +
                           " is not a diagonal");
    if (side == diag.a || side == diag.b || !g.contains(side))
        throw Error("diagonal_side: selector must be a vertex off the diagonal");
    std::vector<char> seen(g.id_bound(), 0);
    seen[diag.a] = seen[diag.b] = 1;
    seen[side] = 1;
    std::vector<VertexId> comp{side};
    for (std::size_t k = 0; k < comp.size(); ++k)
        for (VertexId w : g.neighbors(comp[k]))
            if (!seen[w]) {
                seen[w] = 1;
                comp.push_back(w);
            }
    std::sort(comp.begin(), comp.end());
    return comp;
}

VertexId find_shedding_in_region(const PlaneTriangulation& g, Edge diag, VertexId side)
{
    std::vector<VertexId> comp = diagonal_side(g, diag, side);
    std::optional<VertexId> best;
    for (VertexId w : comp) {
        if (!g.is_boundary(w) || !is_shedding_vertex_fast(g, w))
            continue;
        if (!best) {
            best = w;
        } else if (g.has_coords()) {
            if (lex_yx_less(g.coord(*best), g.coord(w)))
                best = w;
        }
    }
    if (!best)
        throw NoSheddingVertex("no shedding vertex on the chosen side of the diagonal");
    return *best;
}

}  // namespace gridlift
