#include "gridlift/diameter.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace gridlift {

namespace {

std::vector<Edge> edge_list(const PlaneTriangulation& g)
{
    std::set<Edge> edges;
    for (const auto& t : g.triangles())
        for (int k = 0; k < 3; ++k)
            edges.insert(Edge::of(t.v[k], t.v[(k + 1) % 3]));
    return {edges.begin(), edges.end()};
}

}  // namespace

bool TauProfile::precedes(VertexId u, VertexId v) const
{
    if (u == v)
        return true;
    if (rank[u] >= rank[v])
        return false;
    // Walk down from v through predecessors with rank above u's.
    std::vector<char> seen(rank.size(), 0);
    std::vector<VertexId> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (VertexId w : predecessors[x]) {
            if (w == u)
                return true;
            if (!seen[w] && rank[w] > rank[u]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

TauProfile tau_profile(const PlaneTriangulation& g, const SheddingSequence& seq)
{
    TauProfile out;
    out.heights.assign(g.id_bound(), 0);
    out.predecessors.assign(g.id_bound(), {});
    out.rank.assign(g.id_bound(), 0);
    for (std::size_t i = 1; i <= seq.size(); ++i)
        out.rank[seq.at(i)] = i;
    for (std::size_t i = 1; i <= seq.size(); ++i) {
        VertexId a = seq.at(i);
        std::size_t top = 0;
        for (VertexId w : g.neighbors(a))
            if (out.rank[w] < i) {
                out.predecessors[a].push_back(w);
                top = std::max(top, out.heights[w]);
            }
        out.heights[a] = i <= 3 ? i : 1 + top;
        out.tau = std::max(out.tau, out.heights[a]);
    }
    return out;
}

std::size_t longest_chain(const PlaneTriangulation& g, const SheddingSequence& seq)
{
    std::vector<std::size_t> rank(g.id_bound(), 0);
    for (std::size_t i = 1; i <= seq.size(); ++i)
        rank[seq.at(i)] = i;
    std::vector<std::size_t> len(g.id_bound(), 1);
    const auto edges = edge_list(g);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : edges) {
            VertexId lo = rank[e.a] < rank[e.b] ? e.a : e.b;
            VertexId hi = lo == e.a ? e.b : e.a;
            if (len[lo] + 1 > len[hi]) {
                len[hi] = len[lo] + 1;
                changed = true;
            }
        }
    }
    std::size_t best = 0;
    for (VertexId v : g.vertices())
        best = std::max(best, len[v]);
    return best;
}

std::pair<std::size_t, SheddingSequence> min_tau_exhaustive(const PlaneTriangulation& g,
                                                            std::size_t max_n)
{
    const std::size_t n = g.n();
    if (n > max_n)
        throw TooLarge("exhaustive search limited to n <= " + std::to_string(max_n) + ", got " +
                       std::to_string(n));
    std::vector<VertexId> ids = g.vertices();
    std::sort(ids.begin(), ids.end());

    std::size_t best = n + 1;
    std::vector<VertexId> best_order;
    std::vector<VertexId> order;
    std::vector<std::size_t> tau(g.id_bound(), 0);
    std::vector<char> used(g.id_bound(), 0);
    std::size_t edges = 0;

    std::function<void(std::size_t)> extend = [&](std::size_t current) {
        if (order.size() == n) {
            if (current < best) {
                best = current;
                best_order = order;
            }
            return;
        }
        for (VertexId v : ids) {
            if (used[v])
                continue;
            std::size_t top = 0;
            std::size_t d = 0;
            for (VertexId w : g.neighbors(v))
                if (used[w]) {
                    top = std::max(top, tau[w]);
                    ++d;
                }
            if (d < 2 || std::max(current, top + 1) >= best)
                continue;
            order.push_back(v);
            // an edge of G outside every prefix triangle means G_i is not induced
            auto sub = g.induced(order);
            if (sub && sub->edge_count() == edges + d && validate(*sub).ok()) {
                used[v] = 1;
                tau[v] = top + 1;
                edges += d;
                extend(std::max(current, top + 1));
                edges -= d;
                used[v] = 0;
            }
            order.pop_back();
        }
    };

    for (VertexId a1 : ids)
        for (VertexId a2 : ids) {
            if (a1 == a2 || !g.is_boundary_edge(a1, a2))
                continue;
            for (VertexId a3 : ids) {
                if (a3 == a1 || a3 == a2 || 3 >= best)
                    continue;
                bool face = false;
                for (const auto& t : g.triangles())
                    face = face || (t.contains(a1) && t.contains(a2) && t.contains(a3));
                if (!face)
                    continue;
                order = {a1, a2, a3};
                used[a1] = used[a2] = used[a3] = 1;
                tau[a1] = 1;
                tau[a2] = 2;
                tau[a3] = 3;
                edges = 3;
                extend(3);
                used[a1] = used[a2] = used[a3] = 0;
            }
        }
    if (best_order.empty())
        throw NoSheddingVertex("no shedding sequence found");
    return {best, make_sequence(g, best_order)};
}

namespace {

std::vector<IntPoint2> grid_coords(std::size_t p, std::size_t q)
{
    std::vector<IntPoint2> c(p * q);
    for (std::size_t y = 1; y <= q; ++y)
        for (std::size_t x = 1; x <= p; ++x)
            c[(y - 1) * p + (x - 1)] = {ExactInt(x), ExactInt(y)};
    return c;
}

std::vector<VertexId> grid_perimeter(std::size_t p, std::size_t q)
{
    auto id = [p](std::size_t x, std::size_t y) { return static_cast<VertexId>((y - 1) * p + (x - 1)); };
    std::vector<VertexId> cycle;
    for (std::size_t x = 1; x < p; ++x)
        cycle.push_back(id(x, 1));
    for (std::size_t y = 1; y < q; ++y)
        cycle.push_back(id(p, y));
    for (std::size_t x = p; x > 1; --x)
        cycle.push_back(id(x, q));
    for (std::size_t y = q; y > 1; --y)
        cycle.push_back(id(1, y));
    return cycle;
}

}  // namespace

GridTriangulation make_grid_triangulation(PlaneTriangulation g, std::size_t p, std::size_t q,
                                          std::size_t l)
{
    if (p < 2 || q < 2 || l < 2)
        throw BadParams("grid needs p, q, l >= 2");
    if (g.n() != p * q || g.id_bound() != p * q)
        throw BadParams("vertex set is not the grid [" + std::to_string(p) + " x " +
                        std::to_string(q) + "]");
    auto coords = grid_coords(p, q);
    g = PlaneTriangulation(g.vertices(), g.triangles(), g.boundary(), coords);
    if (auto report = validate(g); !report.ok())
        throw BadParams("not a triangulated disk: " + report.violation->message);
    for (const auto& t : g.triangles())
        if (orient2d(coords[t.v[0]], coords[t.v[1]], coords[t.v[2]]) <= 0)
            throw BadParams("triangle is not counterclockwise in the grid drawing");
    auto want = grid_perimeter(p, q);
    auto have = g.boundary();
    auto start = std::find(have.begin(), have.end(), want.front());
    if (start == have.end())
        throw BadParams("corner (1,1) is not on the boundary");
    std::rotate(have.begin(), start, have.end());
    if (have != want)
        throw BadParams("boundary is not the grid perimeter");
    for (const auto& e : edge_list(g)) {
        ExactInt dx = abs(coords[e.a].x - coords[e.b].x);
        ExactInt dy = abs(coords[e.a].y - coords[e.b].y);
        if (dx > ExactInt(l) - 1 || dy > ExactInt(l) - 1)
            throw BadParams("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                            " does not fit an l x l subgrid");
    }
    GridTriangulation out;
    out.p = p;
    out.q = q;
    out.l = l;
    out.base = std::move(g);
    return out;
}

GridTriangulation gen_grid_triangulation(std::size_t p, std::size_t q, std::size_t l,
                                         std::uint64_t seed)
{
    if (p < 2 || q < 2 || l < 2)
        throw BadParams("grid needs p, q, l >= 2");
    std::mt19937_64 rng(seed);
    const auto coords = grid_coords(p, q);
    auto id = [p](std::size_t x, std::size_t y) { return static_cast<VertexId>((y - 1) * p + (x - 1)); };

    std::vector<std::array<VertexId, 3>> tris;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t y = 1; y < q; ++y)
        for (std::size_t x = 1; x < p; ++x) {
            VertexId a = id(x, y), b = id(x + 1, y), c = id(x + 1, y + 1), d = id(x, y + 1);
            if (coin(rng)) {
                tris.push_back({a, b, c});
                tris.push_back({a, c, d});
            } else {
                tris.push_back({a, b, d});
                tris.push_back({b, c, d});
            }
        }

    if (l > 2) {
        std::map<std::pair<VertexId, VertexId>, std::size_t> owner;
        for (std::size_t t = 0; t < tris.size(); ++t)
            for (int k = 0; k < 3; ++k)
                owner[{tris[t][k], tris[t][(k + 1) % 3]}] = t;
        const long lim = static_cast<long>(l) - 1;
        std::uniform_int_distribution<std::size_t> pick_tri(0, tris.size() - 1);
        std::uniform_int_distribution<int> pick_side(0, 2);
        const std::size_t attempts = 4 * p * q;
        for (std::size_t it = 0; it < attempts; ++it) {
            std::size_t t1 = pick_tri(rng);
            int k = pick_side(rng);
            VertexId a = tris[t1][k], b = tris[t1][(k + 1) % 3], c = tris[t1][(k + 2) % 3];
            auto opp = owner.find({b, a});
            if (opp == owner.end())
                continue;
            std::size_t t2 = opp->second;
            VertexId d = 0;
            for (VertexId v : tris[t2])
                if (v != a && v != b)
                    d = v;
            // Quad a, d, b, c counterclockwise; flip ab to cd when strictly convex.
            if (orient2d(coords[a], coords[d], coords[b]) <= 0 ||
                orient2d(coords[d], coords[b], coords[c]) <= 0 ||
                orient2d(coords[b], coords[c], coords[a]) <= 0 ||
                orient2d(coords[c], coords[a], coords[d]) <= 0)
                continue;
            if (abs(coords[c].x - coords[d].x) > lim || abs(coords[c].y - coords[d].y) > lim)
                continue;
            for (auto t : {t1, t2})
                for (int j = 0; j < 3; ++j)
                    owner.erase({tris[t][j], tris[t][(j + 1) % 3]});
            tris[t1] = {a, d, c};
            tris[t2] = {d, b, c};
            for (auto t : {t1, t2})
                for (int j = 0; j < 3; ++j)
                    owner[{tris[t][j], tris[t][(j + 1) % 3]}] = t;
        }
    }

    std::vector<Triangle> triangles;
    for (const auto& t : tris)
        triangles.push_back({t});
    std::vector<VertexId> ids(p * q);
    for (std::size_t k = 0; k < ids.size(); ++k)
        ids[k] = static_cast<VertexId>(k);
    PlaneTriangulation g(ids, std::move(triangles), grid_perimeter(p, q), coords);
    return make_grid_triangulation(std::move(g), p, q, l);
}

namespace {

struct GridGeometry {
    std::size_t p, l;

    std::size_t x(VertexId v) const { return v % p + 1; }
    std::size_t y(VertexId v) const { return v / p + 1; }
    /// Column index c with v in U(c).
    long column(VertexId v) const { return static_cast<long>((x(v) - 1) / l) + 1; }
    bool yx_less(VertexId a, VertexId b) const
    {
        return y(a) != y(b) ? y(a) < y(b) : x(a) < x(b);
    }
};

long mod4(long c) { return ((c % 4) + 4) % 4; }

VertexId greatest(const std::vector<VertexId>& vs, const GridGeometry& geo)
{
    return *std::max_element(vs.begin(), vs.end(),
                             [&](VertexId a, VertexId b) { return geo.yx_less(a, b); });
}

bool is_shedding(const PlaneTriangulation& g, VertexId v)
{
    return g.n() >= 4 && g.is_boundary(v) && is_shedding_vertex_fast(g, v);
}

/// Shedding vertex for a blocked top vertex v: the greatest shedding vertex in
/// the side of the diagonal at v (towards its greatest partner) that `avoid` rejects nowhere.
VertexId blocked_choice(const PlaneTriangulation& g, VertexId v, const GridGeometry& geo,
                        const std::function<bool(VertexId)>& forbidden, const std::string& where)
{
    if (!g.is_boundary(v))
        throw InvariantViolation(where + ": top vertex " + std::to_string(v) + " is interior");
    auto partners = diagonal_partners(g, v);
    if (partners.empty())
        throw InvariantViolation(where + ": vertex " + std::to_string(v) +
                                 " is neither shedding nor on a diagonal");
    VertexId u = greatest(partners, geo);
    std::vector<VertexId> apex;
    for (const auto& t : g.triangles())
        if (t.contains(u) && t.contains(v))
            for (VertexId w : t.v)
                if (w != u && w != v)
                    apex.push_back(w);
    for (VertexId side : apex) {
        auto comp = diagonal_side(g, Edge::of(u, v), side);
        if (std::none_of(comp.begin(), comp.end(), forbidden))
            return find_shedding_in_region(g, Edge::of(u, v), side);
    }
    throw InvariantViolation(where + ": both sides of diagonal " + std::to_string(u) + "-" +
                             std::to_string(v) + " reach a protected vertex");
}

/// Shedding vertex for tricolumn T(c): take boundary vertices v with y > floor,
/// preferring those accepted by `primary`, greatest first; use v itself when it
/// sheds, otherwise the greatest shedding vertex on the protected-free side of
/// the diagonal at v. Candidates whose choice would touch a protected vertex
/// are skipped.
std::optional<VertexId> choose_in_tricolumn(const PlaneTriangulation& g, const GridGeometry& geo,
                                            long c, std::size_t floor,
                                            const std::function<bool(VertexId)>& forbidden,
                                            const std::function<bool(VertexId)>& primary)
{
    std::vector<VertexId> first, second;
    for (VertexId v : g.vertices())
        if (std::abs(geo.column(v) - c) <= 1 && geo.y(v) > floor && g.is_boundary(v))
            (primary(v) ? first : second).push_back(v);
    auto by_rank = [&](VertexId a, VertexId b) { return geo.yx_less(b, a); };
    std::sort(first.begin(), first.end(), by_rank);
    std::sort(second.begin(), second.end(), by_rank);
    first.insert(first.end(), second.begin(), second.end());
    for (VertexId v : first) {
        std::optional<VertexId> w;
        if (is_shedding(g, v)) {
            w = v;
        } else {
            try {
                w = blocked_choice(g, v, geo, forbidden, "tricolumn " + std::to_string(c));
            } catch (const Error&) {
                continue;
            }
        }
        if (!forbidden(*w) && std::abs(geo.column(*w) - c) <= 1)
            return w;
    }
    return std::nullopt;
}

bool row_one_connected(const PlaneTriangulation& g, const GridGeometry& geo)
{
    std::vector<VertexId> row;
    for (VertexId v : g.vertices())
        if (geo.y(v) <= geo.l)
            row.push_back(v);
    if (row.empty())
        return true;
    std::vector<char> in(g.id_bound(), 0), seen(g.id_bound(), 0);
    for (VertexId v : row)
        in[v] = 1;
    std::vector<VertexId> stack{row.front()};
    seen[row.front()] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(x))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == row.size();
}

}  // namespace

SheddingPlan grid_shedding(const GridTriangulation& grid)
{
    const GridGeometry geo{grid.p, grid.l};
    const std::size_t l = grid.l;
    PlaneTriangulation cur = grid.base;

    SheddingPlan plan;
    plan.p = grid.p;
    plan.q = grid.q;
    plan.l = l;
    plan.stage.assign(cur.id_bound(), 0);
    std::vector<std::vector<VertexId>> batches;  // in removal order
    std::vector<VertexId> removed;
    int last_stage = 1;

    auto protected_stage1 = [&](VertexId v) { return mod4(geo.column(v)) == 3 || geo.y(v) == 1; };
    auto protected_stage2 = [&](VertexId v) { return geo.y(v) <= l; };

    while (cur.n() > 3) {
        std::map<long, std::vector<VertexId>> cols1, tri2;
        for (VertexId v : cur.vertices()) {
            long c = geo.column(v);
            if (mod4(c) == 1 && geo.y(v) > l)
                cols1[c];
            // v lies in the tricolumn T(c') with c' = 3 + 4j and |c - c'| <= 1.
            for (long d = -1; d <= 1; ++d)
                if (mod4(c + d) == 3 && geo.y(v) > 2 * l)
                    tri2[c + d];
        }
        int stage = !cols1.empty() ? 1 : !tri2.empty() ? 2 : 3;
        if (stage < last_stage)
            throw InvariantViolation("stage " + std::to_string(stage) + " after stage " +
                                     std::to_string(last_stage));
        last_stage = stage;

        std::vector<VertexId> batch;
        if (stage == 1) {
            for (const auto& entry : cols1) {
                const long c = entry.first;
                auto w = choose_in_tricolumn(
                    cur, geo, c, l, protected_stage1,
                    [&](VertexId v) { return geo.column(v) == c; });
                if (!w)
                    throw InvariantViolation("stage 1: no admissible vertex in tricolumn around column " +
                                             std::to_string(c));
                batch.push_back(*w);
            }
        } else if (stage == 2) {
            if (!row_one_connected(cur, geo))
                throw InvariantViolation("stage 2: bottom row band R(1) disconnected");
            for (const auto& entry : tri2) {
                const long c = entry.first;
                auto w = choose_in_tricolumn(cur, geo, c, 2 * l, protected_stage2,
                                             [](VertexId) { return true; });
                if (!w)
                    throw InvariantViolation("stage 2: no admissible vertex in tricolumn " +
                                             std::to_string(c));
                batch.push_back(*w);
            }
        } else {
            std::vector<VertexId> cands;
            for (VertexId v : cur.vertices())
                if (is_shedding(cur, v))
                    cands.push_back(v);
            if (cands.empty())
                throw InvariantViolation("stage 3: no shedding vertex");
            batch.push_back(greatest(cands, geo));
        }

        for (std::size_t a = 0; a < batch.size(); ++a)
            for (std::size_t b = a + 1; b < batch.size(); ++b) {
                if (cur.has_edge(batch[a], batch[b]))
                    throw InvariantViolation("batch members " + std::to_string(batch[a]) + " and " +
                                             std::to_string(batch[b]) + " are adjacent");
                for (VertexId w : cur.neighbors(batch[a]))
                    if (cur.has_edge(w, batch[b]))
                        throw InvariantViolation("batch members share neighbour " + std::to_string(w));
            }

        // a_{i-r+k} = w_k, so w_r goes first.
        for (auto it = batch.rbegin(); it != batch.rend(); ++it) {
            VertexId w = *it;
            if (!is_shedding(cur, w))
                throw InvariantViolation("vertex " + std::to_string(w) + " is not shedding when removed");
            cur = cur.remove_vertex(w);
            removed.push_back(w);
            plan.stage[w] = stage;
        }
        plan.stage_steps[stage - 1] += batch.size();
        plan.stage_batches[stage - 1] += 1;
        batches.push_back(std::move(batch));
    }

    // a_3, a_2, a_1: the greatest remaining vertex each time.
    std::vector<VertexId> rest = cur.vertices();
    std::sort(rest.begin(), rest.end(), [&](VertexId a, VertexId b) { return geo.yx_less(b, a); });
    for (VertexId v : rest) {
        if (geo.y(v) > 2 * l)
            throw InvariantViolation("final triangle reaches above the bottom band");
        removed.push_back(v);
        plan.stage[v] = 3;
        plan.stage_steps[2] += 1;
        plan.stage_batches[2] += 1;
        batches.push_back({v});
    }

    std::vector<VertexId> order(removed.rbegin(), removed.rend());
    std::string why;
    if (!is_shedding_sequence(grid.base, order, &why))
        throw InvariantViolation("result is not a shedding sequence: " + why);
    plan.sequence = make_sequence(grid.base, std::move(order));
    plan.antichains.assign(batches.rbegin(), batches.rend());
    return plan;
}

}  // namespace gridlift
