#include "gridlift/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gridlift {

std::string Certificate::line() const
{
    return pass ? "PASS " + kind : "FAIL " + kind + " " + witness;
}

Certificate Certificate::parse(const std::string& line)
{
    std::istringstream in(line);
    std::string status;
    Certificate c;
    if (!(in >> status >> c.kind) || (status != "PASS" && status != "FAIL"))
        throw Error("malformed certificate line: " + line);
    c.pass = status == "PASS";
    std::getline(in, c.witness);
    if (!c.witness.empty() && c.witness.front() == ' ')
        c.witness.erase(0, 1);
    if (!c.pass && c.witness.empty())
        throw Error("failed certificate without witness: " + line);
    return c;
}

std::string write_report(const std::vector<Certificate>& certs)
{
    std::string out;
    for (const auto& c : certs)
        out += c.line() + "\n";
    return out;
}

std::vector<Certificate> read_report(const std::string& text)
{
    std::vector<Certificate> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            out.push_back(Certificate::parse(line));
    return out;
}

bool all_pass(const std::vector<Certificate>& certs)
{
    return std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.pass; });
}

namespace {

Certificate ok(std::string kind) { return {std::move(kind), true, {}}; }
Certificate fail(std::string kind, std::string witness) { return {std::move(kind), false, std::move(witness)}; }

std::string face_name(std::array<VertexId, 3> f)
{
    return "face(" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," + std::to_string(f[2]) + ")";
}

std::string edge_name(VertexId a, VertexId b)
{
    return "edge(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string vertex_name(VertexId v) { return "vertex(" + std::to_string(v) + ")"; }

std::set<std::array<VertexId, 3>> face_set(const PlaneTriangulation& g)
{
    std::set<std::array<VertexId, 3>> out;
    for (const auto& t : g.triangles()) {
        auto f = t.v;
        std::sort(f.begin(), f.end());
        out.insert(f);
    }
    return out;
}

std::vector<Point2> rational_coords(const PlaneTriangulation& g)
{
    std::vector<Point2> out(g.id_bound());
    if (g.has_coords())
        for (VertexId v : g.vertices())
            out[v] = g.coord(v).rational();
    return out;
}

bool on_segment(const Point2& p, const Point2& q, const Point2& r)
{
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
}

bool segments_touch(const Point2& a, const Point2& b, const Point2& c, const Point2& d)
{
    int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
    int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0)
        return true;
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

}  // namespace

Certificate check_face_isomorphic(const PlaneTriangulation& g, const PlaneTriangulation& h)
{
    const std::string kind = "face-isomorphic";
    if (g.n() != h.n())
        return fail(kind, "vertex-count(" + std::to_string(g.n()) + "," + std::to_string(h.n()) + ")");
    for (VertexId v : g.vertices())
        if (!h.contains(v))
            return fail(kind, vertex_name(v));
    auto fg = face_set(g);
    auto fh = face_set(h);
    for (const auto& f : fg)
        if (!fh.count(f))
            return fail(kind, face_name(f));
    for (const auto& f : fh)
        if (!fg.count(f))
            return fail(kind, face_name(f));
    return ok(kind);
}

Certificate check_embedding(const PlaneTriangulation& g, const std::vector<Point2>& c)
{
    const std::string kind = "embedding";
    for (const auto& t : g.triangles())
        if (orient2d(c[t.v[0]], c[t.v[1]], c[t.v[2]]) <= 0)
            return fail(kind, face_name(t.v));
    const auto& b = g.boundary();
    const std::size_t m = b.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const Point2 &p = c[b[i]], &q = c[b[(i + 1) % m]];
            const Point2 &r = c[b[j]], &s = c[b[(j + 1) % m]];
            bool adjacent = j == i + 1 || (i == 0 && j == m - 1);
            if (adjacent) {
                // Consecutive edges share one endpoint; they may not fold back.
                const Point2& far = j == i + 1 ? s : r;
                const Point2& mid = j == i + 1 ? q : p;
                const Point2& other = j == i + 1 ? p : q;
                if (orient2d(other, mid, far) == 0 && on_segment(other, far, mid) == false)
                    return fail(kind, edge_name(b[i], b[(i + 1) % m]));
                continue;
            }
            if (segments_touch(p, q, r, s))
                return fail(kind, edge_name(b[i], b[(i + 1) % m]));
        }
    return ok(kind);
}

Certificate check_embedding(const PlaneTriangulation& g)
{
    if (!g.has_coords())
        return fail("embedding", "no-coordinates");
    return check_embedding(g, rational_coords(g));
}

Certificate check_projectively_convex(const std::vector<ExactRat>& slopes)
{
    const std::string kind = "projectively-convex";
    for (std::size_t k = 0; k + 1 < slopes.size(); ++k)
        if (!(slopes[k + 1] < slopes[k]))
            return fail(kind, "slope-index(" + std::to_string(k + 1) + ")");
    return ok(kind);
}

Certificate check_projectively_convex(const std::vector<Point2>& chain)
{
    const std::string kind = "projectively-convex";
    std::vector<ExactRat> slopes;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        if (!(chain[k].x < chain[k + 1].x))
            return fail(kind, "chain-index(" + std::to_string(k + 1) + ")");
        slopes.push_back(slope(chain[k], chain[k + 1]));
    }
    return check_projectively_convex(slopes);
}

Certificate check_sequentially_convex(const PlaneTriangulation& g, const SheddingSequence& seq,
                                      const std::vector<Point2>& coords)
{
    const std::string kind = "sequentially-convex";
    if (seq.size() != g.n() || seq.size() < 3)
        return fail(kind, "sequence-length(" + std::to_string(seq.size()) + ")");
    const VertexId a1 = seq.at(1), a2 = seq.at(2);
    PlaneTriangulation cur = g;
    for (std::size_t i = seq.size(); i >= 3; --i) {
        const auto& cyc = cur.boundary();
        long at = cur.boundary_index(a1);
        if (at < 0 || cyc[(static_cast<std::size_t>(at) + 1) % cyc.size()] != a2)
            return fail(kind, "G_" + std::to_string(i) + ":" + edge_name(a1, a2));
        std::vector<Point2> chain;
        std::vector<VertexId> ids;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            VertexId v = cyc[(static_cast<std::size_t>(at) + cyc.size() - k) % cyc.size()];
            ids.push_back(v);
            chain.push_back(coords[v]);
        }
        auto c = check_projectively_convex(chain);
        if (!c.pass)
            return fail(kind, "G_" + std::to_string(i) + ":" + c.witness);
        if (i > 3) {
            try {
                cur = cur.remove_vertex(seq.at(i));
            } catch (const Error&) {
                return fail(kind, "G_" + std::to_string(i) + ":" + vertex_name(seq.at(i)));
            }
        }
    }
    return check_embedding(g, coords).pass ? ok(kind) : fail(kind, check_embedding(g, coords).witness);
}

Certificate check_sequentially_convex(const PlaneTriangulation& g, const SheddingSequence& seq)
{
    if (!g.has_coords())
        return fail("sequentially-convex", "no-coordinates");
    return check_sequentially_convex(g, seq, rational_coords(g));
}

bool globally_convex(const PlaneTriangulation& g, const std::vector<Point3>& points, std::string* witness)
{
    for (const auto& t : g.triangles()) {
        Plane pl;
        try {
            pl = plane_through(points[t.v[0]], points[t.v[1]], points[t.v[2]]);
        } catch (const DegenerateFace&) {
            if (witness)
                *witness = face_name(t.v);
            return false;
        }
        for (VertexId v : g.vertices()) {
            int side = side_of_plane(pl, points[v]);
            if (side < 0 || (side == 0 && !t.contains(v))) {
                if (witness)
                    *witness = face_name(t.v) + ":" + vertex_name(v);
                return false;
            }
        }
    }
    return true;
}

Certificate check_lift_convex(const PlaneTriangulation& g, const std::vector<Point3>& points,
                              const LiftCheckOptions& options)
{
    const std::string kind = "lift-convex";
    std::map<std::pair<VertexId, VertexId>, std::size_t> owner;
    const auto& tris = g.triangles();
    for (std::size_t t = 0; t < tris.size(); ++t)
        for (int k = 0; k < 3; ++k)
            owner[{tris[t].v[k], tris[t].v[(k + 1) % 3]}] = t;

    std::optional<std::string> local_failure;
    for (std::size_t t = 0; t < tris.size() && !local_failure; ++t) {
        const auto& tri = tris[t];
        Plane pl;
        try {
            pl = plane_through(points[tri.v[0]], points[tri.v[1]], points[tri.v[2]]);
        } catch (const DegenerateFace&) {
            local_failure = face_name(tri.v);
            break;
        }
        for (int k = 0; k < 3; ++k) {
            VertexId u = tri.v[k], v = tri.v[(k + 1) % 3];
            auto opp = owner.find({v, u});
            if (opp == owner.end())
                continue;
            VertexId x = 0;
            for (VertexId w : tris[opp->second].v)
                if (w != u && w != v)
                    x = w;
            if (side_of_plane(pl, points[x]) <= 0) {
                local_failure = edge_name(std::min(u, v), std::max(u, v));
                break;
            }
        }
    }
    if (options.global && g.n() <= options.global_max_n) {
        std::string witness;
        bool global = globally_convex(g, points, &witness);
        if (global != !local_failure.has_value())
            return fail(kind, "oracle-disagreement:" + (local_failure ? *local_failure : witness));
    }
    if (local_failure)
        return fail(kind, *local_failure);
    return ok(kind);
}

Certificate check_lift_convex(const LiftedPolyhedron& p, const LiftCheckOptions& options)
{
    return check_lift_convex(p.graph, p.points, options);
}

Certificate check_polytope_convex(const std::vector<Point3>& points,
                                  const std::vector<std::array<std::size_t, 3>>& faces)
{
    const std::string kind = "polytope-convex";
    std::map<std::pair<std::size_t, std::size_t>, int> directed;
    for (const auto& f : faces)
        for (int k = 0; k < 3; ++k)
            ++directed[{f[k], f[(k + 1) % 3]}];
    for (const auto& [e, count] : directed)
        if (count != 1 || directed.count({e.second, e.first}) == 0)
            return fail(kind, "edge(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        const auto& f = faces[fi];
        const Point3 &a = points[f[0]], &b = points[f[1]], &c = points[f[2]];
        ExactInt ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
        ExactInt vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
        ExactInt nx = uy * vz - uz * vy, ny = uz * vx - ux * vz, nz = ux * vy - uy * vx;
        for (std::size_t v = 0; v < points.size(); ++v) {
            if (v == f[0] || v == f[1] || v == f[2])
                continue;
            ExactInt d = nx * (points[v].x - a.x) + ny * (points[v].y - a.y) + nz * (points[v].z - a.z);
            if (d >= 0)
                return fail(kind, "face-index(" + std::to_string(fi) + "):point(" + std::to_string(v) + ")");
        }
    }
    return ok(kind);
}

Certificate check_vertical_projection(const PlaneTriangulation& g, const std::vector<Point3>& points)
{
    const std::string kind = "vertical-projection";
    if (!g.has_coords())
        return fail(kind, "no-coordinates");
    for (VertexId v : g.vertices())
        if (points[v].x != g.coord(v).x || points[v].y != g.coord(v).y)
            return fail(kind, vertex_name(v));
    return ok(kind);
}

Certificate check_grid_bounds(const PlaneTriangulation& g, std::size_t n)
{
    const std::string kind = "grid-bounds";
    if (!g.has_coords())
        return fail(kind, "no-coordinates");
    const auto& vs = g.vertices();
    auto [xlo, xhi] = std::minmax_element(vs.begin(), vs.end(), [&](VertexId a, VertexId b) {
        return g.coord(a).x < g.coord(b).x;
    });
    auto [ylo, yhi] = std::minmax_element(vs.begin(), vs.end(), [&](VertexId a, VertexId b) {
        return g.coord(a).y < g.coord(b).y;
    });
    ExactInt w = g.coord(*xhi).x - g.coord(*xlo).x;
    ExactInt h = g.coord(*yhi).y - g.coord(*ylo).y;
    ExactInt N(n);
    if (w > 4 * N * N * N)
        return fail(kind, "width(" + to_string(w) + ")");
    if (h > 8 * N * N * N * N * N)
        return fail(kind, "height(" + to_string(h) + ")");
    return ok(kind);
}

Certificate check_height_bounds(const PlaneTriangulation& g, const std::vector<Point3>& points,
                                std::size_t n, std::size_t tau)
{
    const std::string kind = "height-bounds";
    const auto& vs = g.vertices();
    ExactInt lo = points[vs.front()].z, hi = lo;
    for (VertexId v : vs) {
        lo = std::min(lo, points[v].z);
        hi = std::max(hi, points[v].z);
    }
    ExactInt base = 500;
    ExactInt n8;
    mpz_pow_ui(n8.get_mpz_t(), ExactInt(n).get_mpz_t(), 8);
    base *= n8;
    ExactInt by_tau, by_n;
    mpz_pow_ui(by_tau.get_mpz_t(), base.get_mpz_t(), tau);
    mpz_pow_ui(by_n.get_mpz_t(), base.get_mpz_t(), n);
    ExactInt extent = hi - lo;
    if (extent > by_tau)
        return fail(kind, "z-extent-vs-tau(" + to_string(extent) + ")");
    if (extent > by_n)
        return fail(kind, "z-extent-vs-n(" + to_string(extent) + ")");
    return ok(kind);
}

Certificate check_step_heights(const PlaneTriangulation& g, const SheddingSequence& seq,
                               const std::vector<Point3>& points)
{
    const std::string kind = "step-heights";
    std::vector<std::size_t> rank(g.id_bound(), 0);
    for (std::size_t i = 1; i <= seq.size(); ++i)
        rank[seq.at(i)] = i;
    for (std::size_t i = 1; i <= seq.size(); ++i) {
        VertexId a = seq.at(i);
        if (i <= 3) {
            if (points[a].z != 0)
                return fail(kind, vertex_name(a));
            continue;
        }
        std::optional<ExactInt> m;
        for (VertexId w : g.neighbors(a))
            if (rank[w] < i && (!m || points[w].z > *m))
                m = points[w].z;
        if (!m || points[a].z > height_bound(seq.size(), *m))
            return fail(kind, vertex_name(a));
    }
    return ok(kind);
}

Certificate check_shedding_sequence(const PlaneTriangulation& g, const SheddingSequence& seq)
{
    std::string why;
    if (is_shedding_sequence(g, seq.order, &why))
        return ok("shedding-sequence");
    for (char& ch : why)
        if (ch == '\n')
            ch = ' ';
    return fail("shedding-sequence", why.empty() ? "invalid" : why);
}

Certificate check_antichains(const PlaneTriangulation& g, const SheddingSequence& seq,
                             const std::vector<std::vector<VertexId>>& blocks)
{
    const std::string kind = "antichains";
    std::vector<std::size_t> rank(g.id_bound(), 0);
    for (std::size_t i = 1; i <= seq.size(); ++i)
        rank[seq.at(i)] = i;
    // below[v]: vertices reachable from v by walking to earlier neighbours.
    auto reaches_down = [&](VertexId from, VertexId to) {
        std::vector<char> seen(g.id_bound(), 0);
        std::vector<VertexId> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            if (x == to)
                return true;
            for (VertexId w : g.neighbors(x))
                if (rank[w] < rank[x] && rank[w] >= rank[to] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return false;
    };
    for (const auto& block : blocks)
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b) {
                VertexId hi = rank[block[a]] > rank[block[b]] ? block[a] : block[b];
                VertexId lo = hi == block[a] ? block[b] : block[a];
                if (reaches_down(hi, lo))
                    return fail(kind, "pair(" + std::to_string(lo) + "," + std::to_string(hi) + ")");
            }
    return ok(kind);
}

}  // namespace gridlift
