#include "gridlift/embedding.hpp"

#include <algorithm>
#include <map>

namespace gridlift {

PropertyViolation::PropertyViolation(std::size_t step, std::string which, const std::string& detail)
    : Error("step " + std::to_string(step) + ": " + which + " violated: " + detail)
    , step_(step)
    , which_(std::move(which))
{}

namespace {

struct Line {
    Point2 through;
    ExactRat slope;

    ExactRat at(const ExactRat& x) const { return through.y + slope * (x - through.x); }
};

std::optional<Point2> meet(const Line& a, const Line& b)
{
    if (a.slope == b.slope)
        return std::nullopt;
    ExactRat x = (b.through.y - a.through.y + a.slope * a.through.x - b.slope * b.through.x) /
                 (a.slope - b.slope);
    return Point2{x, a.at(x)};
}

// Rational with the smallest denominator in the open interval (lo, hi); hi
// absent means unbounded above.
ExactRat simplest_between(const ExactRat& lo, const std::optional<ExactRat>& hi)
{
    ExactInt k = floor(lo) + 1;
    if (!hi || ExactRat(k) < *hi) {
        if (hi && lo < 0 && *hi > 0)
            return 0;
        if (hi && *hi <= 0)
            return ExactRat(ceil(*hi) - 1);
        return ExactRat(k);
    }
    ExactInt base = k - 1;
    ExactRat a = lo - base;
    ExactRat b = *hi - base;
    std::optional<ExactRat> up;
    if (a > 0)
        up = 1 / a;
    return ExactRat(base) + 1 / simplest_between(1 / b, up);
}

}  // namespace

RationalEmbedding rational_embed(const PlaneTriangulation& g, const SheddingSequence& seq)
{
    RationalEmbedding out{orient_for_base(g, seq), {}};
    const auto runs = attachment_runs(out.graph, seq);
    out.coords.assign(out.graph.id_bound(), {});
    out.coords[seq.at(1)] = {0, 0};
    out.coords[seq.at(2)] = {2, 0};
    out.coords[seq.at(3)] = {1, 1};

    std::vector<VertexId> chain{seq.at(1), seq.at(3), seq.at(2)};
    for (std::size_t i = 4; i <= seq.size(); ++i) {
        const auto& w = runs[i];
        const auto& c = out.coords;
        auto first = std::find(chain.begin(), chain.end(), w.front());
        auto last = std::find(chain.begin(), chain.end(), w.back());

        Line l2{c[w[0]], slope(c[w[0]], c[w[1]])};
        Line l3{c[w[w.size() - 2]], slope(c[w[w.size() - 2]], c[w.back()])};
        Line l1 = first == chain.begin()
                      ? Line{c[w[0]], l2.slope + 1}
                      : Line{c[w[0]], slope(c[*std::prev(first)], c[w[0]])};
        Line l4 = std::next(last) == chain.end()
                      ? Line{c[w.back()], l3.slope - 1}
                      : Line{c[w.back()], slope(c[w.back()], c[*std::next(last)])};

        // S = below l1 and l4, above l2 and l3.
        auto inside = [&](const Point2& p, bool strict) {
            auto below = [&](const Line& l) { return strict ? p.y < l.at(p.x) : p.y <= l.at(p.x); };
            auto above = [&](const Line& l) { return strict ? p.y > l.at(p.x) : p.y >= l.at(p.x); };
            return below(l1) && below(l4) && above(l2) && above(l3);
        };
        std::vector<Point2> corners;
        const Line* lines[4] = {&l1, &l2, &l3, &l4};
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (auto p = meet(*lines[a], *lines[b]); p && inside(*p, false) &&
                                                         std::find(corners.begin(), corners.end(), *p) == corners.end())
                    corners.push_back(*p);
        std::sort(corners.begin(), corners.end(), [](const Point2& a, const Point2& b) {
            return a.y != b.y ? a.y < b.y : a.x < b.x;
        });
        std::vector<Point2> pick;
        for (const auto& p : corners) {
            if (pick.size() == 2 && orient2d(pick[0], pick[1], p) == 0)
                continue;
            pick.push_back(p);
            if (pick.size() == 3)
                break;
        }
        if (pick.size() < 3)
            throw EmptyRegion("step " + std::to_string(i) + ": candidate region is degenerate");
        Point2 centroid{(pick[0].x + pick[1].x + pick[2].x) / 3, (pick[0].y + pick[1].y + pick[2].y) / 3};
        if (!inside(centroid, true))
            throw EmptyRegion("step " + std::to_string(i) + ": centroid outside the region");
        // The centroid itself has growing denominators; take the simplest point
        // of S instead, on the simplest vertical line through its interior.
        auto [xmin, xmax] = std::minmax_element(corners.begin(), corners.end(),
                                                [](const Point2& a, const Point2& b) { return a.x < b.x; });
        ExactRat x = simplest_between(xmin->x, xmax->x);
        ExactRat lo = std::max(l2.at(x), l3.at(x));
        ExactRat hi = std::min(l1.at(x), l4.at(x));
        Point2 p{x, simplest_between(lo, hi)};
        if (!inside(p, true))
            throw EmptyRegion("step " + std::to_string(i) + ": chosen point outside the region");
        out.coords[seq.at(i)] = p;

        chain.erase(std::next(first), last);
        chain.insert(std::next(std::find(chain.begin(), chain.end(), w.front())), seq.at(i));
    }
    return out;
}

ScaledTemplate scale_template(const ReducedTriangulation& red, std::size_t n)
{
    ScaledTemplate t;
    t.n = n;
    t.alpha = ExactInt(2) * n * n + n + 1;
    t.beta = ExactInt(2) * n * t.alpha;
    t.z.assign(red.size + 1, {});
    for (std::size_t r = 1; r <= red.size; ++r)
        t.z[r] = {t.alpha * red.points[r].x, t.beta * red.points[r].y};
    t.max_abs_slope = red.max_abs_slope() * make_rat(t.beta, t.alpha);

    // Boundary chain of every Z_r; gaps between consecutive slopes.
    std::map<ExactInt, std::size_t> by_x;
    by_x[t.z[1].x] = 1;
    by_x[t.z[2].x] = 2;
    bool have_gap = false;
    for (std::size_t r = 3; r <= red.size; ++r) {
        by_x[t.z[r].x] = r;
        std::vector<ExactRat> slopes;
        for (auto it = by_x.begin(); std::next(it) != by_x.end(); ++it)
            slopes.push_back(slope(t.z[it->second], t.z[std::next(it)->second]));
        for (std::size_t k = 0; k + 1 < slopes.size(); ++k) {
            ExactRat gap = abs(slopes[k] - slopes[k + 1]);
            if (!have_gap || gap < t.min_slope_gap) {
                t.min_slope_gap = gap;
                have_gap = true;
            }
        }
    }
    return t;
}

HighDegreePlacement place_high_degree(std::span<const IntPoint2> run)
{
    if (run.size() < 3)
        throw Error("place_high_degree: need at least three attachment vertices");
    const IntPoint2& w1 = run.front();
    const IntPoint2& wk = run.back();
    HighDegreePlacement out;
    out.s = slope(w1, run[1]);
    out.u = slope(run[run.size() - 2], wk);
    if (out.s <= out.u)
        throw ParallelSupportLines("support slopes are not strictly decreasing");
    Line ls{w1.rational(), out.s};
    Line lu{wk.rational(), out.u};
    out.meet = *meet(ls, lu);
    ExactInt x = ceil(out.meet.x);
    out.gamma = ExactRat(x) - out.meet.x;
    ExactInt y = ceil(out.meet.y) + floor(out.gamma * out.s) + 1;
    out.point = {x, y};
    return out;
}

DegreeTwoPlacement place_degree_two(const IntPoint2& w1, const IntPoint2& w2, const IntPoint2& b1,
                                    const IntPoint2& b2, const IntPoint2& z)
{
    DegreeTwoPlacement out;
    ExactRat lambda = make_rat(w2.x - w1.x, b2.x - b1.x);
    out.v1 = {ExactRat(w1.x), ExactRat(w2.y) + lambda * (b1.y - b2.y)};
    out.v3 = {ExactRat(w2.x) + lambda * (z.x - b2.x), ExactRat(w2.y) + lambda * (z.y - b2.y)};
    out.eta = out.v1.y - w1.y;
    out.kappa = make_rat(b2.x - z.x, b2.x - b1.x);
    out.v3_sheared = {out.v3.x, out.v3.y - out.kappa * out.eta};
    ExactInt x = z.x <= 0 ? floor(out.v3_sheared.x) : ceil(out.v3_sheared.x);
    out.point = {x, ceil(out.v3_sheared.y)};
    return out;
}

ExactInt GridEmbedding::width() const
{
    return coords[sequence.at(2)].x - coords[sequence.at(1)].x;
}

ExactInt GridEmbedding::height() const
{
    ExactInt top = 0;
    for (VertexId v : graph.vertices())
        if (coords[v].y > top)
            top = coords[v].y;
    return top;
}

GridEmbedding grid_embed(const PlaneTriangulation& g, const SheddingSequence& seq,
                         const EmbedOptions& options)
{
    PlaneTriangulation oriented = orient_for_base(g, seq);
    const auto runs = attachment_runs(oriented, seq);
    const SheddingTrees trees = build_shedding_trees(oriented, seq);
    const ReducedStructure rs = reduce(trees, seq);
    const ReducedTriangulation red = build_reduced_triangulation(rs, trees);
    const std::size_t n = seq.size();

    GridEmbedding out;
    out.sequence = seq;
    out.templ = scale_template(red, n);
    const auto& z = out.templ.z;
    auto& coords = out.coords;
    coords.assign(oriented.id_bound(), {});
    coords[seq.at(1)] = z[1];
    coords[seq.at(2)] = z[2];

    std::vector<VertexId> chain{seq.at(1), seq.at(2)};
    std::vector<std::size_t> chain_node{0};  // tree node of chain edge k = (chain[k], chain[k+1])

    auto zedge = [&](std::size_t node) { return red.node_edge[node]; };

    for (std::size_t i = 3; i <= n; ++i) {
        const auto& w = runs[i];
        const VertexId a = seq.at(i);
        const std::size_t k = w.size();
        const std::size_t left = static_cast<std::size_t>(
            std::find(chain.begin(), chain.end(), w.front()) - chain.begin());
        const std::size_t right = left + k - 1;

        StepAudit audit;
        audit.step = i;
        audit.degree = k;
        const IntPoint2& w1 = coords[w.front()];
        const IntPoint2& wk = coords[w.back()];

        if (k == 2) {
            const std::size_t r = rs.rho[i];
            const auto expected = std::make_pair(red.f[r], red.g[r]);
            if (zedge(chain_node[left]) != expected)
                throw PropertyViolation(i, "template correspondence",
                                        "Z(w1 w2) is not the edge b1 b2 of the template");
            const IntPoint2& b1 = z[red.f[r]];
            const IntPoint2& b2 = z[red.g[r]];
            auto pl = place_degree_two(w1, wk, b1, b2, z[r]);
            coords[a] = pl.point;
            if (options.audit) {
                ExactRat q1 = slope(b1, z[r]);
                ExactRat q2 = slope(z[r], b2);
                ExactRat qb1 = slope(w1.rational(), pl.v3_sheared);
                ExactRat qb2 = slope(pl.v3_sheared, wk.rational());
                audit.epsilon = slope(w1, wk) - slope(b1, b2);
                audit.q1_bar_shift = qb1 - q1;
                audit.q2_bar_shift = qb2 - q2;
                audit.q1_round = slope(w1, pl.point) - qb1;
                audit.q2_round = qb2 - slope(pl.point, wk);
                if (*audit.q1_bar_shift != *audit.epsilon || *audit.q2_bar_shift != *audit.epsilon)
                    throw PropertyViolation(i, "slope propagation", "qbar - q differs from epsilon");
                if (abs(*audit.q1_round) >= 1 || abs(*audit.q2_round) >= 1)
                    throw PropertyViolation(i, "rounding drift", "rounded slope moved by >= 1");
            }
        } else {
            std::vector<IntPoint2> pts;
            for (VertexId v : w)
                pts.push_back(coords[v]);
            auto pl = place_high_degree(pts);
            coords[a] = pl.point;
            if (options.audit) {
                audit.s_shift = slope(w1, pl.point) - pl.s;
                audit.u_shift = pl.u - slope(pl.point, wk);
                if (!(*audit.s_shift > 0 && *audit.s_shift < 1))
                    throw PropertyViolation(i, "left slope shift", "s' - s not in (0, 1)");
                if (!(*audit.u_shift > 0 && *audit.u_shift <= 1))
                    throw PropertyViolation(i, "right slope shift", "u - u' not in (0, 1]");
                if (pl.meet.x < coords[w[1]].x || pl.meet.x > coords[w[k - 2]].x)
                    throw PropertyViolation(i, "support intersection",
                                            "xbar outside [x(w2), x(w_{k-1})]");
            }
        }

        // Splice a_i into the chain; its two new edges carry the tree nodes of step i.
        chain.erase(chain.begin() + static_cast<long>(left) + 1,
                    chain.begin() + static_cast<long>(right));
        chain.insert(chain.begin() + static_cast<long>(left) + 1, a);
        chain_node.erase(chain_node.begin() + static_cast<long>(left),
                         chain_node.begin() + static_cast<long>(right));
        chain_node.insert(chain_node.begin() + static_cast<long>(left),
                          {SheddingTrees::left_node(i), SheddingTrees::right_node(i)});

        if (!options.audit)
            continue;

        const IntPoint2& p = coords[a];
        for (std::size_t j = 0; j + 1 < k; ++j)
            if (orient2d(coords[w[j]], coords[w[j + 1]], p) <= 0)
                throw PropertyViolation(i, "P(i,3)", "new triangle is not counterclockwise");

        bool first = true;
        audit.slopes_decreasing = true;
        std::optional<ExactRat> prev_slope;
        for (std::size_t e = 0; e + 1 < chain.size(); ++e) {
            const IntPoint2& u = coords[chain[e]];
            const IntPoint2& v = coords[chain[e + 1]];
            auto [r1, r2] = zedge(chain_node[e]);
            if (v.x <= u.x)
                throw PropertyViolation(i, "P(i,3)", "boundary chain not x-monotone");
            ExactRat slack = ExactRat(v.x - u.x) - ExactRat(z[r2].x - z[r1].x);
            ExactRat s = slope(u, v);
            ExactRat dev = abs(s - slope(z[r1], z[r2]));
            if (first || slack < audit.min_x_slack)
                audit.min_x_slack = slack;
            if (first || dev > audit.max_slope_deviation)
                audit.max_slope_deviation = dev;
            first = false;
            if (prev_slope && !(s < *prev_slope))
                audit.slopes_decreasing = false;
            prev_slope = s;
        }
        if (audit.min_x_slack < 0)
            throw PropertyViolation(i, "P(i,1)", "x(e) < x(Z(e))");
        if (audit.max_slope_deviation > ExactRat(static_cast<long>(i)))
            throw PropertyViolation(i, "P(i,2)", "|s(e) - s(Z(e))| > i");
        if (!audit.slopes_decreasing)
            throw PropertyViolation(i, "P(i,3)", "boundary slopes not strictly decreasing");

        if (i > 3) {
            const std::size_t pos = left + 1;  // index of a_i in the chain
            if (pos >= 2)
                audit.left_separation = slope(coords[chain[pos - 2]], coords[chain[pos - 1]]) -
                                        slope(coords[chain[pos - 1]], p);
            if (pos + 2 < chain.size())
                audit.right_separation = slope(p, coords[chain[pos + 1]]) -
                                         slope(coords[chain[pos + 1]], coords[chain[pos + 2]]);
            if ((audit.left_separation && *audit.left_separation < 1) ||
                (audit.right_separation && *audit.right_separation < 1))
                throw PropertyViolation(i, "local separation", "convexity margin below 1");
        }
        out.audit.push_back(std::move(audit));
    }

    out.chain = chain;
    for (std::size_t node : chain_node)
        out.correspondence.push_back(zedge(node));
    std::vector<IntPoint2> full(oriented.id_bound());
    for (VertexId v : oriented.vertices())
        full[v] = coords[v];
    out.graph = PlaneTriangulation(oriented.vertices(), oriented.triangles(), oriented.boundary(),
                                   std::move(full));
    return out;
}

std::vector<std::vector<VertexId>> prefix_chains(const PlaneTriangulation& g,
                                                 const SheddingSequence& seq)
{
    const auto runs = attachment_runs(g, seq);
    std::vector<std::vector<VertexId>> chains(seq.size() + 1);
    chains[2] = {seq.at(1), seq.at(2)};
    for (std::size_t i = 3; i <= seq.size(); ++i) {
        const auto& prev = chains[i - 1];
        const auto& w = runs[i];
        auto first = std::find(prev.begin(), prev.end(), w.front());
        auto last = std::find(prev.begin(), prev.end(), w.back());
        std::vector<VertexId> next(prev.begin(), std::next(first));
        next.push_back(seq.at(i));
        next.insert(next.end(), last, prev.end());
        chains[i] = std::move(next);
    }
    return chains;
}

std::optional<std::string> sequential_convexity_failure(const PlaneTriangulation& g,
                                                        const SheddingSequence& seq,
                                                        const std::vector<IntPoint2>& coords)
{
    for (const auto& t : g.triangles())
        if (orient2d(coords[t.v[0]], coords[t.v[1]], coords[t.v[2]]) <= 0)
            return "triangle (" + std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
                   std::to_string(t.v[2]) + ") is not counterclockwise";
    const auto chains = prefix_chains(g, seq);
    for (std::size_t i = 3; i <= seq.size(); ++i) {
        const auto& c = chains[i];
        std::optional<ExactRat> prev;
        for (std::size_t e = 0; e + 1 < c.size(); ++e) {
            if (coords[c[e + 1]].x <= coords[c[e]].x)
                return "G_" + std::to_string(i) + ": upper chain not x-monotone at vertex " +
                       std::to_string(c[e + 1]);
            ExactRat s = slope(coords[c[e]], coords[c[e + 1]]);
            if (prev && !(s < *prev))
                return "G_" + std::to_string(i) + ": slopes not strictly decreasing at vertex " +
                       std::to_string(c[e]);
            prev = s;
        }
    }
    return std::nullopt;
}

}  // namespace gridlift
