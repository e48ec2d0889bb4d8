#include "gridlift/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gridlift {

PlaneTriangulation orient_for_base(const PlaneTriangulation& g, const SheddingSequence& seq)
{
    VertexId a1 = seq.at(1);
    VertexId a2 = seq.at(2);
    if (g.is_directed_boundary_edge(a1, a2))
        return g;
    if (g.is_directed_boundary_edge(a2, a1))
        return g.reversed();
    throw Error("a_1 a_2 is not a boundary edge");
}

std::vector<std::vector<VertexId>> attachment_runs(const PlaneTriangulation& g,
                                                   const SheddingSequence& seq)
{
    const std::size_t n = seq.size();
    if (n != g.n() || n < 3)
        throw Error("attachment_runs: sequence does not match the triangulation");
    if (!g.is_directed_boundary_edge(seq.at(1), seq.at(2)))
        throw Error("attachment_runs: triangulation not oriented for the base edge");

    std::vector<long> rank(g.id_bound(), -1);
    for (std::size_t i = 1; i <= n; ++i)
        rank[seq.at(i)] = static_cast<long>(i);

    std::set<std::array<VertexId, 3>> oriented;
    for (const auto& t : g.triangles()) {
        auto r = t.v;
        std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
        oriented.insert(r);
    }
    auto has_ccw = [&](VertexId a, VertexId b, VertexId c) {
        std::array<VertexId, 3> r{a, b, c};
        std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
        return oriented.count(r) > 0;
    };

    std::vector<std::vector<VertexId>> runs(n + 1);
    std::vector<VertexId> chain{seq.at(1), seq.at(2)};
    for (std::size_t i = 3; i <= n; ++i) {
        VertexId a = seq.at(i);
        std::vector<std::size_t> pos;
        for (VertexId w : g.neighbors(a)) {
            if (rank[w] >= static_cast<long>(i))
                continue;
            auto it = std::find(chain.begin(), chain.end(), w);
            if (it == chain.end())
                throw Error("a_" + std::to_string(i) + " has an earlier neighbour " +
                            std::to_string(w) + " off the boundary of G_" + std::to_string(i - 1));
            pos.push_back(static_cast<std::size_t>(it - chain.begin()));
        }
        std::sort(pos.begin(), pos.end());
        if (pos.size() < 2 || pos.back() - pos.front() + 1 != pos.size())
            throw Error("a_" + std::to_string(i) +
                        " does not attach along a boundary path of G_" + std::to_string(i - 1));
        std::vector<VertexId> run(chain.begin() + static_cast<long>(pos.front()),
                                  chain.begin() + static_cast<long>(pos.back()) + 1);
        for (std::size_t j = 0; j + 1 < run.size(); ++j)
            if (!has_ccw(run[j], run[j + 1], a))
                throw Error("triangle (" + std::to_string(run[j]) + "," +
                            std::to_string(run[j + 1]) + "," + std::to_string(a) +
                            ") missing or wrongly oriented");
        chain.erase(chain.begin() + static_cast<long>(pos.front()) + 1,
                    chain.begin() + static_cast<long>(pos.back()));
        chain.insert(chain.begin() + static_cast<long>(pos.front()) + 1, a);
        runs[i] = std::move(run);
    }
    return runs;
}

std::size_t SheddingTrees::node_count(std::size_t i) const
{
    return i < 2 ? 0 : 1 + 2 * (i - 2);
}

namespace {

void shape(const std::vector<long>& left, const std::vector<long>& right,
           const std::vector<std::size_t>& step, long node, std::size_t limit, std::string& out)
{
    auto live = [&](long c) { return c >= 0 && step[static_cast<std::size_t>(c)] <= limit; };
    long l = left[static_cast<std::size_t>(node)];
    long r = right[static_cast<std::size_t>(node)];
    if (!live(l) && !live(r)) {
        out += '.';
        return;
    }
    out += '(';
    if (live(l))
        shape(left, right, step, l, limit, out);
    else
        out += '-';
    out += ',';
    if (live(r))
        shape(left, right, step, r, limit, out);
    else
        out += '-';
    out += ')';
}

}  // namespace

std::string SheddingTrees::canonical(std::size_t i) const
{
    std::vector<long> left, right;
    std::vector<std::size_t> step;
    for (const auto& nd : nodes) {
        left.push_back(nd.left_child);
        right.push_back(nd.right_child);
        step.push_back(nd.step);
    }
    std::string out;
    shape(left, right, step, 0, i, out);
    return out;
}

std::string SheddingTrees::dump(std::size_t i) const
{
    std::string out;
    std::vector<std::pair<long, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [node, depth] = stack.back();
        stack.pop_back();
        const auto& nd = nodes[static_cast<std::size_t>(node)];
        out += std::string(2 * depth, ' ');
        out += nd.parent < 0 ? "root" : (nd.is_left_child ? "L" : "R");
        out += ' ' + std::to_string(nd.left) + '-' + std::to_string(nd.right) + " step " +
               std::to_string(nd.step) + '\n';
        for (long c : {nd.right_child, nd.left_child})
            if (c >= 0 && nodes[static_cast<std::size_t>(c)].step <= i)
                stack.push_back({c, depth + 1});
    }
    return out;
}

SheddingTrees build_shedding_trees(const PlaneTriangulation& g, const SheddingSequence& seq)
{
    const auto runs = attachment_runs(g, seq);
    const std::size_t n = seq.size();
    SheddingTrees trees;
    trees.n = n;
    trees.nodes.push_back({seq.at(1), seq.at(2), 2, -1, false, -1, -1});

    std::map<std::pair<VertexId, VertexId>, std::size_t> boundary_node;
    boundary_node[{seq.at(1), seq.at(2)}] = 0;
    for (std::size_t i = 3; i <= n; ++i) {
        const auto& w = runs[i];
        VertexId a = seq.at(i);
        auto xi = boundary_node.find({w[0], w[1]});
        auto xi2 = boundary_node.find({w[w.size() - 2], w.back()});
        if (xi == boundary_node.end() || xi2 == boundary_node.end())
            throw Error("shedding tree: attachment edge is not a current boundary edge");
        const std::size_t p = xi->second;
        const std::size_t p2 = xi2->second;
        const std::size_t ln = trees.nodes.size();
        trees.nodes.push_back({w[0], a, i, static_cast<long>(p), true, -1, -1});
        trees.nodes.push_back({a, w.back(), i, static_cast<long>(p2), false, -1, -1});
        trees.nodes[p].left_child = static_cast<long>(ln);
        trees.nodes[p2].right_child = static_cast<long>(ln + 1);
        for (std::size_t j = 0; j + 1 < w.size(); ++j)
            boundary_node.erase({w[j], w[j + 1]});
        boundary_node[{w[0], a}] = ln;
        boundary_node[{a, w.back()}] = ln + 1;
    }
    return trees;
}

std::string ReducedStructure::canonical(std::size_t i) const
{
    std::string out;
    shape(rleft, rright, node_step, 0, i, out);
    return out;
}

std::size_t ReducedStructure::node_count(std::size_t i) const
{
    std::size_t count = 0;
    for (std::size_t k = 0; k < rep.size(); ++k)
        if (rep[k] == k && node_step[k] <= i)
            ++count;
    return count;
}

bool ReducedStructure::full_binary(std::size_t i) const
{
    for (std::size_t k = 0; k < rep.size(); ++k) {
        if (rep[k] != k || node_step[k] > i)
            continue;
        bool l = rleft[k] >= 0 && node_step[static_cast<std::size_t>(rleft[k])] <= i;
        bool r = rright[k] >= 0 && node_step[static_cast<std::size_t>(rright[k])] <= i;
        if (l != r)
            return false;
    }
    return true;
}

ReducedStructure reduce(const SheddingTrees& trees, const SheddingSequence& seq)
{
    const std::size_t n = seq.size();
    ReducedStructure rs;
    rs.n = n;
    rs.rho.assign(n + 1, 0);
    rs.h.assign(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        if (seq.degree_at(i) <= 2) {
            rs.steps.push_back(i);
            rs.rho[i] = rs.steps.size();
        }
        rs.h[i] = rs.steps.size();
    }
    if (n < 3 || rs.rho[1] != 1 || rs.rho[2] != 2 || rs.rho[3] != 3)
        throw MalformedTreeSequence("steps 1, 2, 3 must all be reduced steps");

    const std::size_t count = trees.nodes.size();
    rs.rep.resize(count);
    rs.node_step.resize(count);
    rs.rleft.assign(count, -1);
    rs.rright.assign(count, -1);
    rs.internal.assign(rs.steps.size() + 1, 0);
    for (std::size_t k = 0; k < count; ++k) {
        const auto& nd = trees.nodes[k];
        rs.node_step[k] = nd.step;
        if (nd.parent < 0 || rs.rho[nd.step] != 0) {
            rs.rep[k] = k;
        } else {
            rs.rep[k] = rs.rep[static_cast<std::size_t>(nd.parent)];
            rs.contracted.emplace_back(static_cast<std::size_t>(nd.parent), k);
        }
    }
    for (std::size_t r = 3; r <= rs.steps.size(); ++r) {
        const std::size_t j = rs.steps[r - 1];
        const std::size_t ln = SheddingTrees::left_node(j);
        const std::size_t rn = SheddingTrees::right_node(j);
        const std::size_t p = rs.rep[static_cast<std::size_t>(trees.nodes[ln].parent)];
        const std::size_t p2 = rs.rep[static_cast<std::size_t>(trees.nodes[rn].parent)];
        if (p != p2)
            throw MalformedTreeSequence("degree-2 step " + std::to_string(j) +
                                        " splits two different reduced nodes");
        if (rs.rleft[p] >= 0 || rs.rright[p] >= 0)
            throw MalformedTreeSequence("reduced node split twice at step " + std::to_string(j));
        rs.rleft[p] = static_cast<long>(ln);
        rs.rright[p] = static_cast<long>(rn);
        rs.internal[r] = p;
    }
    return rs;
}

ExactRat ReducedTriangulation::max_abs_slope() const
{
    ExactRat best = 0;
    const auto& cyc = gstar.boundary();
    for (std::size_t k = 0; k < cyc.size(); ++k) {
        VertexId a = cyc[k];
        VertexId b = cyc[(k + 1) % cyc.size()];
        ExactRat s = abs(slope(points[a + 1], points[b + 1]));
        if (s > best)
            best = s;
    }
    return best;
}

ExactInt ReducedTriangulation::width() const { return points[2].x - points[1].x; }

ExactInt ReducedTriangulation::height() const
{
    ExactInt top = 0;
    for (std::size_t r = 1; r < points.size(); ++r)
        if (points[r].y > top)
            top = points[r].y;
    return top;
}

namespace {

ExactInt choose2(long k)
{
    return ExactInt(k) * (k - 1) / 2;
}

}  // namespace

ReducedTriangulation build_reduced_triangulation(const ReducedStructure& rs,
                                                 const SheddingTrees& trees)
{
    const std::size_t R = rs.size();
    if (R < 3 || rs.internal.size() != R + 1 || rs.internal[3] != 0)
        throw MalformedTreeSequence("the root must be the first split");
    for (std::size_t r = 2; r <= R; ++r) {
        if (rs.node_count(rs.steps[r - 1]) != 1 + 2 * (r - 2))
            throw MalformedTreeSequence("reduced tree " + std::to_string(r) +
                                        " has the wrong number of nodes");
        if (!rs.full_binary(rs.steps[r - 1]))
            throw MalformedTreeSequence("reduced tree " + std::to_string(r) +
                                        " is not full binary");
    }

    ReducedTriangulation out;
    out.size = R;

    // In-order positions of the internal nodes.
    std::vector<long> inorder(rs.rep.size(), -1);
    {
        long next = 0;
        std::vector<std::pair<std::size_t, bool>> stack{{0, false}};
        while (!stack.empty()) {
            auto [node, expanded] = stack.back();
            stack.pop_back();
            if (rs.rleft[node] < 0)
                continue;
            if (expanded) {
                inorder[node] = next++;
                continue;
            }
            stack.push_back({static_cast<std::size_t>(rs.rright[node]), false});
            stack.push_back({node, true});
            stack.push_back({static_cast<std::size_t>(rs.rleft[node]), false});
        }
        if (next != static_cast<long>(R - 2))
            throw MalformedTreeSequence("internal node count differs from R - 2");
    }
    out.m = static_cast<std::size_t>(inorder[0]);
    out.m_prime = R - 3 - out.m;
    const long m = static_cast<long>(out.m);
    const long big = static_cast<long>(std::max(out.m, out.m_prime));
    const ExactInt apex = choose2(big + 2);

    out.points.assign(R + 1, {});
    out.position.assign(R + 1, -1);
    out.points[1] = {ExactInt(-(big + 1)), ExactInt(0)};
    out.points[2] = {ExactInt(big + 1), ExactInt(0)};
    for (std::size_t r = 3; r <= R; ++r) {
        long pos = inorder[rs.internal[r]];
        out.position[r] = pos;
        long x = pos - m;
        out.points[r] = {ExactInt(x), apex - choose2(std::labs(x) + 1)};
    }

    out.f.assign(R + 1, 0);
    out.g.assign(R + 1, 0);
    std::map<long, std::size_t> placed;
    std::vector<Triangle> tris;
    for (std::size_t r = 3; r <= R; ++r) {
        long pos = out.position[r];
        auto hi = placed.upper_bound(pos);
        out.g[r] = hi == placed.end() ? 2 : hi->second;
        out.f[r] = hi == placed.begin() ? 1 : std::prev(hi)->second;
        placed[pos] = r;
        tris.push_back({{static_cast<VertexId>(out.f[r] - 1), static_cast<VertexId>(out.g[r] - 1),
                         static_cast<VertexId>(r - 1)}});
    }

    std::vector<VertexId> cycle{0, 1};
    for (auto it = placed.rbegin(); it != placed.rend(); ++it)
        cycle.push_back(static_cast<VertexId>(it->second - 1));
    std::vector<VertexId> ids(R);
    std::vector<IntPoint2> coords(R);
    std::vector<VertexId> order(R);
    for (std::size_t r = 1; r <= R; ++r) {
        ids[r - 1] = static_cast<VertexId>(r - 1);
        coords[r - 1] = out.points[r];
        order[r - 1] = static_cast<VertexId>(r - 1);
    }
    out.gstar = PlaneTriangulation(ids, std::move(tris), std::move(cycle), std::move(coords));
    out.astar = make_sequence(out.gstar, std::move(order));

    // Identify every tree node with an edge of G* through its contraction class.
    std::vector<std::pair<std::size_t, std::size_t>> rep_edge(rs.rep.size(), {0, 0});
    rep_edge[0] = {1, 2};
    for (std::size_t r = 3; r <= R; ++r) {
        const std::size_t j = rs.steps[r - 1];
        const std::size_t split = rs.internal[r];
        if (rep_edge[split] != std::make_pair(out.f[r], out.g[r]))
            throw MalformedTreeSequence("split node of step " + std::to_string(r) +
                                        " does not match the edge a*_f a*_g");
        rep_edge[SheddingTrees::left_node(j)] = {out.f[r], r};
        rep_edge[SheddingTrees::right_node(j)] = {r, out.g[r]};
    }
    out.node_edge.resize(trees.nodes.size());
    for (std::size_t k = 0; k < trees.nodes.size(); ++k)
        out.node_edge[k] = rep_edge[rs.rep[k]];
    return out;
}

}  // namespace gridlift
