#ifndef GRIDLIFT_REDUCTION_HPP
#define GRIDLIFT_REDUCTION_HPP

#include "gridlift/triangulation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gridlift {

class MalformedTreeSequence : public Error {
public:
    using Error::Error;
};

/// G itself when a_1 -> a_2 runs along the boundary cycle, otherwise the
/// mirrored triangulation. Drawings put a_1 left of a_2 on the x-axis with the
/// graph above it, which needs a_1 -> a_2 to follow the cycle.
PlaneTriangulation orient_for_base(const PlaneTriangulation& g, const SheddingSequence& seq);

/// For each 1-based step i >= 3, the neighbours w_1..w_k of a_i in G_{i-1}
/// ordered left to right along the upper chain. Entries 0..2 are empty.
/// `g` must already be oriented for the base edge.
std::vector<std::vector<VertexId>> attachment_runs(const PlaneTriangulation& g,
                                                   const SheddingSequence& seq);

/// Node of a shedding tree: an edge of G, stored left endpoint first.
struct TreeNode {
    VertexId left = 0;
    VertexId right = 0;
    std::size_t step = 2;
    long parent = -1;
    bool is_left_child = false;
    long left_child = -1;
    long right_child = -1;
};

/// All shedding trees T_2 .. T_n at once: T_i is the subtree of nodes with
/// step <= i. Node 0 is the root a_1 a_2; step i creates nodes 2i-5 (left of
/// a_i) and 2i-4 (right of a_i).
struct SheddingTrees {
    std::size_t n = 0;
    std::vector<TreeNode> nodes;

    std::size_t node_count(std::size_t i) const;
    static std::size_t left_node(std::size_t i) { return 2 * i - 5; }
    static std::size_t right_node(std::size_t i) { return 2 * i - 4; }
    /// Shape of T_i as a bracket string: "." for a leaf, "(L,R)" otherwise,
    /// with "-" for a missing child.
    std::string canonical(std::size_t i) const;
    /// Line-based dump: one node per line, indented by depth.
    std::string dump(std::size_t i) const;
};

SheddingTrees build_shedding_trees(const PlaneTriangulation& g, const SheddingSequence& seq);

/// Contraction of the shedding trees along steps with d_i(a_i) > 2.
/// Step indices are 1-based throughout; index 0 of the per-step tables is unused.
struct ReducedStructure {
    std::size_t n = 0;
    std::vector<std::size_t> steps;       ///< R, sorted.
    std::vector<std::size_t> rho;         ///< rho[i] for i in R, else 0.
    std::vector<std::size_t> h;           ///< h[i] = |{j in R : j <= i}|.
    std::vector<std::size_t> rep;         ///< contraction class representative per tree node.
    std::vector<std::pair<std::size_t, std::size_t>> contracted;  ///< (parent, child) tree edges in E_R.
    std::vector<long> rleft;              ///< left child in the reduced tree (per representative).
    std::vector<long> rright;
    std::vector<std::size_t> internal;    ///< internal[r]: representative split at reduced step r >= 3.
    std::vector<std::size_t> node_step;   ///< creation step of each tree node.

    std::size_t size() const { return steps.size(); }
    /// Shape of T_i^* in the format of SheddingTrees::canonical.
    std::string canonical(std::size_t i) const;
    std::size_t node_count(std::size_t i) const;
    bool full_binary(std::size_t i) const;
};

ReducedStructure reduce(const SheddingTrees& trees, const SheddingSequence& seq);

/// The reduced triangulation G* with its convex shedding sequence a*.
/// Template vertices are addressed by 1-based reduced step r; vertex id r-1 in `gstar`.
struct ReducedTriangulation {
    std::size_t size = 0;   ///< R
    std::size_t m = 0;      ///< internal nodes left of the root
    std::size_t m_prime = 0;
    PlaneTriangulation gstar;
    SheddingSequence astar;
    std::vector<IntPoint2> points;   ///< points[r], r = 1..R
    std::vector<long> position;      ///< in-order position of internal node r (0-based)
    std::vector<std::size_t> f;      ///< left neighbour of a*_r in G*_r
    std::vector<std::size_t> g;      ///< right neighbour of a*_r in G*_r
    /// For every node of the (unreduced) shedding trees, the G* edge (r_left, r_right)
    /// its contraction class is identified with.
    std::vector<std::pair<std::size_t, std::size_t>> node_edge;

    /// Largest absolute slope of a boundary edge of G*.
    ExactRat max_abs_slope() const;
    ExactInt width() const;
    ExactInt height() const;
};

ReducedTriangulation build_reduced_triangulation(const ReducedStructure& rs,
                                                 const SheddingTrees& trees);

}  // namespace gridlift

#endif  // GRIDLIFT_REDUCTION_HPP
