#ifndef GRIDLIFT_EMBEDDING_HPP
#define GRIDLIFT_EMBEDDING_HPP

#include "gridlift/reduction.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gridlift {

class EmptyRegion : public Error {
public:
    using Error::Error;
};

class ParallelSupportLines : public Error {
public:
    using Error::Error;
};

/// A construction invariant failed at some step; always an implementation bug.
class PropertyViolation : public Error {
public:
    PropertyViolation(std::size_t step, std::string which, const std::string& detail);

    std::size_t step() const { return step_; }
    const std::string& which() const { return which_; }

private:
    std::size_t step_;
    std::string which_;
};

/// Drawing with rational coordinates; a_1 = (0,0), a_2 = (2,0), graph above the x-axis.
struct RationalEmbedding {
    PlaneTriangulation graph;      ///< input, oriented for the base edge
    std::vector<Point2> coords;    ///< by vertex id
};

RationalEmbedding rational_embed(const PlaneTriangulation& g, const SheddingSequence& seq);

/// G* scaled by alpha in x and beta in y.
struct ScaledTemplate {
    std::size_t n = 0;
    ExactInt alpha;               ///< 2n^2 + n + 1
    ExactInt beta;                ///< 2n * alpha
    std::vector<IntPoint2> z;     ///< z[r], r = 1..R
    ExactRat max_abs_slope;       ///< M
    ExactRat min_slope_gap;       ///< smallest gap between boundary slopes of any Z_r
    ExactInt width() const { return z.at(2).x - z.at(1).x; }
};

ScaledTemplate scale_template(const ReducedTriangulation& red, std::size_t n);

/// Integer placement of a vertex with d_i(a_i) > 2 from its attachment run.
struct HighDegreePlacement {
    IntPoint2 point;
    ExactRat s;       ///< slope of w_1 w_2
    ExactRat u;       ///< slope of w_{k-1} w_k
    Point2 meet;      ///< intersection of the two support lines
    ExactRat gamma;
};

HighDegreePlacement place_high_degree(std::span<const IntPoint2> run);

/// Integer placement of a vertex with d_i(a_i) = 2 on the edge w_1 w_2, copying
/// the template triangle (b_1, z, b_2).
struct DegreeTwoPlacement {
    IntPoint2 point;
    Point2 v1;
    Point2 v3;
    Point2 v3_sheared;
    ExactRat eta;
    ExactRat kappa;
};

DegreeTwoPlacement place_degree_two(const IntPoint2& w1, const IntPoint2& w2, const IntPoint2& b1,
                                    const IntPoint2& b2, const IntPoint2& z);

/// Per-step record of the construction invariants.
struct StepAudit {
    std::size_t step = 0;
    std::size_t degree = 0;
    ExactRat min_x_slack;          ///< min over boundary edges of x(e) - x(Z(e))
    ExactRat max_slope_deviation;  ///< max over boundary edges of |s(e) - s(Z(e))|
    bool slopes_decreasing = false;
    std::optional<ExactRat> left_separation;   ///< slope left of w_1 minus new left slope
    std::optional<ExactRat> right_separation;  ///< new right slope minus slope right of w_k
    // d_i(a_i) > 2
    std::optional<ExactRat> s_shift;   ///< s' - s
    std::optional<ExactRat> u_shift;   ///< u - u'
    // d_i(a_i) = 2
    std::optional<ExactRat> epsilon;   ///< r - Z(r)
    std::optional<ExactRat> q1_bar_shift;  ///< qbar_1 - q_1
    std::optional<ExactRat> q2_bar_shift;  ///< qbar_2 - q_2
    std::optional<ExactRat> q1_round;      ///< q1' - qbar_1
    std::optional<ExactRat> q2_round;      ///< qbar_2 - q2'
};

struct EmbedOptions {
    /// Check the construction invariants after every step (throws PropertyViolation).
    bool audit = true;
};

struct GridEmbedding {
    PlaneTriangulation graph;        ///< oriented input with the integer coordinates attached
    SheddingSequence sequence;
    ScaledTemplate templ;
    std::vector<IntPoint2> coords;   ///< by vertex id
    /// Final upper chain left to right with each edge's template edge (r_left, r_right).
    std::vector<VertexId> chain;
    std::vector<std::pair<std::size_t, std::size_t>> correspondence;
    std::vector<StepAudit> audit;

    ExactInt width() const;
    ExactInt height() const;
};

GridEmbedding grid_embed(const PlaneTriangulation& g, const SheddingSequence& seq,
                         const EmbedOptions& options = {});

/// Upper chain of every prefix G_i, left to right, in the drawing `coords`
/// (by id). `g` must be oriented for the base edge. chains[i] for i >= 2.
std::vector<std::vector<VertexId>> prefix_chains(const PlaneTriangulation& g,
                                                 const SheddingSequence& seq);

/// Every triangle counterclockwise and, for every prefix G_i, the upper chain
/// x-monotone with strictly decreasing slopes. Returns a description of the
/// first failure, or nullopt.
std::optional<std::string> sequential_convexity_failure(const PlaneTriangulation& g,
                                                        const SheddingSequence& seq,
                                                        const std::vector<IntPoint2>& coords);

}  // namespace gridlift

#endif  // GRIDLIFT_EMBEDDING_HPP
