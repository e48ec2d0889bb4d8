#ifndef GRIDLIFT_VERIFY_HPP
#define GRIDLIFT_VERIFY_HPP

#include "gridlift/lifting.hpp"

#include <string>
#include <vector>

namespace gridlift {

/// Outcome of one check. A failure always names the first offending element.
struct Certificate {
    std::string kind;
    bool pass = true;
    std::string witness;

    /// "PASS kind" or "FAIL kind witness".
    std::string line() const;
    static Certificate parse(const std::string& line);
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

std::string write_report(const std::vector<Certificate>& certs);
std::vector<Certificate> read_report(const std::string& text);
bool all_pass(const std::vector<Certificate>& certs);

/// Identity map on vertex ids induces a bijection of bounded faces.
Certificate check_face_isomorphic(const PlaneTriangulation& g, const PlaneTriangulation& h);

/// Straight-line drawing is an embedding: every triangle counterclockwise and
/// the boundary polygon simple.
Certificate check_embedding(const PlaneTriangulation& g, const std::vector<Point2>& coords);
Certificate check_embedding(const PlaneTriangulation& g);

/// Slopes strictly decreasing left to right.
Certificate check_projectively_convex(const std::vector<ExactRat>& slopes);
/// Chain from a_1 to a_2: x strictly increasing and slopes strictly decreasing.
Certificate check_projectively_convex(const std::vector<Point2>& chain);

/// Every prefix G_i (i >= 3) drawn projectively convex over the base a_1 a_2.
/// Chains are re-derived from the boundary cycles of the prefix graphs.
Certificate check_sequentially_convex(const PlaneTriangulation& g, const SheddingSequence& seq,
                                      const std::vector<Point2>& coords);
Certificate check_sequentially_convex(const PlaneTriangulation& g, const SheddingSequence& seq);

/// Points phi(v) by id, facets = triangles of g.
struct LiftCheckOptions {
    /// Run the vertex-above-every-facet oracle as well (quadratic).
    bool global = true;
    std::size_t global_max_n = 50;
};

/// Strict local convexity across every interior edge; with `global`, also the
/// brute-force oracle, and the two must agree.
Certificate check_lift_convex(const PlaneTriangulation& g, const std::vector<Point3>& points,
                              const LiftCheckOptions& options = {});
Certificate check_lift_convex(const LiftedPolyhedron& p, const LiftCheckOptions& options = {});

/// Brute force: every lifted vertex on or above every facet plane, strictly
/// above the planes of facets it is not on.
bool globally_convex(const PlaneTriangulation& g, const std::vector<Point3>& points,
                     std::string* witness = nullptr);

/// Closed triangulated surface with outward faces bounds a strictly convex
/// polytope: every vertex strictly behind the plane of every face it is not on.
Certificate check_polytope_convex(const std::vector<Point3>& points,
                                  const std::vector<std::array<std::size_t, 3>>& faces);

/// Projection of the lift is the drawing: (x, y) of phi(v) equals the coordinates of v.
Certificate check_vertical_projection(const PlaneTriangulation& g, const std::vector<Point3>& points);

/// Bounding box of the drawing within 4n^3 x 8n^5.
Certificate check_grid_bounds(const PlaneTriangulation& g, std::size_t n);
/// z extent within (500 n^8)^tau and (500 n^8)^n.
Certificate check_height_bounds(const PlaneTriangulation& g, const std::vector<Point3>& points,
                                std::size_t n, std::size_t tau);
/// h(a_i) <= 499 n^8 m_i + 1 with m_i re-derived from the heights.
Certificate check_step_heights(const PlaneTriangulation& g, const SheddingSequence& seq,
                               const std::vector<Point3>& points);

/// The sequence is a shedding sequence of g.
Certificate check_shedding_sequence(const PlaneTriangulation& g, const SheddingSequence& seq);

/// Members of each block are pairwise incomparable under the sequence's order.
Certificate check_antichains(const PlaneTriangulation& g, const SheddingSequence& seq,
                             const std::vector<std::vector<VertexId>>& blocks);

}  // namespace gridlift

#endif  // GRIDLIFT_VERIFY_HPP
