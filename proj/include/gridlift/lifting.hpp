#ifndef GRIDLIFT_LIFTING_HPP
#define GRIDLIFT_LIFTING_HPP

#include "gridlift/embedding.hpp"

#include <array>
#include <vector>

namespace gridlift {

class NotSequentiallyConvex : public Error {
public:
    using Error::Error;
};

class BoundaryNotTriangle : public Error {
public:
    using Error::Error;
};

/// Lower convex surface over a sequentially convex drawing: every vertex is
/// lifted to (x, y, h) and every triangle of G becomes a facet.
struct LiftedPolyhedron {
    PlaneTriangulation graph;        ///< drawing that was lifted (oriented, with coordinates)
    SheddingSequence sequence;
    std::vector<ExactInt> heights;   ///< by id
    std::vector<Point3> points;      ///< by id
    std::vector<Triangle> facets;    ///< counterclockwise seen from above
    std::vector<ExactInt> m;         ///< by id: max height over earlier neighbours (0 for a_1..a_3)
    std::size_t max_height_bits = 0;
    std::size_t total_height_bits = 0;

    ExactInt max_height() const;
};

ExactInt height_bound(std::size_t n, const ExactInt& m);

LiftedPolyhedron lift(const GridEmbedding& emb, const SheddingSequence& seq);

/// Lift of an arbitrary drawing (coordinates attached to `g`, oriented for the base edge).
LiftedPolyhedron lift_drawing(const PlaneTriangulation& g, const SheddingSequence& seq);

/// Bounded polytope; faces are oriented with outward normals (counterclockwise
/// seen from outside). Points are indexed by vertex id.
struct Polytope {
    std::vector<VertexId> vertices;
    std::vector<Point3> points;
    std::vector<std::array<VertexId, 3>> faces;
};

/// The unbounded lift capped by the plane through the three lifted boundary
/// vertices. Throws BoundaryNotTriangle unless the boundary has three vertices.
Polytope truncate_to_polytope(const LiftedPolyhedron& p);

}  // namespace gridlift

#endif  // GRIDLIFT_LIFTING_HPP
