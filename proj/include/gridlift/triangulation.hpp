#ifndef GRIDLIFT_TRIANGULATION_HPP
#define GRIDLIFT_TRIANGULATION_HPP

#include "gridlift/exact.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridlift {

using VertexId = std::uint32_t;

class NotBoundary : public Error {
public:
    using Error::Error;
};

class NoSheddingVertex : public Error {
public:
    using Error::Error;
};

class NotADiagonal : public Error {
public:
    using Error::Error;
};

/// Oriented triangle; counterclockwise in the intended drawing.
struct Triangle {
    std::array<VertexId, 3> v;

    bool contains(VertexId x) const { return v[0] == x || v[1] == x || v[2] == x; }
    friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Undirected edge with a <= b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    static Edge of(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A triangulated disk: 2-connected plane graph whose bounded faces are
/// triangles. Vertex ids are dense integers of the original graph; a
/// triangulation obtained by deleting vertices keeps the surviving ids.
///
/// The boundary is stored explicitly as a cycle that follows the triangle
/// orientation: for consecutive boundary vertices (p, q) the directed edge
/// p -> q appears in one of the triangles. Optional lattice coordinates are
/// indexed by vertex id.
class PlaneTriangulation {
public:
    PlaneTriangulation() = default;
    PlaneTriangulation(std::vector<VertexId> vertices, std::vector<Triangle> triangles,
                       std::vector<VertexId> boundary,
                       std::optional<std::vector<IntPoint2>> coords = std::nullopt);

    /// Derives the boundary cycle from the triangles. Returns nullopt when the
    /// boundary edges do not form a single simple cycle.
    static std::optional<PlaneTriangulation>
    try_from_triangles(std::vector<VertexId> vertices, std::vector<Triangle> triangles,
                       std::optional<std::vector<IntPoint2>> coords = std::nullopt);

    /// As try_from_triangles, but throws on failure.
    static PlaneTriangulation
    from_triangles(std::vector<VertexId> vertices, std::vector<Triangle> triangles,
                   std::optional<std::vector<IntPoint2>> coords = std::nullopt);

    std::size_t n() const { return vertices_.size(); }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    const std::vector<VertexId>& boundary() const { return boundary_; }

    /// One past the largest vertex id; sizes id-indexed tables.
    std::size_t id_bound() const { return neighbors_.size(); }

    bool contains(VertexId v) const;
    bool is_boundary(VertexId v) const;
    /// Position of v in the boundary cycle, or -1.
    long boundary_index(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    /// Sorted neighbor ids of v.
    const std::vector<VertexId>& neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    std::size_t edge_count() const;
    /// Boundary edge in either direction.
    bool is_boundary_edge(VertexId u, VertexId v) const;
    /// True when u -> v is a boundary edge in cycle order.
    bool is_directed_boundary_edge(VertexId u, VertexId v) const;

    bool has_coords() const { return coords_.has_value(); }
    const std::optional<std::vector<IntPoint2>>& coords() const { return coords_; }
    const IntPoint2& coord(VertexId v) const;

    /// G - {v} for a boundary vertex v. The boundary cycle is updated by
    /// splicing the link of v in place of v. Throws NotBoundary for interior v.
    PlaneTriangulation remove_vertex(VertexId v) const;

    /// Same triangulation with every triangle and the boundary reversed.
    PlaneTriangulation reversed() const;

    /// Subcomplex induced by a vertex subset (triangles with all corners in
    /// the subset); nullopt when it has no simple boundary cycle.
    std::optional<PlaneTriangulation> induced(const std::vector<VertexId>& subset) const;

private:
    void index();

    std::vector<VertexId> vertices_;
    std::vector<Triangle> triangles_;
    std::vector<VertexId> boundary_;
    std::optional<std::vector<IntPoint2>> coords_;
    std::vector<std::vector<VertexId>> neighbors_;
    std::vector<long> boundary_pos_;
    std::vector<char> present_;
};

enum class ViolationKind {
    TooSmall,
    BadTriangle,
    DuplicateEdge,
    NonManifoldEdge,
    IsolatedVertex,
    NotTwoConnected,
    BadBoundary,
    Disconnected,
    EulerMismatch,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct ValidationReport {
    std::optional<Violation> violation;

    bool ok() const { return !violation.has_value(); }
};

/// Checks every triangulated-disk invariant and reports the first violation.
ValidationReport validate(const PlaneTriangulation& g);

/// Definitional test: G - {v} passes validate(). Requires n >= 4 and v on the boundary.
bool is_shedding_vertex(const PlaneTriangulation& g, VertexId v);

/// Combinatorial test: boundary vertex v is shedding iff no diagonal is
/// incident to it (valid G, n >= 4).
bool is_shedding_vertex_fast(const PlaneTriangulation& g, VertexId v);

/// Interior edge whose endpoints are both boundary vertices.
bool is_diagonal(const PlaneTriangulation& g, VertexId u, VertexId v);

/// Other endpoints of the diagonals incident to v, sorted by id.
std::vector<VertexId> diagonal_partners(const PlaneTriangulation& g, VertexId v);

/// Vertex order a_1..a_n; order[k] is a_{k+1} and degrees[k] is its degree
/// in the prefix graph G_{k+1}.
struct SheddingSequence {
    std::vector<VertexId> order;
    std::vector<std::size_t> degrees;

    std::size_t size() const { return order.size(); }
    /// a_i with 1-based i.
    VertexId at(std::size_t i) const { return order.at(i - 1); }
    /// d_i(a_i) with 1-based i.
    std::size_t degree_at(std::size_t i) const { return degrees.at(i - 1); }
    Edge base_edge() const { return Edge::of(order.at(0), order.at(1)); }

    friend bool operator==(const SheddingSequence&, const SheddingSequence&) = default;
};

/// Fills in prefix degrees for an order (no validity check).
SheddingSequence make_sequence(const PlaneTriangulation& g, std::vector<VertexId> order);

/// Checks that the order is a permutation of V(G), that a_1 a_2 is a boundary
/// edge, and that every deletion a_n, ..., a_4 leaves a valid triangulation.
bool is_shedding_sequence(const PlaneTriangulation& g, const std::vector<VertexId>& order,
                          std::string* why = nullptr);

/// Shedding sequence with a_1 = u, a_2 = v for a boundary edge uv (either
/// cycle direction). Built back to front; among eligible shedding vertices the
/// smallest id is taken.
SheddingSequence shedding_sequence(const PlaneTriangulation& g, VertexId u, VertexId v);

/// The prefix graph G_i (1-based i >= 3) of a shedding sequence.
PlaneTriangulation prefix_graph(const PlaneTriangulation& g, const SheddingSequence& seq,
                                std::size_t i);

/// Vertices of the connected component of F(G) minus the diagonal that
/// contains `side` (which must not be an endpoint of the diagonal).
std::vector<VertexId> diagonal_side(const PlaneTriangulation& g, Edge diag, VertexId side);

/// A shedding vertex of G strictly inside the component of F(G) minus the
/// diagonal that contains `side`. With coordinates the y-then-x greatest one
/// is returned, otherwise the smallest id. Throws NotADiagonal.
VertexId find_shedding_in_region(const PlaneTriangulation& g, Edge diag, VertexId side);

}  // namespace gridlift

#endif  // GRIDLIFT_TRIANGULATION_HPP
