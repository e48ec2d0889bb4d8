#ifndef GRIDLIFT_DOCUMENT_HPP
#define GRIDLIFT_DOCUMENT_HPP

#include "gridlift/lifting.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gridlift {

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Text document holding a triangulation and whatever has been computed for it.
///
///     plane-triangulation 1
///     n <count>
///     grid <p> <q> <l>                 (optional)
///     coord <id> <x> <y>               (optional, one per vertex)
///     tri <a> <b> <c>                  (one per bounded face)
///     boundary <v_1> ... <v_b>
///     sequence <a_1> ... <a_n>         (optional)
///     height <id> <h>                  (optional, one per vertex)
///     end
///
/// Vertex ids are 0..n-1. Numbers are arbitrary-length decimals. Lines
/// starting with '#' and blank lines are ignored.
struct TriangulationFile {
    PlaneTriangulation graph;
    std::optional<std::array<std::size_t, 3>> grid;
    std::optional<std::vector<VertexId>> sequence;
    std::optional<std::vector<ExactInt>> heights;  ///< by id
};

TriangulationFile parse_document(const std::string& text);
std::string write_document(const TriangulationFile& doc);

/// Mesh of a lift. With a triangular boundary the capped polytope (faces
/// outward); otherwise the open lifted surface (faces counterclockwise from above).
struct Mesh {
    std::vector<Point3> vertices;
    std::vector<std::array<std::size_t, 3>> faces;
    bool closed = false;
};

Mesh mesh_of(const LiftedPolyhedron& p);
std::string export_off(const Mesh& mesh);
std::string export_obj(const Mesh& mesh);
Mesh parse_off(const std::string& text);

}  // namespace gridlift

#endif  // GRIDLIFT_DOCUMENT_HPP
