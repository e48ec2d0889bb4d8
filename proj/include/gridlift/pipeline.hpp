#ifndef GRIDLIFT_PIPELINE_HPP
#define GRIDLIFT_PIPELINE_HPP

#include "gridlift/diameter.hpp"
#include "gridlift/document.hpp"
#include "gridlift/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gridlift {

/// Document-level steps shared by the command-line tool and the tests.
/// Each returns the updated document; inputs are validated first
/// (invalid input throws Error).

void require_valid(const PlaneTriangulation& g);

/// Stored sequence of the document, or a default one: grid shedding for grid
/// documents, otherwise the smallest-id sequence over the first boundary edge.
SheddingSequence sequence_of(const TriangulationFile& doc);

TriangulationFile shed_document(const TriangulationFile& doc, std::optional<VertexId> u,
                                std::optional<VertexId> v, bool grid);

struct EmbedResult {
    TriangulationFile doc;
    std::vector<Certificate> report;
};

EmbedResult embed_document(const TriangulationFile& doc);

struct LiftResult {
    TriangulationFile doc;
    LiftedPolyhedron lift;
    std::vector<Certificate> report;
};

/// Embeds first when the document has no coordinates.
LiftResult lift_document(const TriangulationFile& doc);

/// Every certificate that applies to what the document contains; `original`
/// adds the face-isomorphism check against it.
std::vector<Certificate> verify_document(const TriangulationFile& doc,
                                         const std::optional<TriangulationFile>& original = std::nullopt);

}  // namespace gridlift

#endif  // GRIDLIFT_PIPELINE_HPP
