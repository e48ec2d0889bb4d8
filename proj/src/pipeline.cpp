#include "gridlift/pipeline.hpp"

namespace gridlift {

void require_valid(const PlaneTriangulation& g)
{
    auto report = validate(g);
    if (!report.ok())
        throw Error("invalid triangulation (" + to_string(report.violation->kind) +
                    "): " + report.violation->message);
}

SheddingSequence sequence_of(const TriangulationFile& doc)
{
    const auto& g = doc.graph;
    if (doc.sequence) {
        std::string why;
        if (!is_shedding_sequence(g, *doc.sequence, &why))
            throw Error("stored sequence is not a shedding sequence: " + why);
        return make_sequence(g, *doc.sequence);
    }
    if (doc.grid) {
        auto grid = make_grid_triangulation(g, (*doc.grid)[0], (*doc.grid)[1], (*doc.grid)[2]);
        return grid_shedding(grid).sequence;
    }
    return shedding_sequence(g, g.boundary()[0], g.boundary()[1]);
}

TriangulationFile shed_document(const TriangulationFile& doc, std::optional<VertexId> u,
                                std::optional<VertexId> v, bool grid)
{
    require_valid(doc.graph);
    TriangulationFile out = doc;
    out.heights.reset();
    if (grid) {
        if (!doc.grid)
            throw Error("grid shedding needs a 'grid' line");
        auto g = make_grid_triangulation(doc.graph, (*doc.grid)[0], (*doc.grid)[1], (*doc.grid)[2]);
        out.sequence = grid_shedding(g).sequence.order;
        return out;
    }
    const auto& b = doc.graph.boundary();
    VertexId a1 = u.value_or(b[0]);
    VertexId a2 = v.value_or(b[1]);
    if (!doc.graph.is_boundary_edge(a1, a2))
        throw Error(std::to_string(a1) + "-" + std::to_string(a2) + " is not a boundary edge");
    out.sequence = shedding_sequence(doc.graph, a1, a2).order;
    return out;
}

EmbedResult embed_document(const TriangulationFile& doc)
{
    require_valid(doc.graph);
    const SheddingSequence seq = sequence_of(doc);
    GridEmbedding emb = grid_embed(doc.graph, seq);
    EmbedResult out;
    out.doc.graph = emb.graph;
    out.doc.grid = doc.grid;
    out.doc.sequence = seq.order;
    out.report = verify_document(out.doc, doc);
    return out;
}

LiftResult lift_document(const TriangulationFile& doc)
{
    // Coordinates are lifted as they are when they already form a sequentially
    // convex drawing for the stored sequence (e.g. the output of embed).
    bool drawn_already = false;
    if (doc.graph.has_coords() && doc.sequence && validate(doc.graph).ok() &&
        is_shedding_sequence(doc.graph, *doc.sequence))
        drawn_already = check_sequentially_convex(doc.graph, make_sequence(doc.graph, *doc.sequence)).pass;
    TriangulationFile drawn = drawn_already ? doc : embed_document(doc).doc;
    require_valid(drawn.graph);
    const SheddingSequence seq = sequence_of(drawn);
    LiftResult out;
    out.lift = lift_drawing(drawn.graph, seq);
    out.doc = drawn;
    out.doc.heights.emplace();
    for (VertexId v = 0; v < drawn.graph.id_bound(); ++v)
        out.doc.heights->push_back(out.lift.heights[v]);
    out.report = verify_document(out.doc, doc);
    return out;
}

std::vector<Certificate> verify_document(const TriangulationFile& doc,
                                         const std::optional<TriangulationFile>& original)
{
    std::vector<Certificate> certs;
    const auto& g = doc.graph;
    auto report = validate(g);
    certs.push_back(report.ok() ? Certificate{"triangulation", true, {}}
                                : Certificate{"triangulation", false, to_string(report.violation->kind)});
    if (!report.ok())
        return certs;
    if (original)
        certs.push_back(check_face_isomorphic(original->graph, g));

    std::optional<SheddingSequence> seq;
    if (doc.sequence) {
        seq = make_sequence(g, *doc.sequence);
        certs.push_back(check_shedding_sequence(g, *seq));
        if (!certs.back().pass)
            seq.reset();
    }
    if (g.has_coords()) {
        certs.push_back(check_embedding(g));
        if (seq)
            certs.push_back(check_sequentially_convex(g, *seq));
        certs.push_back(check_grid_bounds(g, g.n()));
    }
    if (doc.heights && g.has_coords()) {
        std::vector<Point3> points(g.id_bound());
        for (VertexId v : g.vertices())
            points[v] = {g.coord(v).x, g.coord(v).y, (*doc.heights)[v]};
        certs.push_back(check_lift_convex(g, points));
        if (seq) {
            certs.push_back(check_step_heights(g, *seq, points));
            certs.push_back(check_height_bounds(g, points, g.n(), tau_profile(g, *seq).tau));
        }
        if (g.boundary().size() == 3) {
            std::vector<std::array<std::size_t, 3>> faces;
            for (const auto& t : g.triangles())
                faces.push_back({t.v[0], t.v[2], t.v[1]});
            const auto& b = g.boundary();
            faces.push_back({b[0], b[1], b[2]});
            certs.push_back(check_polytope_convex(points, faces));
        }
    }
    return certs;
}

}  // namespace gridlift
