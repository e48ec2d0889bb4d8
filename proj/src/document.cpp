#include "gridlift/document.hpp"

#include <algorithm>
#include <sstream>

namespace gridlift {

namespace {

std::vector<std::string> split(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line)
{
    if (tok.empty() || tok.size() > 18 || !std::all_of(tok.begin(), tok.end(), ::isdigit))
        throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
    return std::stoull(tok);
}

ExactInt parse_exact(const std::string& tok, std::size_t line)
{
    try {
        return parse_int(tok);
    } catch (const Error&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace

TriangulationFile parse_document(const std::string& text)
{
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool header = false, ended = false;
    std::optional<std::size_t> n;
    TriangulationFile doc;
    std::vector<std::optional<IntPoint2>> coords;
    std::vector<Triangle> tris;
    std::optional<std::vector<VertexId>> boundary;
    std::vector<std::optional<ExactInt>> heights;
    bool any_coord = false, any_height = false;

    auto vertex = [&](const std::string& tok) {
        std::size_t v = parse_count(tok, lineno);
        if (!n || v >= *n)
            throw ParseError(lineno, "vertex id " + tok + " out of range");
        return static_cast<VertexId>(v);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        auto tok = split(raw);
        if (tok.empty() || tok[0][0] == '#')
            continue;
        if (ended)
            throw ParseError(lineno, "content after 'end'");
        const std::string& key = tok[0];
        if (!header) {
            if (tok.size() != 2 || key != "plane-triangulation" || tok[1] != "1")
                throw ParseError(lineno, "expected header 'plane-triangulation 1'");
            header = true;
            continue;
        }
        if (key == "n") {
            if (n || tok.size() != 2)
                throw ParseError(lineno, "malformed or repeated 'n' line");
            n = parse_count(tok[1], lineno);
            coords.assign(*n, std::nullopt);
            heights.assign(*n, std::nullopt);
            continue;
        }
        if (!n)
            throw ParseError(lineno, "'n' must precede '" + key + "'");
        if (key == "grid") {
            if (tok.size() != 4 || doc.grid)
                throw ParseError(lineno, "malformed or repeated 'grid' line");
            doc.grid = std::array<std::size_t, 3>{parse_count(tok[1], lineno), parse_count(tok[2], lineno),
                                                  parse_count(tok[3], lineno)};
        } else if (key == "coord") {
            if (tok.size() != 4)
                throw ParseError(lineno, "'coord' takes id x y");
            VertexId v = vertex(tok[1]);
            if (coords[v])
                throw ParseError(lineno, "repeated coordinate for vertex " + tok[1]);
            coords[v] = IntPoint2{parse_exact(tok[2], lineno), parse_exact(tok[3], lineno)};
            any_coord = true;
        } else if (key == "tri") {
            if (tok.size() != 4)
                throw ParseError(lineno, "'tri' takes three vertex ids");
            tris.push_back({{vertex(tok[1]), vertex(tok[2]), vertex(tok[3])}});
        } else if (key == "boundary") {
            if (boundary)
                throw ParseError(lineno, "repeated 'boundary' line");
            boundary.emplace();
            for (std::size_t k = 1; k < tok.size(); ++k)
                boundary->push_back(vertex(tok[k]));
        } else if (key == "sequence") {
            if (doc.sequence)
                throw ParseError(lineno, "repeated 'sequence' line");
            doc.sequence.emplace();
            for (std::size_t k = 1; k < tok.size(); ++k)
                doc.sequence->push_back(vertex(tok[k]));
        } else if (key == "height") {
            if (tok.size() != 3)
                throw ParseError(lineno, "'height' takes id h");
            VertexId v = vertex(tok[1]);
            if (heights[v])
                throw ParseError(lineno, "repeated height for vertex " + tok[1]);
            heights[v] = parse_exact(tok[2], lineno);
            any_height = true;
        } else if (key == "end") {
            if (tok.size() != 1)
                throw ParseError(lineno, "'end' takes no arguments");
            ended = true;
        } else {
            throw ParseError(lineno, "unknown keyword '" + key + "'");
        }
    }
    if (!header)
        throw ParseError(lineno, "missing header");
    if (!n)
        throw ParseError(lineno, "missing 'n' line");
    if (!boundary)
        throw ParseError(lineno, "missing 'boundary' line");
    if (!ended)
        throw ParseError(lineno, "missing 'end'");

    std::optional<std::vector<IntPoint2>> all_coords;
    if (any_coord) {
        all_coords.emplace();
        for (std::size_t v = 0; v < *n; ++v) {
            if (!coords[v])
                throw ParseError(lineno, "vertex " + std::to_string(v) + " has no coordinate");
            all_coords->push_back(*coords[v]);
        }
    }
    if (any_height) {
        doc.heights.emplace();
        for (std::size_t v = 0; v < *n; ++v) {
            if (!heights[v])
                throw ParseError(lineno, "vertex " + std::to_string(v) + " has no height");
            doc.heights->push_back(*heights[v]);
        }
    }
    std::vector<VertexId> ids(*n);
    for (std::size_t v = 0; v < *n; ++v)
        ids[v] = static_cast<VertexId>(v);
    try {
        doc.graph = PlaneTriangulation(ids, std::move(tris), std::move(*boundary), std::move(all_coords));
    } catch (const Error& e) {
        throw ParseError(lineno, e.what());
    }
    return doc;
}

std::string write_document(const TriangulationFile& doc)
{
    const auto& g = doc.graph;
    std::string out = "plane-triangulation 1\n";
    out += "n " + std::to_string(g.n()) + "\n";
    if (doc.grid)
        out += "grid " + std::to_string((*doc.grid)[0]) + " " + std::to_string((*doc.grid)[1]) + " " +
               std::to_string((*doc.grid)[2]) + "\n";
    std::vector<VertexId> ids = g.vertices();
    std::sort(ids.begin(), ids.end());
    if (g.has_coords())
        for (VertexId v : ids)
            out += "coord " + std::to_string(v) + " " + to_string(g.coord(v).x) + " " +
                   to_string(g.coord(v).y) + "\n";
    for (const auto& t : g.triangles())
        out += "tri " + std::to_string(t.v[0]) + " " + std::to_string(t.v[1]) + " " +
               std::to_string(t.v[2]) + "\n";
    out += "boundary";
    for (VertexId v : g.boundary())
        out += " " + std::to_string(v);
    out += "\n";
    if (doc.sequence) {
        out += "sequence";
        for (VertexId v : *doc.sequence)
            out += " " + std::to_string(v);
        out += "\n";
    }
    if (doc.heights)
        for (VertexId v : ids)
            out += "height " + std::to_string(v) + " " + to_string((*doc.heights)[v]) + "\n";
    out += "end\n";
    return out;
}

Mesh mesh_of(const LiftedPolyhedron& p)
{
    Mesh mesh;
    std::vector<VertexId> ids = p.graph.vertices();
    std::sort(ids.begin(), ids.end());
    std::vector<std::size_t> index(p.graph.id_bound(), 0);
    for (std::size_t k = 0; k < ids.size(); ++k) {
        index[ids[k]] = k;
        mesh.vertices.push_back(p.points[ids[k]]);
    }
    auto face = [&](VertexId a, VertexId b, VertexId c) {
        mesh.faces.push_back({index[a], index[b], index[c]});
    };
    if (p.graph.boundary().size() == 3) {
        Polytope poly = truncate_to_polytope(p);
        for (const auto& f : poly.faces)
            face(f[0], f[1], f[2]);
        mesh.closed = true;
    } else {
        for (const auto& t : p.facets)
            face(t.v[0], t.v[1], t.v[2]);
    }
    return mesh;
}

std::string export_off(const Mesh& mesh)
{
    std::string out = "OFF\n";
    out += std::to_string(mesh.vertices.size()) + " " + std::to_string(mesh.faces.size()) + " 0\n";
    for (const auto& v : mesh.vertices)
        out += to_string(v.x) + " " + to_string(v.y) + " " + to_string(v.z) + "\n";
    for (const auto& f : mesh.faces)
        out += "3 " + std::to_string(f[0]) + " " + std::to_string(f[1]) + " " + std::to_string(f[2]) + "\n";
    return out;
}

std::string export_obj(const Mesh& mesh)
{
    std::string out;
    for (const auto& v : mesh.vertices)
        out += "v " + to_string(v.x) + " " + to_string(v.y) + " " + to_string(v.z) + "\n";
    for (const auto& f : mesh.faces)
        out += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " +
               std::to_string(f[2] + 1) + "\n";
    return out;
}

Mesh parse_off(const std::string& text)
{
    std::istringstream in(text);
    std::vector<std::string> tok;
    std::string t;
    while (in >> t) {
        if (t[0] == '#') {
            std::getline(in, t);
            continue;
        }
        tok.push_back(t);
    }
    std::size_t pos = 0;
    auto next = [&]() -> const std::string& {
        if (pos >= tok.size())
            throw ParseError(0, "OFF: unexpected end of input");
        return tok[pos++];
    };
    if (next() != "OFF")
        throw ParseError(1, "OFF: missing header");
    std::size_t nv = parse_count(next(), 2), nf = parse_count(next(), 2);
    parse_count(next(), 2);
    Mesh mesh;
    for (std::size_t k = 0; k < nv; ++k) {
        Point3 p;
        p.x = parse_exact(next(), 3 + k);
        p.y = parse_exact(next(), 3 + k);
        p.z = parse_exact(next(), 3 + k);
        mesh.vertices.push_back(p);
    }
    for (std::size_t k = 0; k < nf; ++k) {
        if (parse_count(next(), 3 + nv + k) != 3)
            throw ParseError(3 + nv + k, "OFF: only triangular faces are supported");
        std::array<std::size_t, 3> f{};
        for (auto& x : f) {
            x = parse_count(next(), 3 + nv + k);
            if (x >= nv)
                throw ParseError(3 + nv + k, "OFF: face index out of range");
        }
        mesh.faces.push_back(f);
    }
    return mesh;
}

}  // namespace gridlift
