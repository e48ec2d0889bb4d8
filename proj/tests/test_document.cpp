#include "gridlift/corpus.hpp"
#include "gridlift/document.hpp"
#include "gridlift/pipeline.hpp"

#include <doctest.h>

using namespace gridlift;

namespace {

const char* square_text =
    "plane-triangulation 1\n"
    "n 4\n"
    "coord 0 1 1\n"
    "coord 1 2 1\n"
    "coord 2 2 2\n"
    "coord 3 1 2\n"
    "tri 0 1 2\n"
    "tri 0 2 3\n"
    "boundary 0 1 2 3\n"
    "end\n";

}  // namespace

TEST_CASE("canonical document round trip")
{
    auto doc = parse_document(square_text);
    CHECK(doc.graph.n() == 4);
    CHECK(doc.graph.triangles().size() == 2);
    CHECK(write_document(doc) == square_text);
}

TEST_CASE("comments and blank lines are ignored")
{
    std::string text = std::string("# a square\n\n") + square_text;
    CHECK(write_document(parse_document(text)) == square_text);
}

TEST_CASE("parse errors report the line")
{
    CHECK_THROWS_AS(parse_document(""), ParseError);
    CHECK_THROWS_AS(parse_document("plane-triangulation 2\nn 3\nend\n"), ParseError);
    try {
        parse_document("plane-triangulation 1\nn 3\ntri 0 1 x\nend\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_document("plane-triangulation 1\nn 3\ntri 0 1 5\nboundary 0 1 2\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_document("plane-triangulation 1\nn 3\ntri 0 1 2\nboundary 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_document("plane-triangulation 1\nn 3\nfoo\nend\n"), ParseError);
}

TEST_CASE("full pipeline document round trips")
{
    TriangulationFile doc;
    doc.graph = corpus::random_stacked(15, 3);
    auto lifted = lift_document(doc);
    auto text = write_document(lifted.doc);
    auto again = parse_document(text);
    CHECK(write_document(again) == text);
    REQUIRE(again.heights.has_value());
    CHECK(*again.heights == lifted.lift.heights);
    CHECK(all_pass(verify_document(again)));
}

TEST_CASE("OFF export writes full decimal integers")
{
    TriangulationFile doc;
    doc.graph = corpus::random_stacked(12, 8);
    auto lifted = lift_document(doc);
    Mesh mesh = mesh_of(lifted.lift);
    CHECK(mesh.closed);
    auto off = export_off(mesh);
    CHECK(off.rfind("OFF\n", 0) == 0);
    CHECK(off.find('e') == std::string::npos);
    CHECK(off.find(to_string(lifted.lift.max_height())) != std::string::npos);

    Mesh back = parse_off(off);
    CHECK(back.vertices == mesh.vertices);
    CHECK(back.faces == mesh.faces);
    CHECK(check_polytope_convex(back.vertices, back.faces).pass);
}

TEST_CASE("OFF of an open surface")
{
    TriangulationFile doc;
    doc.graph = corpus::split_square(true);
    auto lifted = lift_document(doc);
    Mesh mesh = mesh_of(lifted.lift);
    CHECK_FALSE(mesh.closed);
    CHECK(mesh.faces.size() == 2);
    auto obj = export_obj(mesh);
    CHECK(obj.find("f 1 ") != std::string::npos);
}
