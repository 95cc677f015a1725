#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "minforest/errors.hpp"
#include "minforest/fixtures.hpp"
#include "minforest/graph_io.hpp"

using namespace minforest;
using testutil::make_forest;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("documents round-trip through parse and serialize") {
    const std::string doc =
        "vertices a b c\n"
        "arc a b 1/2\n"
        "arc b c 3\n";
    WeightedDigraph g = parse_graph(doc);
    CHECK(g.vertex_count() == 3);
    CHECK(g.weight(0, 1) == Rational(1, 2));
    CHECK(parse_graph(serialize_graph(g)) == g);
    // canonical form is stable under re-serialization
    CHECK(serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g));
}

TEST_CASE("comments, blank lines, and odd spacing are tolerated") {
    WeightedDigraph g = parse_graph(
        "# heading\n"
        "\n"
        "vertices  x   y\n"
        "  # indented comment\n"
        "arc x y -7/2\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.weight(0, 1) == Rational(-7, 2));
}

TEST_CASE("embedded fixtures parse to the same graphs as their files") {
    for (const Fixture& fixture : fixtures()) {
        CAPTURE(fixture.name);
        WeightedDigraph embedded = parse_graph(fixture.document);
        WeightedDigraph from_file =
            load_graph_file(std::string(MINFOREST_FIXTURE_DIR) + "/" + fixture.name + ".graph");
        CHECK(embedded == from_file);
        CHECK(embedded == fixture_graph(fixture.name));
    }
    CHECK(fixtures().size() == 6);
    CHECK_THROWS_AS((void)fixture_graph("no_such"), DomainError);
}

TEST_CASE("parse errors carry their position") {
    try {
        parse_graph("vertices a b\narc a b\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS((void)parse_graph(""), ParseError);
    CHECK_THROWS_AS((void)parse_graph("arc a b 1\n"), ParseError);          // no vertices line
    CHECK_THROWS_AS((void)parse_graph("vertices a\narc a a 1\n"), ParseError);  // self-loop
    CHECK_THROWS_AS((void)parse_graph("vertices a b\narc a z 1\n"), ParseError);
    CHECK_THROWS_AS((void)parse_graph("vertices a b\narc a b 1.5\n"), ParseError);
    CHECK_THROWS_AS((void)parse_graph("vertices a b\narc a b 1\narc a b 2\n"), ParseError);
    CHECK_THROWS_AS((void)parse_graph("vertices a a\n"), ParseError);
    CHECK_THROWS_AS((void)load_graph_file("/nonexistent/path.graph"), DomainError);
}

TEST_CASE("DOT output lists vertices, arcs, and clusters") {
    WeightedDigraph g = fixture_graph("unique_minima");
    std::string plain = dot_graph(g, "example");
    CHECK(contains(plain, "digraph \"example\""));
    CHECK(contains(plain, "\"a\" -> \"c\" [label=\"2\"]"));
    CHECK(contains(plain, "\"c\" -> \"b\" [label=\"3\"]"));

    ForestAtlas atlas = enumerate_atlas(g);
    AtomPartition part = atom_partition(atlas, 3);
    SpanningForest f = atlas.family(3).forests.front();
    std::string rendered = dot_forest(f, &part, "level three");
    CHECK(contains(rendered, "subgraph cluster_0"));
    CHECK(contains(rendered, "\"b\" -> \"a\""));
    CHECK(contains(rendered, "doublecircle"));
    CHECK(contains(rendered, "*"));  // labeled atoms are starred

    // the empty forest renders every vertex as its own root, no arcs
    std::string empty = dot_forest(SpanningForest::empty(g), nullptr, "empty");
    CHECK(contains(empty, "\"d\" [shape=doublecircle]"));
    CHECK_FALSE(contains(empty, "->"));
}
