#include <doctest.h>

#include "cyclespec/errors.hpp"
#include "cyclespec/graph_io.hpp"
#include "helpers.hpp"

using namespace cyclespec;

TEST_CASE("edge list basics") {
    auto g = parse_graph("0 1\n1 2\n2 0");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);

    auto d = parse_graph("0 1\n0 1\n");
    CHECK(d.vertex_count() == 2);
    CHECK(d.edge_count() == 1);

    CHECK(parse_graph("").vertex_count() == 0);
    CHECK(parse_graph("# only a comment\n\n").vertex_count() == 0);
}

TEST_CASE("self-loop is a parse error with its line") {
    try {
        parse_graph("0 1\n0 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
}

TEST_CASE("malformed lines report their line number") {
    for (const char* bad : {"0 1\n1\n", "0 1\nx y\n", "0 1\n1 2 3\n", "0 1\n-1 2\n"}) {
        try {
            parse_graph(bad, GraphFormat::EdgeList);
            FAIL("accepted " << bad);
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
}

TEST_CASE("dimacs") {
    auto g = parse_graph("c triangle\np edge 4 3\ne 1 2\ne 2 3\ne 3 1\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 2));
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("e 1 2\n", GraphFormat::Dimacs), ParseError);
    CHECK(detect_format("c x\n") == GraphFormat::Dimacs);
    CHECK(detect_format("\n0 1\n") == GraphFormat::EdgeList);
}

TEST_CASE("serialization round trip keeps isolated vertices") {
    std::vector<Edge> e{{0, 3}, {1, 2}};
    Graph g(6, e);
    auto text = serialize_edge_list(g, "note");
    CHECK(text.rfind("# n=6 m=2\n# note\n", 0) == 0);
    CHECK(parse_graph(text) == g);
}

TEST_CASE("dimacs round trip") {
    auto g = testutil::gnp(25, 0.2, 4);
    auto text = serialize_dimacs(g, "x");
    CHECK(text.rfind("c x\np edge 25 ", 0) == 0);
    CHECK(parse_graph(text) == g);
}

TEST_CASE("fingerprint ignores input order and format") {
    auto a = parse_graph("0 1\n1 2\n");
    auto b = parse_graph("2 1\n1 0\n1 2\n");
    auto c = parse_graph("p edge 3 2\ne 2 3\ne 1 2\n");
    CHECK(graph_fingerprint(a) == graph_fingerprint(b));
    CHECK(graph_fingerprint(a) == graph_fingerprint(c));
    CHECK(graph_fingerprint(a) != graph_fingerprint(parse_graph("0 1\n0 2\n")));
    CHECK(fingerprint_hex(0xabc).size() == 16);
}

TEST_CASE("random graphs round trip") {
    for (unsigned s = 0; s < 20; ++s) {
        auto g = testutil::gnp(30, 0.1, s);
        CHECK(parse_graph(serialize_edge_list(g)) == g);
    }
}
