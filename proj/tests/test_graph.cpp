#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "randnet/graph.hpp"

using namespace randnet;

TEST_CASE("make_edge normalizes endpoint order") {
    CHECK(make_edge(5, 2) == Edge{2, 5});
    CHECK(make_edge(2, 5) == Edge{2, 5});
}

TEST_CASE("graph constructor validates and deduplicates") {
    const std::vector<Edge> edges{{0, 1}, {1, 0}, {2, 1}, {0, 1}};
    const Graph g(3, edges);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{1, 2});

    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}}, {"only-one-label"}),
                    std::invalid_argument);
}

TEST_CASE("labels default to numeric ids") {
    const Graph unlabeled(2, {{0, 1}});
    CHECK(unlabeled.label(0) == "0");
    CHECK(unlabeled.label(1) == "1");
    CHECK_FALSE(unlabeled.has_labels());

    const Graph labeled(2, {{0, 1}}, {"a", "b"});
    CHECK(labeled.label(1) == "b");
    CHECK_THROWS_AS(labeled.label(2), std::out_of_range);
}

TEST_CASE("weight sequence rejects negatives and sums once") {
    const WeightSeq w({1.0, 2.5, 0.0});
    CHECK(w.size() == 3);
    CHECK(w.total() == doctest::Approx(3.5));
    CHECK(w[1] == 2.5);

    CHECK_THROWS_AS(WeightSeq({1.0, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(WeightSeq({std::nan("")}), std::invalid_argument);
}

TEST_CASE("degree sequence counts both endpoints") {
    const Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto deg = degree_sequence(g);
    CHECK(deg == std::vector<std::size_t>{3, 1, 1, 1});
}

TEST_CASE("edge list reader handles comments, blanks and isolated nodes") {
    std::istringstream in(
        "# a header comment\n"
        "\n"
        "a b\n"
        "b c # trailing comment\n"
        "b a\n"
        "loner\n"
        "a b\n");
    const Graph g = read_edge_list(in);
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 2);
    // Ids follow first appearance: a=0, b=1, c=2, loner=3.
    CHECK(g.label(0) == "a");
    CHECK(g.label(3) == "loner");
    CHECK(degree_sequence(g) == std::vector<std::size_t>{1, 2, 1, 0});
}

TEST_CASE("edge list reader reports offending line numbers") {
    std::istringstream self_loop("a b\nc c\n");
    CHECK_THROWS_WITH_AS(read_edge_list(self_loop),
                         "edge list: self-loop on node 'c'", ParseError);
    try {
        std::istringstream again("a b\n\nc c\n");
        read_edge_list(again);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    std::istringstream triple("a b c\n");
    CHECK_THROWS_AS(read_edge_list(triple), ParseError);
}

TEST_CASE("edge list writer round-trips labels, edges and isolated nodes") {
    const Graph g(4, {{0, 1}, {2, 0}}, {"x", "y", "z", "alone"});
    std::ostringstream out;
    write_edge_list(g, out);
    CHECK(out.str() == "x y\nx z\nalone\n");

    std::istringstream in(out.str());
    const Graph back = read_edge_list(in);
    CHECK(back.node_count() == 4);
    CHECK(back.edge_count() == 2);
    const auto labels = back.labels();
    CHECK(std::find(labels.begin(), labels.end(), "alone") != labels.end());
}

TEST_CASE("bundled karate club graph has the expected shape") {
    const Graph g =
        read_edge_list_file(std::string(RANDNET_DATA_DIR) + "/karate.txt");
    CHECK(g.node_count() == 34);
    CHECK(g.edge_count() == 78);

    const auto deg = degree_sequence(g);
    CHECK(std::accumulate(deg.begin(), deg.end(), std::size_t{0}) == 156);
    CHECK(*std::max_element(deg.begin(), deg.end()) == 17);

    // Label "1" is the instructor hub with degree 16.
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.label(v) == "1") {
            CHECK(deg[v] == 16);
        }
        if (g.label(v) == "34") {
            CHECK(deg[v] == 17);
        }
    }
}

TEST_CASE("missing input file raises a readable error") {
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/nowhere.txt"),
                    std::runtime_error);
}
