#include "ohmnet/graph.hpp"

#include "ohmnet/errors.hpp"
#include "ohmnet/families.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace ohmnet;
using namespace ohmnet::testing;

TEST_CASE("laplacian of the 3-vertex path") {
    Graph g = generate({Family::path, 3});
    CHECK(laplacian(g) == RatMatrix::from_rows({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}}));
}

TEST_CASE("laplacian of the 4-vertex straight linear 2-tree") {
    Graph g = generate({Family::linear2tree, 4});
    CHECK(laplacian(g) ==
          RatMatrix::from_rows({{2, -1, -1, 0}, {-1, 3, -1, -1}, {-1, -1, 3, -1}, {0, -1, -1, 2}}));
}

TEST_CASE("weighted laplacian uses conductances") {
    Graph g(2);
    g.add_resistor(1, 2, Rational(1, 2));
    CHECK(laplacian(g) == RatMatrix::from_rows({{2, -2}, {-2, 2}}));
}

TEST_CASE("parse_graph") {
    SUBCASE("plain path") {
        Graph g = parse_graph("1 2 1\n2 3 1");
        CHECK(g == generate({Family::path, 3}));
    }
    SUBCASE("parallel edges merge by conductance addition") {
        Graph g = parse_graph("1 2 1\n1 2 1");
        CHECK(g.conductance(1, 2) == 2);
        CHECK(g.resistance(1, 2) == Rational(1, 2));
    }
    SUBCASE("comments, header, rational resistance") {
        Graph g = parse_graph("# a ladder rung\nn 4\n1 2 7/3  # weighted\n");
        CHECK(g.vertex_count() == 4);
        CHECK(g.resistance(1, 2) == Rational(7, 3));
    }
    SUBCASE("self-loop rejected with line number") {
        CHECK_THROWS_WITH_AS(parse_graph("1 1 1"), doctest::Contains("line 1"), ParseError);
    }
    SUBCASE("nonpositive resistance rejected") {
        CHECK_THROWS_AS(parse_graph("1 2 0"), ParseError);
        CHECK_THROWS_AS(parse_graph("1 2 -3"), ParseError);
    }
    SUBCASE("malformed line names its number") {
        CHECK_THROWS_WITH_AS(parse_graph("1 2 1\n1 2"), doctest::Contains("line 2"), ParseError);
        CHECK_THROWS_AS(parse_graph("1 x 1"), ParseError);
    }
    SUBCASE("label above declared count rejected") {
        CHECK_THROWS_AS(parse_graph("n 2\n1 3 1"), ParseError);
    }
    SUBCASE("empty input rejected") {
        CHECK_THROWS_AS(parse_graph("# nothing\n"), ParseError);
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(generate({Family::path, 5})));
    Graph two_edges(4);
    two_edges.add_resistor(1, 2, Rational(1));
    two_edges.add_resistor(3, 4, Rational(1));
    CHECK_FALSE(is_connected(two_edges));
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("laplacian structural invariants") {
    std::vector<Graph> graphs;
    graphs.push_back(generate({Family::fan, 7}));
    graphs.push_back(generate({Family::wheel, 8}));
    graphs.push_back(parse_graph("1 2 2\n2 3 1/3\n1 3 5"));
    for (unsigned seed = 0; seed < 4; ++seed) {
        graphs.push_back(random_connected_graph(8, seed));
    }
    for (const Graph& g : graphs) {
        RatMatrix l = laplacian(g);
        for (std::size_t i = 0; i < l.rows(); ++i) {
            Rational row_sum(0);
            for (std::size_t j = 0; j < l.cols(); ++j) {
                row_sum += l(i, j);
                CHECK(l(i, j) == l(j, i));
            }
            CHECK(row_sum == 0);
        }
    }
}

TEST_CASE("unit-conductance diagonal equals vertex degree") {
    Graph g = random_connected_graph(9, 11);
    RatMatrix l = laplacian(g);
    for (int v = 1; v <= 9; ++v) {
        CHECK(l(static_cast<std::size_t>(v) - 1, static_cast<std::size_t>(v) - 1) == g.degree(v));
    }
}

TEST_CASE("graph rejects bad edges") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_resistor(1, 1, Rational(1)), DomainError);
    CHECK_THROWS_AS(g.add_resistor(1, 4, Rational(1)), IndexError);
    CHECK_THROWS_AS(g.add_resistor(1, 2, Rational(0)), DomainError);
    CHECK_THROWS_AS(g.add_resistor(1, 2, Rational(-1)), DomainError);
}
