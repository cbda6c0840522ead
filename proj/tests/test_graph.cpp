#include "doctest.h"

#include <random>

#include "addpair/canonical.hpp"
#include "addpair/cliques.hpp"
#include "addpair/error.hpp"
#include "addpair/graph.hpp"
#include "addpair/graph6.hpp"
#include "addpair/patterns.hpp"
#include "oracles.hpp"

using namespace addpair;

TEST_CASE("vertex set basics") {
    const VertexSet s = VertexSet::of({1, 4, 9});
    CHECK(s.size() == 3);
    CHECK(s.lowest() == 1);
    CHECK(s.highest() == 9);
    CHECK(s.above(4) == VertexSet::single(9));
    CHECK(s.to_vector() == std::vector<int>{1, 4, 9});
    CHECK(VertexSet::range(64).size() == 64);
    CHECK(VertexSet::single(63).above(63).empty());

    CHECK(lex_less(VertexSet::of({0, 2}), VertexSet::of({0, 3})));
    CHECK(lex_less(VertexSet::of({0, 1, 5}), VertexSet::of({0, 2})));
    CHECK(lex_less(VertexSet::of({0}), VertexSet::of({0, 1})));
    CHECK_FALSE(lex_less(VertexSet::of({1}), VertexSet::of({0, 7})));
    CHECK_FALSE(lex_less(VertexSet::of({2, 3}), VertexSet::of({2, 3})));
}

TEST_CASE("construction validates its input") {
    CHECK_THROWS_AS(Graph(65), UnsupportedSize);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InputError);
    const std::vector<std::uint64_t> asymmetric = {0b010, 0b000, 0b000};
    CHECK_THROWS_AS(Graph::from_rows(3, asymmetric), InputError);
    const std::vector<std::uint64_t> stray = {0b1000, 0, 0};
    CHECK_THROWS_AS(Graph::from_rows(3, stray), InputError);
    CHECK(Graph(64).order() == 64);
    CHECK(complete(64).edge_count() == 64 * 63 / 2);
}

TEST_CASE("constructors") {
    CHECK(cycle(4).edge_count() == 4);
    CHECK(max_clique(cycle(4)).size == 2);
    CHECK(complete(6).edge_count() == 15);
    CHECK(edgeless(5).edge_count() == 0);
    CHECK_THROWS_AS(cycle(2), InputError);
    CHECK(is_isomorphic(cycle(5), complement(cycle(5))));
    CHECK(cycle(5).edges() == std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("complement") {
    const Graph c5 = cycle(5);
    CHECK(complement(complement(c5)) == c5);
    CHECK(complement(complete(4)) == edgeless(4));
    CHECK(is_isomorphic(complement(c5), c5));
    CHECK(complement(Graph()) == Graph());

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> order(0, 16);
    for (int i = 0; i < 1000; ++i) {
        const Graph g = oracle::random_graph(rng, order(rng));
        const Graph h = complement(g);
        REQUIRE(complement(h) == g);
        REQUIRE(g.edge_count() + h.edge_count() == g.order() * (g.order() - 1) / 2);
    }
}

TEST_CASE("induced subgraph") {
    const Graph c5 = cycle(5);
    CHECK(induced(c5, c5.vertices()).graph == c5);
    CHECK(induced(complete(6), VertexSet::of({1, 3, 5})).graph == complete(3));

    using namespace vertex;
    const auto sub = induced(build_P0(), VertexSet::of({a1, a2, a3, b1, b2, b3}));
    CHECK(sub.graph.order() == 6);
    CHECK(sub.graph.edge_count() == 9);
    CHECK(oracle::omega(sub.graph) == 3);
    CHECK(sub.old_to_new[c] == -1);
    CHECK(sub.new_to_old == std::vector<int>{0, 1, 2, 3, 4, 5});

    CHECK_THROWS_AS(induced(c5, VertexSet::of({0, 5})), InputError);

    // Restricting twice equals restricting once.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = oracle::random_graph(rng, n);
        const VertexSet y{rng() & VertexSet::range(n).bits()};
        const VertexSet x{rng() & y.bits()};
        const auto outer = induced(g, y);
        VertexSet x_in_y;
        for (int v : x) x_in_y = x_in_y.with(outer.old_to_new[v]);
        REQUIRE(induced(outer.graph, x_in_y).graph == induced(g, x).graph);
    }
}

TEST_CASE("union and difference") {
    const Graph c4 = cycle(4), c5 = cycle(5);
    CHECK(union_graph(c5, edgeless(5)) == c5);
    CHECK(union_graph(c4, complement(c4)) == complete(4));
    CHECK(union_graph(c5, complement(c5)) == complete(5));
    CHECK(difference(c5, edgeless(5)) == c5);
    CHECK(difference(c5, c5) == edgeless(5));
    CHECK(difference(complete(4), c4) == Graph::from_edges(4, {{0, 2}, {1, 3}}));
    CHECK_THROWS_AS(union_graph(c4, c5), InputError);
    CHECK_THROWS_AS(difference(c4, c5), InputError);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const int n = static_cast<int>(rng() % 20);
        const Graph b = oracle::random_graph(rng, n), r = oracle::random_graph(rng, n);
        REQUIRE(union_graph(difference(b, r), r) == union_graph(b, r));
    }
}

TEST_CASE("complete and anticomplete between sets") {
    CHECK(is_complete_between(complete(5), VertexSet::of({0, 1}), VertexSet::of({2, 3})));
    CHECK(is_anticomplete_between(edgeless(6), VertexSet::of({0, 5}), VertexSet::of({1, 2, 3})));
    using namespace vertex;
    const Graph p0 = build_P0();
    CHECK(is_anticomplete_between(p0, VertexSet::of({c}), VertexSet::of({b2, b3})));
    CHECK_FALSE(is_anticomplete_between(p0, VertexSet::of({c}), VertexSet::of({b1, b2})));
    CHECK_FALSE(is_complete_between(p0, VertexSet::of({b1}), VertexSet::of({a1, a2})));
    CHECK_THROWS_AS(is_complete_between(p0, VertexSet::of({0, 1}), VertexSet::of({1, 2})), InputError);
}

TEST_CASE("canonical form") {
    const Graph c5 = cycle(5);
    CHECK(is_isomorphic(c5, oracle::relabel(c5, {3, 0, 4, 2, 1})));
    CHECK(is_isomorphic(c5, complement(c5)));
    CHECK_FALSE(is_isomorphic(c5, Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}})));
    CHECK(is_isomorphic(build_P1(), build_P0().with_edge(vertex::c, vertex::b2)));
    CHECK(is_isomorphic(parse_graph6(canonical_form(c5)), c5));
    CHECK_THROWS_AS(canonical_form(cycle(9)), UnsupportedSize);

    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n);
        const Graph h = oracle::relabel(g, oracle::random_permutation(rng, n));
        REQUIRE(canonical_form(g) == canonical_form(h));
        REQUIRE(is_isomorphic(parse_graph6(canonical_form(g)), g));
        const Graph other = oracle::random_graph(rng, n);
        if (other.edge_count() != g.edge_count()) REQUIRE(canonical_form(other) != canonical_form(g));
        // Agreement with the brute-force isomorphism oracle.
        REQUIRE(is_isomorphic(g, other) == oracle::isomorphic(g, other));
    }
}

TEST_CASE("graph6 encoding") {
    CHECK(to_graph6(edgeless(5)) == "D??");
    CHECK(to_graph6(Graph()) == "?");
    // C5: pairs (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) | (0,4) (1,4) (2,4) (3,4)
    //     bits   1     0     1     0     0     1    |  1     0     0     1    -> 101001 100100
    CHECK(to_graph6(cycle(5)) == std::string{char(68), char(63 + 0b101001), char(63 + 0b100100)});
    CHECK(parse_graph6("D?{") == parse_graph6(to_graph6(parse_graph6("D?{"))));
    CHECK(to_graph6(parse_graph6("D?{")) == "D?{");
    CHECK(parse_graph6(to_graph6(build_P0())) == build_P0());
    CHECK_THROWS_AS(to_graph6(Graph(63)), UnsupportedSize);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        const int n = static_cast<int>(rng() % 63);
        const Graph g = oracle::random_graph(rng, n, 0.3 + 0.4 * (i % 2));
        const std::string text = to_graph6(g);
        REQUIRE(parse_graph6(text) == g);
        REQUIRE(to_graph6(parse_graph6(text)) == text);
    }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    auto offset_of = [](std::string_view text) -> long {
        try {
            parse_graph6(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of(" ") == 0);
    CHECK(offset_of("~??") == 0);
    CHECK(offset_of("D?") == 2);          // truncated
    CHECK(offset_of("D???") == 3);        // trailing byte
    CHECK(offset_of("D?\x7f") == 2);      // data byte out of range
    CHECK(offset_of("D?@") == 2);         // 10 bits used, padding bit set
    CHECK(offset_of("C]") == -1);
}
