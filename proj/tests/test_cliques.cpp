#include "doctest.h"

#include <random>

#include "addpair/cliques.hpp"
#include "addpair/error.hpp"
#include "addpair/patterns.hpp"
#include "oracles.hpp"

using namespace addpair;

namespace {

// Lexicographically least maximum clique, straight from the definition.
VertexSet oracle_lex_least_max_clique(const Graph& g) {
    const auto m = oracle::matrix_of(g);
    const int omega = oracle::omega(g);
    std::vector<int> best;
    for (std::uint64_t mask = 0; mask <= oracle::all(g.order()); ++mask) {
        auto vs = oracle::members(mask);
        if (static_cast<int>(vs.size()) != omega || !oracle::is_clique(m, mask)) continue;
        if (best.empty() || vs < best) best = vs;
    }
    return VertexSet::from_vector(best);
}

}  // namespace

TEST_CASE("max clique on named graphs") {
    CHECK(max_clique(cycle(5)).size == 2);
    for (int n = 0; n <= 12; ++n) CHECK(max_clique(complete(n)).size == n);
    CHECK(max_clique(Graph()).size == 0);
    CHECK(max_clique(Graph()).members.empty());

    const Graph p0 = build_P0();
    CHECK(oracle::omega(p0) == 3);
    CHECK(oracle::omega(complement(p0)) == 3);
    CHECK(max_clique(p0).size == 3);
    CHECK(max_clique(complement(p0)).size == 3);
    // a1 a2 a3 is the lexicographically least triangle of P0.
    CHECK(max_clique(p0).members == VertexSet::of({0, 1, 2}));
    CHECK(max_clique(cycle(5)).members == VertexSet::of({0, 1}));
}

TEST_CASE("branch and bound agrees with the subset scan and the oracle") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        const int n = static_cast<int>(rng() % 11);
        const double density = 0.2 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng);
        const Graph g = oracle::random_graph(rng, n, density);
        const CliqueResult bnb = max_clique(g);
        const CliqueResult scan = max_clique_by_subset_scan(g);
        REQUIRE(bnb.size == oracle::omega(g));
        REQUIRE(scan.size == bnb.size);
        REQUIRE(bnb.members == scan.members);
        REQUIRE(bnb.members == oracle_lex_least_max_clique(g));
        REQUIRE(is_clique(g, bnb.members));
        REQUIRE(bnb.members.size() == bnb.size);
        REQUIRE(max_stable_set(g).size == max_clique(complement(g)).size);
        REQUIRE(max_stable_set(g).size == oracle::alpha(g));
    }
}

TEST_CASE("branch and bound on larger graphs") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const Graph g = oracle::random_graph(rng, 40 + i, 0.5);
        const CliqueResult c = max_clique(g);
        REQUIRE(is_clique(g, c.members));
        // No vertex extends the returned clique.
        VertexSet common = g.vertices();
        for (int v : c.members) common = common & g.neighbors(v);
        REQUIRE(common.empty());
    }
    CHECK(max_clique(complete(64)).size == 64);
    CHECK_THROWS_AS(max_clique_by_subset_scan(complete(21)), UnsupportedSize);
}

TEST_CASE("omega on induced subsets") {
    const Graph c4 = cycle(4);
    CHECK(omega_induced(c4, VertexSet{}) == 0);
    CHECK(omega_induced(c4, c4.vertices()) == 2);
    CHECK(omega_induced(complement(c4), c4.vertices()) == 2);
    CHECK(omega_induced(union_graph(cycle(5), complement(cycle(5))), VertexSet::range(5)) == 5);
    CHECK_THROWS_AS(omega_induced(c4, VertexSet::of({4})), InputError);

    std::mt19937_64 rng(8);
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = oracle::random_graph(rng, n);
        const VertexSet y{rng() & VertexSet::range(n).bits()};
        const VertexSet x{rng() & y.bits()};
        REQUIRE(omega_induced(g, y) == oracle::omega(oracle::matrix_of(g), y.bits()));
        REQUIRE(omega_induced(g, x) <= omega_induced(g, y));
        REQUIRE(omega_induced(g, y) == max_clique(induced(g, y).graph).size);
    }
}

TEST_CASE("clique enumeration order and counts") {
    CHECK(enumerate_cliques(edgeless(3)) ==
          std::vector<VertexSet>{VertexSet::of({0}), VertexSet::of({1}), VertexSet::of({2})});
    CHECK(enumerate_cliques(complete(3)).size() == 7);
    CHECK(enumerate_cliques(cycle(5)).size() == 10);
    CHECK(oracle::clique_count(cycle(5)) == 10);
    CHECK_THROWS_AS(enumerate_cliques(Graph(25)), UnsupportedSize);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const int n = static_cast<int>(rng() % 10);
        const Graph g = oracle::random_graph(rng, n, 0.6);
        const auto cliques = enumerate_cliques(g);
        REQUIRE(static_cast<int>(cliques.size()) == oracle::clique_count(g));
        for (std::size_t k = 1; k < cliques.size(); ++k) {
            const bool ordered = cliques[k - 1].size() < cliques[k].size() ||
                                 (cliques[k - 1].size() == cliques[k].size() && lex_less(cliques[k - 1], cliques[k]));
            REQUIRE(ordered);
        }
        for (VertexSet c : cliques) REQUIRE(is_clique(g, c));

        // The sized visitor sees the same cliques in the same order.
        std::vector<VertexSet> visited;
        for (int k = 1; k <= n; ++k) {
            for_each_clique_of_size(g, g.vertices(), k, [&](VertexSet c) {
                visited.push_back(c);
                return true;
            });
        }
        REQUIRE(visited == cliques);
    }
}

TEST_CASE("stable sets") {
    CHECK(max_stable_set(complete(5)).size == 1);
    using namespace vertex;
    const CliqueResult s = max_stable_set(build_P0());
    CHECK(s.size == 3);
    CHECK(oracle::alpha(build_P0()) == 3);
    CHECK(is_clique(complement(build_P0()), VertexSet::of({b1, b2, b3})));
    for (const Graph& m : catalog_F().labelled) {
        REQUIRE(oracle::alpha(m) == 2);
        REQUIRE(max_stable_set(m).size == 2);
    }
}

TEST_CASE("matched sets") {
    const VertexSet x = VertexSet::of({0, 1, 2}), y = VertexSet::of({3, 4, 5});

    GraphBuilder full(6);
    for (int u : x) {
        for (int v : y) full.add_edge(u, v);
    }
    const MatchingResult ok = is_matched(full.build(), x, y);
    CHECK(ok.matched);
    CHECK(ok.matching.size() == 3);

    const MatchingResult none = is_matched(Graph(6), x, y);
    CHECK_FALSE(none.matched);
    CHECK(none.hall_violator == x);

    // Cross pairs of an F member's complement: a_i b_i are forced edges there.
    using namespace vertex;
    const Graph comp = complement(f_member(0b101101));
    const MatchingResult forced = is_matched(comp, VertexSet::of({a1, a2, a3}), VertexSet::of({b1, b2, b3}));
    CHECK(forced.matched);

    CHECK_THROWS_AS(is_matched(full.build(), x, VertexSet::of({3, 4})), InputError);
    CHECK_THROWS_AS(is_matched(full.build(), x, VertexSet::of({2, 3, 4})), InputError);

    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const Graph g = oracle::random_graph(rng, 2 * k, 0.35);
        const VertexSet xs = VertexSet::range(k);
        const VertexSet ys = VertexSet::range(2 * k) - xs;
        const MatchingResult m = is_matched(g, xs, ys);
        REQUIRE(m.matched == oracle::matched(g, xs.to_vector(), ys.to_vector()));
        if (m.matched) {
            VertexSet used;
            for (auto [u, v] : m.matching) {
                REQUIRE(g.adjacent(u, v));
                REQUIRE(ys.contains(v));
                REQUIRE_FALSE(used.contains(v));
                used = used.with(v);
            }
        } else {
            REQUIRE(m.hall_violator.subset_of(xs));
            VertexSet nbrs;
            for (int u : m.hall_violator) nbrs = nbrs | (g.neighbors(u) & ys);
            REQUIRE(nbrs.size() < m.hall_violator.size());
        }
    }
}
