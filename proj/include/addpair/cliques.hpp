#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "addpair/graph.hpp"

namespace addpair {

/// Clique-enumeration guard; the verifier never exceeds 8.
inline constexpr int kEnumerateMaxOrder = 24;
/// Guard for the exhaustive subset scan.
inline constexpr int kSubsetScanMaxOrder = 20;

struct CliqueResult {
    int size = 0;
    VertexSet members;
};

/// Maximum clique by branch and bound with greedy-colouring bounds. Among
/// maximum cliques the lexicographically smallest member list is returned.
CliqueResult max_clique(const Graph& g);

/// Same contract as max_clique, computed by scanning all 2^n subsets.
CliqueResult max_clique_by_subset_scan(const Graph& g);

/// Clique number of g restricted to x, without building the induced graph.
/// Zero for the empty set.
int omega_induced(const Graph& g, VertexSet x);

bool is_clique(const Graph& g, VertexSet x);

/// Every nonempty clique, by increasing size then lexicographically.
std::vector<VertexSet> enumerate_cliques(const Graph& g);

/// Calls visit on each clique of exactly k vertices inside `within`, in
/// lexicographic order. Stops early and returns false when visit does.
bool for_each_clique_of_size(const Graph& g, VertexSet within, int k,
                             const std::function<bool(VertexSet)>& visit);

CliqueResult max_stable_set(const Graph& g);

struct MatchingResult {
    bool matched = false;
    /// (x-vertex, y-vertex) pairs of a perfect matching when matched.
    std::vector<std::pair<int, int>> matching;
    /// When not matched: a subset Y of x with fewer than |Y| neighbours in y.
    VertexSet hall_violator;
};

/// Whether x is matched to y: a perfect matching of x-y edges of g exists.
/// Requires disjoint sets of equal size.
MatchingResult is_matched(const Graph& g, VertexSet x, VertexSet y);

}  // namespace addpair
