#pragma once

#include <string>

#include "addpair/graph.hpp"

namespace addpair {

/// Largest order accepted by the permutation-scan canonicalizer.
inline constexpr int kCanonicalMaxOrder = 8;

/// Relabelling of g whose graph6 bit string is lexicographically smallest
/// over all n! vertex permutations. Throws UnsupportedSize for n > 8.
Graph canonical_graph(const Graph& g);

/// graph6 encoding of canonical_graph(g); equal strings iff isomorphic.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace addpair
