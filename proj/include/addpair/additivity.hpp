#pragma once

#include <optional>

#include "addpair/graph.hpp"

namespace addpair {

/// Order guard for the additivity decision procedures.
inline constexpr int kAdditivityMaxOrder = 24;
/// Guard for the all-subsets reference check.
inline constexpr int kDefinitionCheckMaxOrder = 16;

/// A clique x of G(B,R) with omega(B|x) + omega(R|x) < |x|.
struct Witness {
    VertexSet x;
    int omega_b = 0;
    int omega_r = 0;
    /// |x| - omega_b - omega_r, always >= 1.
    int deficiency = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// No violating clique has fewer vertices than this: a violator needs both
/// restrictions to contain an edge, hence |x| > 2 + 2.
inline constexpr int kWitnessFloor = 5;

enum class ScanMode {
    /// Skip cliques below kWitnessFloor.
    kFromFloor,
    /// Scan every clique size; used to test the floor itself.
    kAllSizes,
};

/// Smallest violating clique of G(B,R), ties broken lexicographically on
/// the sorted vertex list; nullopt iff the pair is additive.
std::optional<Witness> find_min_witness(const Graph& b, const Graph& r, ScanMode mode = ScanMode::kFromFloor);

bool is_additive(const Graph& b, const Graph& r);

/// Additivity straight from the definition: every vertex subset X satisfies
/// omega(B|X) + omega(R|X) >= omega(G(B,R)|X).
bool is_additive_by_definition(const Graph& b, const Graph& r);

/// Smallest (then lexicographically first) clique of G(B,R) that is not the
/// union of a clique of B and a clique of R; nullopt if none exists.
std::optional<VertexSet> union_decomposable(const Graph& b, const Graph& r);

/// Whether x splits as C u D with C a clique of B and D a clique of R.
bool splits_into_cliques(const Graph& b, const Graph& r, VertexSet x);

}  // namespace addpair
