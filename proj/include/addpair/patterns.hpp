#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addpair/graph.hpp"

namespace addpair {

/// Induced embedding: map[p] is the host vertex assigned to pattern vertex p.
struct Embedding {
    std::vector<int> map;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct PatternCatalog {
    std::string name;
    /// Pairwise non-isomorphic members in order of first generation.
    std::vector<Graph> members;
    /// Every generated labelled graph, before deduplication.
    std::vector<Graph> labelled;

    std::size_t labelled_count() const { return labelled.size(); }
};

// Fixed vertex orders, part of the public contract:
//   F members:   a1 a2 a3 b1 b2 b3       -> 0..5
//   P0, P1, P2:  a1 a2 a3 b1 b2 b3 c     -> 0..6
namespace vertex {
inline constexpr int a1 = 0, a2 = 1, a3 = 2, b1 = 3, b2 = 4, b3 = 5, c = 6;
}

/// Cross pairs (a_i, b_j), i != j, in the bit order used by f_member().
inline constexpr std::array<Edge, 6> kFCrossPairs = {{
    {vertex::a1, vertex::b2},
    {vertex::a1, vertex::b3},
    {vertex::a2, vertex::b1},
    {vertex::a2, vertex::b3},
    {vertex::a3, vertex::b1},
    {vertex::a3, vertex::b2},
}};

/// The labelled F member whose cross pair k is an edge iff bit k of mask is set.
Graph f_member(unsigned mask);

PatternCatalog build_F();
Graph build_P0();
Graph build_P1();
Graph build_P2();
Graph build_P0_complement();
/// P = {P0, P1, P2}.
PatternCatalog build_P();
PatternCatalog build_C5();
PatternCatalog build_P0c();

/// Catalogs built once per process and shared read-only.
const PatternCatalog& catalog_F();
const PatternCatalog& catalog_P();
const PatternCatalog& catalog_C5();
const PatternCatalog& catalog_P0c();

inline constexpr int kPatternMaxOrder = 8;

/// First induced embedding of pattern into host. Pattern vertices are
/// assigned in descending-degree order (ties by index) and host candidates
/// are tried in ascending order; the result is the lexicographically first
/// assignment sequence in that search order.
std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern);

struct MemberMatch {
    std::size_t member_index = 0;
    Embedding embedding;
};

/// First catalog member (in catalog order) contained in host.
std::optional<MemberMatch> contains_member(const Graph& host, const PatternCatalog& catalog);

enum class Side { B, R };

const char* side_name(Side side);

/// One containment fact: `side` contains member `member_index` of `catalog`.
struct Containment {
    Side side = Side::B;
    std::string catalog;
    std::size_t member_index = 0;
    Embedding embedding;
};

/// Which of the five forbidden-structure outcomes hold for a pair:
///   1: B or R contains a member of F
///   2: B and R both contain C5
///   3: B and R both contain P0^c
///   4: B contains P0^c and R contains a member of P
///   5: R contains P0^c and B contains a member of P
struct OutcomeSet {
    std::array<bool, 5> holds{};
    std::array<std::vector<Containment>, 5> evidence;

    bool any() const;
    bool holds_outcome(int k) const { return holds.at(k - 1); }
    /// Outcome numbers (1..5) that hold, ascending.
    std::vector<int> list() const;
};

OutcomeSet classify_outcomes(const Graph& b, const Graph& r);

}  // namespace addpair
