#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "addpair/additivity.hpp"
#include "addpair/graph.hpp"
#include "addpair/patterns.hpp"

namespace addpair {

inline constexpr int kVerifyMaxOrder = 8;
inline constexpr int kExhaustiveMinOrder = 2;
inline constexpr int kExhaustiveMaxOrder = 6;

/// One colouring of the edges of K_n: digit 0 = B only, 1 = R only,
/// 2 = both. Edge order is (0,1),(0,2),...,(0,n-1),(1,2),...
struct PairCode {
    int n = 0;
    std::vector<std::uint8_t> digits;

    static PairCode parse(int n, std::string_view text);
    std::string to_string() const;

    friend bool operator==(const PairCode&, const PairCode&) = default;
};

inline std::size_t code_length(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

std::pair<Graph, Graph> decode_pair(const PairCode& code);
/// Inverse of decode_pair; requires a complete union.
PairCode encode_pair(const Graph& b, const Graph& r);

struct PairReport {
    std::optional<PairCode> code;
    std::string b_graph6;
    std::string r_graph6;
    bool additive = true;
    std::optional<Witness> witness;
    /// Present for non-additive pairs, and for additive ones on request.
    std::optional<OutcomeSet> outcomes;
    /// additive, or some outcome holds.
    bool theorem_ok = true;
    /// Witness properties that failed to hold (floor, size-5 C5 shape,
    /// non-decomposability, restriction soundness). Empty in a healthy run.
    std::vector<std::string> invariant_failures;
};

struct VerifyOptions {
    bool classify_additive = false;
    bool check_invariants = true;
};

PairReport verify_pair(const Graph& b, const Graph& r, const VerifyOptions& options = {});

enum class RunMode { kExhaustive, kRandom };

const char* mode_name(RunMode mode);

struct RunSummary {
    int n = 0;
    RunMode mode = RunMode::kExhaustive;
    std::uint64_t seed = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t non_additive_count = 0;
    /// Non-additive pairs on which outcome k holds, at index k-1.
    std::array<std::uint64_t, 5> outcome_histogram{};
    /// Non-additive pairs per exact outcome set, keyed like "1,2".
    std::map<std::string, std::uint64_t> outcome_sets;
    std::map<int, std::uint64_t> witness_sizes;
    std::optional<int> min_deficiency;
    std::optional<int> max_deficiency;
    std::uint64_t falsifications = 0;
    std::uint64_t invariant_violations = 0;
    /// Additive pairs with some outcome; only counted with classify_additive.
    std::uint64_t additive_with_outcome = 0;
    bool aborted = false;
    double wall_seconds = 0.0;
};

struct RunOptions {
    int workers = 1;
    /// Keep every non-additive PairReport in RunResult::reports.
    bool keep_reports = true;
    bool classify_additive = false;
};

struct RunResult {
    RunSummary summary;
    /// Non-additive pairs in code order (exhaustive) or sample order (random).
    std::vector<PairReport> reports;
    std::optional<PairReport> falsification;
};

/// Every complete-union pair on n vertices, 2 <= n <= 6, split into
/// 3^min(2, n(n-1)/2) shards by leading code digits and merged in order.
RunResult enumerate_exhaustive(int n, const RunOptions& options = {});

/// `count` uniformly drawn codes on n vertices. Samples are generated per
/// fixed-size shard from (seed, shard index), so the result does not depend
/// on the worker count.
RunResult sample_random(int n, std::uint64_t count, std::uint64_t seed, const RunOptions& options = {});

inline constexpr std::uint64_t kSamplesPerShard = 1 << 14;

struct NecessityCase {
    std::string name;
    Graph b;
    Graph r;
    std::vector<int> expected;
    PairReport report;

    /// Non-additive with outcome set exactly `expected`.
    bool matches() const;
};

/// The constructions showing each outcome is needed: (m, m^c) for all 64
/// labelled F members, (C5, C5^c), (P0^c, P0 + c a1), and (P0^c, P0 + S)
/// for S a subset of {c b2, c b3}.
std::vector<NecessityCase> necessity_suite();

}  // namespace addpair
