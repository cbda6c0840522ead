#include "addpair/verifier.hpp"

#include <atomic>
#include <chrono>
#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "addpair/canonical.hpp"
#include "addpair/cliques.hpp"
#include "addpair/error.hpp"
#include "addpair/graph6.hpp"

namespace addpair {

PairCode PairCode::parse(int n, std::string_view text) {
    if (n < 0 || n > kVerifyMaxOrder) throw InputError("pair code order must be in [0, 8], got " + std::to_string(n));
    if (text.size() != code_length(n)) {
        throw InputError("pair code for n = " + std::to_string(n) + " needs " + std::to_string(code_length(n)) +
                         " digits, got " + std::to_string(text.size()));
    }
    PairCode code{n, {}};
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '2') {
            throw InputError("pair code digit " + std::to_string(i) + " is not in {0,1,2}");
        }
        code.digits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
    }
    return code;
}

std::string PairCode::to_string() const {
    std::string out;
    out.reserve(digits.size());
    for (auto d : digits) out.push_back(static_cast<char>('0' + d));
    return out;
}

std::pair<Graph, Graph> decode_pair(const PairCode& code) {
    if (code.n < 0 || code.n > kVerifyMaxOrder) {
        throw InputError("pair code order must be in [0, 8], got " + std::to_string(code.n));
    }
    if (code.digits.size() != code_length(code.n)) {
        throw InputError("pair code for n = " + std::to_string(code.n) + " needs " +
                         std::to_string(code_length(code.n)) + " digits, got " + std::to_string(code.digits.size()));
    }
    GraphBuilder b(code.n), r(code.n);
    std::size_t k = 0;
    for (int i = 0; i < code.n; ++i) {
        for (int j = i + 1; j < code.n; ++j, ++k) {
            switch (code.digits[k]) {
                case 0: b.add_edge(i, j); break;
                case 1: r.add_edge(i, j); break;
                case 2:
                    b.add_edge(i, j);
                    r.add_edge(i, j);
                    break;
                default: throw InputError("pair code digit " + std::to_string(k) + " is not in {0,1,2}");
            }
        }
    }
    return {b.build(), r.build()};
}

PairCode encode_pair(const Graph& b, const Graph& r) {
    require_same_order(b, r, "encode_pair");
    PairCode code{b.order(), {}};
    for (int i = 0; i < b.order(); ++i) {
        for (int j = i + 1; j < b.order(); ++j) {
            const bool in_b = b.adjacent(i, j);
            const bool in_r = r.adjacent(i, j);
            if (!in_b && !in_r) {
                throw InputError("encode_pair: union is missing edge (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
            }
            code.digits.push_back(in_b && in_r ? 2 : (in_b ? 0 : 1));
        }
    }
    return code;
}

namespace {

std::vector<std::string> witness_invariant_failures(const Graph& b, const Graph& r, const Witness& w) {
    std::vector<std::string> failures;
    const int size = w.x.size();
    if (size < kWitnessFloor) failures.push_back("witness below floor: " + w.x.to_string());
    const InducedSubgraph rb = induced(b, w.x);
    const InducedSubgraph rr = induced(r, w.x);
    if (size == 5) {
        const Graph c5 = cycle(5);
        if (!is_isomorphic(rb.graph, c5) || !is_isomorphic(rr.graph, c5)) {
            failures.push_back("size-5 witness restrictions are not both C5");
        }
    }
    if (splits_into_cliques(b, r, w.x)) failures.push_back("witness splits into a B-clique and an R-clique");
    const auto restricted = find_min_witness(rb.graph, rr.graph);
    if (!restricted || restricted->x != rb.graph.vertices()) {
        failures.push_back("restricted pair does not have the full set as its minimal witness");
    }
    return failures;
}

}  // namespace

PairReport verify_pair(const Graph& b, const Graph& r, const VerifyOptions& options) {
    require_same_order(b, r, "verify_pair");
    if (b.order() > kVerifyMaxOrder) {
        throw UnsupportedSize("verify_pair supports order <= 8, got " + std::to_string(b.order()));
    }
    PairReport report;
    report.b_graph6 = to_graph6(b);
    report.r_graph6 = to_graph6(r);
    report.witness = find_min_witness(b, r);
    report.additive = !report.witness.has_value();
    if (!report.additive || options.classify_additive) report.outcomes = classify_outcomes(b, r);
    report.theorem_ok = report.additive || report.outcomes->any();
    if (report.witness && options.check_invariants) {
        report.invariant_failures = witness_invariant_failures(b, r, *report.witness);
    }
    return report;
}

const char* mode_name(RunMode mode) { return mode == RunMode::kExhaustive ? "exhaustive" : "random"; }

namespace {

std::string outcome_key(const std::vector<int>& outcomes) {
    std::string key;
    for (int k : outcomes) {
        if (!key.empty()) key += ",";
        key += std::to_string(k);
    }
    return key.empty() ? "none" : key;
}

struct ShardResult {
    RunSummary counts;
    std::vector<PairReport> reports;
    std::optional<PairReport> falsification;
};

// Per-pair work shared by both run modes. Returns false to stop the shard.
bool check_code(const PairCode& code, const RunOptions& options, ShardResult& shard) {
    const auto [b, r] = decode_pair(code);
    RunSummary& s = shard.counts;
    ++s.pairs_checked;

    const auto witness = find_min_witness(b, r);
    if (!witness) {
        if (options.classify_additive && classify_outcomes(b, r).any()) ++s.additive_with_outcome;
        return true;
    }

    PairReport report = verify_pair(b, r, VerifyOptions{false, true});
    report.code = code;
    ++s.non_additive_count;
    const std::vector<int> outcomes = report.outcomes->list();
    for (int k : outcomes) ++s.outcome_histogram[k - 1];
    ++s.outcome_sets[outcome_key(outcomes)];
    ++s.witness_sizes[witness->x.size()];
    s.min_deficiency = std::min(s.min_deficiency.value_or(witness->deficiency), witness->deficiency);
    s.max_deficiency = std::max(s.max_deficiency.value_or(witness->deficiency), witness->deficiency);
    if (!report.invariant_failures.empty()) ++s.invariant_violations;
    if (!report.theorem_ok) {
        ++s.falsifications;
        shard.falsification = report;
        return false;
    }
    if (options.keep_reports) shard.reports.push_back(std::move(report));
    return true;
}

void merge_into(RunSummary& total, const RunSummary& part) {
    total.pairs_checked += part.pairs_checked;
    total.non_additive_count += part.non_additive_count;
    for (std::size_t k = 0; k < total.outcome_histogram.size(); ++k) {
        total.outcome_histogram[k] += part.outcome_histogram[k];
    }
    for (const auto& [key, count] : part.outcome_sets) total.outcome_sets[key] += count;
    for (const auto& [size, count] : part.witness_sizes) total.witness_sizes[size] += count;
    if (part.min_deficiency) {
        total.min_deficiency = std::min(total.min_deficiency.value_or(*part.min_deficiency), *part.min_deficiency);
    }
    if (part.max_deficiency) {
        total.max_deficiency = std::max(total.max_deficiency.value_or(*part.max_deficiency), *part.max_deficiency);
    }
    total.falsifications += part.falsifications;
    total.invariant_violations += part.invariant_violations;
    total.additive_with_outcome += part.additive_with_outcome;
}

// Runs shard(i, stop) for i in [0, count) on `workers` threads and merges
// the results in shard order. A shard that reports a falsification raises
// `stop`; the merge then ends at the first falsifying shard.
RunResult run_sharded(std::size_t count, int workers, RunSummary header,
                      const std::function<ShardResult(std::size_t, const std::atomic<bool>&)>& shard) {
    const auto started = std::chrono::steady_clock::now();
    std::vector<ShardResult> results(count);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    auto work = [&]() {
        for (std::size_t i = next++; i < count && !stop; i = next++) {
            results[i] = shard(i, stop);
            if (results[i].falsification) stop = true;
        }
    };
    const int threads = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    }

    RunResult out;
    out.summary = std::move(header);
    for (auto& part : results) {
        merge_into(out.summary, part.counts);
        for (auto& report : part.reports) out.reports.push_back(std::move(report));
        if (part.falsification) {
            out.falsification = std::move(part.falsification);
            out.summary.aborted = true;
            break;
        }
    }
    if (stop && !out.falsification) out.summary.aborted = true;
    out.summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

std::uint64_t power_of_three(std::size_t k) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= 3;
    return p;
}

}  // namespace

RunResult enumerate_exhaustive(int n, const RunOptions& options) {
    if (n < kExhaustiveMinOrder || n > kExhaustiveMaxOrder) {
        throw InputError("exhaustive enumeration needs 2 <= n <= 6, got " + std::to_string(n));
    }
    const std::size_t length = code_length(n);
    const std::size_t prefix = std::min<std::size_t>(2, length);
    const std::uint64_t shards = power_of_three(prefix);

    RunSummary header;
    header.n = n;
    header.mode = RunMode::kExhaustive;
    return run_sharded(shards, options.workers, header, [&](std::size_t s, const std::atomic<bool>& stop) {
        ShardResult result;
        PairCode code{n, std::vector<std::uint8_t>(length, 0)};
        for (std::size_t i = 0, rest = s; i < prefix; ++i, rest /= 3) {
            code.digits[prefix - 1 - i] = static_cast<std::uint8_t>(rest % 3);
        }
        while (true) {
            if (!check_code(code, options, result)) break;
            if ((result.counts.pairs_checked & 0xffff) == 0 && stop) break;
            // Odometer over the non-prefix digits, last digit fastest.
            std::size_t pos = length;
            while (pos > prefix && code.digits[pos - 1] == 2) code.digits[--pos] = 0;
            if (pos == prefix) break;
            ++code.digits[pos - 1];
        }
        return result;
    });
}

RunResult sample_random(int n, std::uint64_t count, std::uint64_t seed, const RunOptions& options) {
    if (n < 0 || n > kVerifyMaxOrder) {
        throw InputError("random sampling needs n <= 8, got " + std::to_string(n));
    }
    const std::size_t length = code_length(n);
    const std::uint64_t space = power_of_three(length);
    // Largest multiple of `space` representable; draws at or above it are
    // rejected so that codes are exactly uniform.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / space * space;
    const std::uint64_t shards = (count + kSamplesPerShard - 1) / kSamplesPerShard;

    RunSummary header;
    header.n = n;
    header.mode = RunMode::kRandom;
    header.seed = seed;
    return run_sharded(shards, options.workers, header, [&](std::size_t s, const std::atomic<bool>& stop) {
        ShardResult result;
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
        std::mt19937_64 rng(seq);
        const std::uint64_t begin = s * kSamplesPerShard;
        const std::uint64_t end = std::min(count, begin + kSamplesPerShard);
        PairCode code{n, std::vector<std::uint8_t>(length, 0)};
        for (std::uint64_t i = begin; i < end; ++i) {
            std::uint64_t draw;
            do {
                draw = rng();
            } while (draw >= limit);
            draw %= space;
            for (std::size_t k = length; k-- > 0; draw /= 3) code.digits[k] = static_cast<std::uint8_t>(draw % 3);
            if (!check_code(code, options, result)) break;
            if ((i & 0xfff) == 0 && stop) break;
        }
        return result;
    });
}

bool NecessityCase::matches() const {
    return !report.additive && report.outcomes && report.outcomes->list() == expected;
}

std::vector<NecessityCase> necessity_suite() {
    std::vector<NecessityCase> cases;
    auto add = [&](std::string name, Graph b, Graph r, std::vector<int> expected) {
        PairReport report = verify_pair(b, r, VerifyOptions{true, true});
        cases.push_back({std::move(name), std::move(b), std::move(r), std::move(expected), std::move(report)});
    };

    const PatternCatalog& f = catalog_F();
    for (std::size_t mask = 0; mask < f.labelled.size(); ++mask) {
        const Graph& m = f.labelled[mask];
        add("F[" + std::to_string(mask) + "]", m, complement(m), {1});
    }
    add("C5", cycle(5), complement(cycle(5)), {2});

    using namespace vertex;
    const Graph p0c = build_P0_complement();
    const Graph p0 = build_P0();
    add("P0c/P0+ca1", p0c, p0.with_edge(c, a1), {3});
    add("P0c/P0", p0c, p0, {4});
    add("P0c/P0+cb2", p0c, p0.with_edge(c, b2), {4});
    add("P0c/P0+cb3", p0c, p0.with_edge(c, b3), {4});
    add("P0c/P0+cb2+cb3", p0c, p0.with_edge(c, b2).with_edge(c, b3), {4});
    return cases;
}

}  // namespace addpair
