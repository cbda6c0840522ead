#include "addpair/report.hpp"

namespace addpair {

using nlohmann::json;

json pair_to_json(const PairReport& report) {
    json j;
    j["code"] = report.code ? json(report.code->to_string()) : json(nullptr);
    j["b_graph6"] = report.b_graph6;
    j["r_graph6"] = report.r_graph6;
    if (report.witness) {
        j["witness"] = report.witness->x.to_vector();
        j["omega_b"] = report.witness->omega_b;
        j["omega_r"] = report.witness->omega_r;
        j["deficiency"] = report.witness->deficiency;
    } else {
        j["witness"] = nullptr;
        j["omega_b"] = nullptr;
        j["omega_r"] = nullptr;
        j["deficiency"] = nullptr;
    }
    j["outcomes"] = report.outcomes ? report.outcomes->list() : std::vector<int>{};
    return j;
}

json outcomes_to_json(const OutcomeSet& outcomes) {
    json out = json::array();
    for (int k = 1; k <= 5; ++k) {
        if (!outcomes.holds_outcome(k)) continue;
        json evidence = json::array();
        for (const Containment& c : outcomes.evidence[k - 1]) {
            evidence.push_back({{"side", side_name(c.side)},
                                {"catalog", c.catalog},
                                {"member", c.member_index},
                                {"embedding", c.embedding.map}});
        }
        out.push_back({{"outcome", k}, {"evidence", evidence}});
    }
    return out;
}

json summary_to_json(const RunSummary& summary) {
    json j;
    j["n"] = summary.n;
    j["mode"] = mode_name(summary.mode);
    if (summary.mode == RunMode::kRandom) j["seed"] = summary.seed;
    j["pairs_checked"] = summary.pairs_checked;
    j["non_additive_count"] = summary.non_additive_count;
    json histogram = json::object();
    for (std::size_t k = 0; k < summary.outcome_histogram.size(); ++k) {
        histogram[std::to_string(k + 1)] = summary.outcome_histogram[k];
    }
    j["outcome_histogram"] = histogram;
    j["outcome_sets"] = summary.outcome_sets;
    json sizes = json::object();
    for (const auto& [size, count] : summary.witness_sizes) sizes[std::to_string(size)] = count;
    j["witness_sizes"] = sizes;
    j["min_deficiency"] = summary.min_deficiency ? json(*summary.min_deficiency) : json(nullptr);
    j["max_deficiency"] = summary.max_deficiency ? json(*summary.max_deficiency) : json(nullptr);
    j["falsifications"] = summary.falsifications;
    j["invariant_violations"] = summary.invariant_violations;
    j["additive_with_outcome"] = summary.additive_with_outcome;
    j["aborted"] = summary.aborted;
    return j;
}

void write_report(std::ostream& out, const RunResult& result) {
    for (const PairReport& report : result.reports) out << pair_to_json(report).dump() << '\n';
    if (result.falsification) {
        json dump = pair_to_json(*result.falsification);
        dump["theorem_ok"] = false;
        dump["evidence"] = outcomes_to_json(*result.falsification->outcomes);
        out << json{{"falsification", dump}}.dump() << '\n';
    }
    out << json{{"summary", summary_to_json(result.summary)}}.dump() << '\n';
}

}  // namespace addpair
