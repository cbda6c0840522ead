#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "addpair/verifier.hpp"

namespace addpair {

/// Report line for a pair: code, b_graph6, r_graph6, witness, omega_b,
/// omega_r, deficiency, outcomes.
nlohmann::json pair_to_json(const PairReport& report);
nlohmann::json summary_to_json(const RunSummary& summary);
/// Outcome evidence (side, catalog, member, embedding) for human-facing output.
nlohmann::json outcomes_to_json(const OutcomeSet& outcomes);

/// JSON-lines report: one line per non-additive pair, then the falsification
/// dump if the run aborted, then {"summary": ...}. Wall time is left out so
/// that reports are byte-identical across runs.
void write_report(std::ostream& out, const RunResult& result);

}  // namespace addpair
