#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "addpair/additivity.hpp"
#include "addpair/error.hpp"
#include "addpair/graph6.hpp"
#include "addpair/patterns.hpp"
#include "addpair/report.hpp"
#include "addpair/verifier.hpp"

namespace addpair::cli {

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string read_source(const std::string& source, std::istream& in) {
    if (source == "-") {
        std::string line;
        while (std::getline(in, line)) {
            if (!trim(line).empty()) return trim(line);
        }
        throw InputError("stdin: no graph6 line available");
    }
    if (!source.empty() && source[0] == '@') {
        std::ifstream file(source.substr(1));
        if (!file) throw InputError("cannot open " + source.substr(1));
        std::string line;
        while (std::getline(file, line)) {
            if (!trim(line).empty()) return trim(line);
        }
        throw InputError(source.substr(1) + ": no graph6 line found");
    }
    return trim(source);
}

Graph load_graph(const char* flag, const std::string& source, std::istream& in) {
    try {
        return parse_graph6(read_source(source, in));
    } catch (const ParseError& e) {
        throw InputError(std::string(flag) + ": " + e.what());
    }
}

void print_text(std::ostream& out, const PairReport& report, const std::optional<VertexSet>& split_failure) {
    out << "B: " << report.b_graph6 << "\nR: " << report.r_graph6 << "\n";
    out << "additive: " << (report.additive ? "yes" : "no") << "\n";
    if (report.witness) {
        const Witness& w = *report.witness;
        out << "minimal witness: " << w.x.to_string() << " (omega_B = " << w.omega_b << ", omega_R = " << w.omega_r
            << ", deficiency " << w.deficiency << ")\n";
    }
    if (report.outcomes) {
        out << "outcomes:";
        if (!report.outcomes->any()) out << " none";
        for (int k : report.outcomes->list()) out << " " << k;
        out << "\n";
        for (int k : report.outcomes->list()) {
            for (const Containment& c : report.outcomes->evidence[k - 1]) {
                out << "  " << k << ": " << side_name(c.side) << " contains " << c.catalog << "[" << c.member_index
                    << "] at";
                for (int v : c.embedding.map) out << " " << v;
                out << "\n";
            }
        }
    }
    out << "union-decomposable: ";
    if (split_failure) {
        out << "no, clique " << split_failure->to_string() << " is not a B-clique plus an R-clique\n";
    } else {
        out << "yes\n";
    }
    out << "theorem consistent: " << (report.theorem_ok ? "yes" : "NO") << "\n";
    for (const auto& failure : report.invariant_failures) out << "invariant failure: " << failure << "\n";
}

}  // namespace

int default_workers() {
    if (const char* env = std::getenv(kWorkersEnv)) {
        const int value = std::atoi(env);
        if (value > 0) return value;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

int cmd_check(const CheckRequest& request, std::istream& in, std::ostream& out, std::ostream& err) {
    PairReport report;
    std::optional<VertexSet> split_failure;
    try {
        const Graph b = load_graph("--b", request.b_source, in);
        const Graph r = load_graph("--r", request.r_source, in);
        report = verify_pair(b, r, VerifyOptions{true, true});
        split_failure = union_decomposable(b, r);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    if (request.format == Format::kJson) {
        nlohmann::json j = pair_to_json(report);
        j["additive"] = report.additive;
        j["evidence"] = report.outcomes ? outcomes_to_json(*report.outcomes) : nlohmann::json::array();
        j["union_decomposable"] = !split_failure.has_value();
        j["non_decomposable_clique"] = split_failure ? nlohmann::json(split_failure->to_vector()) : nullptr;
        j["theorem_ok"] = report.theorem_ok;
        j["invariant_failures"] = report.invariant_failures;
        out << j.dump() << "\n";
    } else {
        print_text(out, report, split_failure);
    }
    return report.additive ? kExitOk : kExitNonAdditive;
}

int cmd_enumerate(const EnumerateRequest& request, std::ostream& out, std::ostream& err) {
    RunOptions options;
    options.workers = request.workers;
    options.classify_additive = request.classify_additive;
    RunResult result;
    try {
        if (request.workers < 1) throw InputError("--workers must be at least 1");
        if (request.mode == "exhaustive") {
            result = enumerate_exhaustive(request.n, options);
        } else if (request.mode == "random") {
            if (request.n < 2 || request.n > kVerifyMaxOrder) {
                throw InputError("random mode needs 2 <= n <= 8, got " + std::to_string(request.n));
            }
            result = sample_random(request.n, request.samples, request.seed, options);
        } else {
            throw InputError("unknown mode '" + request.mode + "' (expected exhaustive or random)");
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    if (request.report_path.empty() || request.report_path == "-") {
        write_report(out, result);
    } else {
        std::ofstream file(request.report_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << request.report_path << "\n";
            return kExitInputError;
        }
        write_report(file, result);
    }

    const RunSummary& s = result.summary;
    err << mode_name(s.mode) << " n=" << s.n << ": " << s.pairs_checked << " pairs, " << s.non_additive_count
        << " non-additive, " << s.falsifications << " falsifications, " << s.invariant_violations
        << " invariant violations (" << s.wall_seconds << " s, " << request.workers << " workers)\n";
    if (result.falsification) {
        err << "FALSIFICATION at code " << (result.falsification->code ? result.falsification->code->to_string() : "?")
            << ": B=" << result.falsification->b_graph6 << " R=" << result.falsification->r_graph6 << "\n";
    }
    return s.falsifications == 0 ? kExitOk : kExitFalsified;
}

int cmd_catalog(const std::string& family, std::ostream& out, std::ostream& err) {
    auto emit = [&](const PatternCatalog& catalog) {
        for (const Graph& g : catalog.members) out << to_graph6(g) << "\n";
    };
    if (family == "F") {
        emit(catalog_F());
    } else if (family == "P") {
        emit(catalog_P());
    } else if (family == "P0c") {
        emit(catalog_P0c());
    } else if (family == "necessity") {
        for (const NecessityCase& c : necessity_suite()) {
            out << to_graph6(c.b) << " " << to_graph6(c.r) << " expected=";
            for (std::size_t i = 0; i < c.expected.size(); ++i) out << (i ? "," : "") << c.expected[i];
            out << " " << c.name << "\n";
        }
    } else {
        err << "error: unknown family '" << family << "' (expected F, P, P0c or necessity)\n";
        return kExitInputError;
    }
    return kExitOk;
}

}  // namespace addpair::cli
