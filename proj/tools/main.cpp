#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace addpair::cli;

int main(int argc, char** argv) {
    CLI::App app{"Additivity checks and theorem verification for graph pairs (B, R)"};
    app.require_subcommand(1);

    CheckRequest check;
    std::string format = "text";
    auto* check_cmd = app.add_subcommand("check", "Decide additivity of a pair and classify it");
    check_cmd->add_option("--b", check.b_source, "B as graph6, @path, or - for stdin")->required();
    check_cmd->add_option("--r", check.r_source, "R as graph6, @path, or - for stdin")->required();
    check_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    EnumerateRequest enumerate;
    enumerate.workers = default_workers();
    auto* enum_cmd = app.add_subcommand("enumerate", "Verify every (or randomly drawn) complete-union pair");
    enum_cmd->add_option("--n", enumerate.n, "vertex count")->required();
    enum_cmd->add_option("--mode", enumerate.mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    enum_cmd->add_option("--samples", enumerate.samples, "samples drawn in random mode");
    enum_cmd->add_option("--seed", enumerate.seed, "seed for random mode");
    enum_cmd->add_option("--workers", enumerate.workers,
                         std::string("worker threads (default: $") + kWorkersEnv + " or hardware concurrency)");
    enum_cmd->add_option("--report", enumerate.report_path, "JSON-lines report path (default: stdout)");
    enum_cmd->add_flag("--classify-additive", enumerate.classify_additive,
                       "also count additive pairs that satisfy some outcome");

    std::string family;
    auto* catalog_cmd = app.add_subcommand("catalog", "Print a pattern catalog as graph6 lines");
    catalog_cmd->add_option("family", family, "F, P, P0c or necessity")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    if (*check_cmd) {
        check.format = format == "json" ? Format::kJson : Format::kText;
        return cmd_check(check, std::cin, std::cout, std::cerr);
    }
    if (*enum_cmd) return cmd_enumerate(enumerate, std::cout, std::cerr);
    return cmd_catalog(family, std::cout, std::cerr);
}
