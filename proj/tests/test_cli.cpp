#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "addpair/graph.hpp"
#include "addpair/graph6.hpp"
#include "addpair/patterns.hpp"
#include "json.hpp"

#ifndef ADDPAIR_CLI_PATH
#error "ADDPAIR_CLI_PATH must point at the built addpair executable"
#endif

using namespace addpair;

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string command = std::string(ADDPAIR_CLI_PATH) + " " + args + " 2>/dev/null";
    Run result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string quoted(const Graph& g) { return "'" + to_graph6(g) + "'"; }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("check exit codes") {
    const Graph c5 = cycle(5);
    const Run non_additive = run("check --b " + quoted(c5) + " --r " + quoted(complement(c5)) + " --format json");
    CHECK(non_additive.exit_code == 1);
    const auto j = nlohmann::json::parse(non_additive.out);
    CHECK(j["outcomes"] == std::vector<int>{2});
    CHECK(j["witness"] == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(j["deficiency"] == 1);
    CHECK(j["union_decomposable"] == false);
    CHECK(j["theorem_ok"] == true);

    CHECK(run("check --b " + quoted(complete(4)) + " --r " + quoted(complete(4))).exit_code == 0);
    CHECK(run("check --b " + quoted(complete(4)) + " --r " + quoted(complete(5))).exit_code == 2);
    CHECK(run("check --b 'D?' --r 'D\?\?'").exit_code == 2);
    CHECK(run("check --b D\?\?").exit_code == 2);

    const Run text = run("check --b " + quoted(c5) + " --r " + quoted(complement(c5)));
    CHECK(text.exit_code == 1);
    CHECK(text.out.find("outcomes: 2") != std::string::npos);
}

TEST_CASE("check reads files and stdin") {
    const std::string path = "cli_test_b.g6";
    std::ofstream(path) << to_graph6(cycle(5)) << "\n";
    CHECK(run("check --b @" + path + " --r " + quoted(complement(cycle(5)))).exit_code == 1);
    CHECK(run("check --b @does-not-exist.g6 --r D\?\?").exit_code == 2);
    const std::string piped = "printf '" + to_graph6(complete(4)) + "\\n" + to_graph6(complete(4)) + "\\n' | " +
                              ADDPAIR_CLI_PATH + " check --b - --r - > /dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(piped.c_str())) == 0);
}

TEST_CASE("enumerate") {
    const Run five = run("enumerate --n 5 --mode exhaustive --workers 2");
    CHECK(five.exit_code == 0);
    const auto out = lines(five.out);
    REQUIRE(out.size() == 13);
    const auto summary = nlohmann::json::parse(out.back())["summary"];
    CHECK(summary["non_additive_count"] == 12);
    CHECK(summary["falsifications"] == 0);

    CHECK(run("enumerate --n 9").exit_code == 2);
    CHECK(run("enumerate --n 7 --mode exhaustive").exit_code == 2);
    CHECK(run("enumerate --n 5 --mode sideways").exit_code == 2);
    CHECK(run("enumerate --n 5 --workers 0").exit_code == 2);
    CHECK(run("enumerate").exit_code == 2);

    CHECK(run("enumerate --n 7 --mode random --samples 20000 --seed 42 --workers 1 --report cli_a.jsonl").exit_code == 0);
    CHECK(run("enumerate --n 7 --mode random --samples 20000 --seed 42 --workers 3 --report cli_b.jsonl").exit_code == 0);
    CHECK(slurp("cli_a.jsonl") == slurp("cli_b.jsonl"));
    CHECK_FALSE(slurp("cli_a.jsonl").empty());
}

TEST_CASE("catalog") {
    const Run p = run("catalog P");
    CHECK(p.exit_code == 0);
    CHECK(lines(p.out) == std::vector<std::string>{to_graph6(build_P0()), to_graph6(build_P1()), to_graph6(build_P2())});

    const Run p0c = run("catalog P0c");
    REQUIRE(lines(p0c.out).size() == 1);
    const Graph g = parse_graph6(lines(p0c.out)[0]);
    CHECK(g.order() == 7);
    CHECK(g.edge_count() == 11);

    const Run f = run("catalog F");
    CHECK(lines(f.out).size() == catalog_F().members.size());

    const Run necessity = run("catalog necessity");
    CHECK(lines(necessity.out).size() == 70);
    CHECK(run("catalog Q").exit_code == 2);
}
