#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef KUMMER_CLI_PATH
#error "KUMMER_CLI_PATH must point at the built CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

const fs::path kWorkDir = [] {
    auto p = fs::temp_directory_path() / "kummer_cli_tests";
    fs::create_directories(p);
    return p;
}();

int run(const std::string& args) {
    const std::string cmd =
        std::string(KUMMER_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string capture(const std::string& args) {
    const auto out = kWorkDir / "stdout.txt";
    const std::string cmd =
        std::string(KUMMER_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

TEST_CASE("construct then check round-trips") {
    const auto basis = (kWorkDir / "basis41.json").string();
    CHECK(run("construct --d 4 --n 1 --out " + basis) == 0);
    CHECK(run("check --file " + basis) == 0);
    const auto report = capture("check --file " + basis + " --json");
    CHECK(report.find("\"kummer\": true") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("construct --d 4 --n 0 --out /dev/null") == 2);
    CHECK(run("check --file " + (kWorkDir / "missing.json").string()) == 2);
}

TEST_CASE("malformed input exits with 2") {
    const auto bad = kWorkDir / "truncated.json";
    write(bad, "{\"d\": 4, \"n\": 1, \"basis\": [[1, 0");
    CHECK(run("check --file " + bad.string()) == 2);

    const auto dup = kWorkDir / "dup.json";
    write(dup, "{\"d\": 4, \"n\": 1, \"basis\": [[1, 0], [1, 0]]}");
    CHECK(run("check --file " + dup.string()) == 2);
}

TEST_CASE("a violating basis exits with 1 and prints the certificate") {
    const auto bad = kWorkDir / "violating.json";
    write(bad, "{\"d\": 4, \"n\": 1, \"basis\": [[1, 0], [3, 0]]}");
    CHECK(run("check --file " + bad.string()) == 1);
    const auto report = capture("check --file " + bad.string());
    CHECK(report.find("Kummer: no") != std::string::npos);
    CHECK(report.find("coefficient c = ") != std::string::npos);
}

TEST_CASE("graph subcommand writes DOT for d=4 and rejects d=3") {
    const auto basis = (kWorkDir / "basis41.json").string();
    REQUIRE(run("construct --d 4 --n 1 --out " + basis) == 0);
    const auto dot = (kWorkDir / "basis41.dot").string();
    CHECK(run("graph --file " + basis + " --dot " + dot) == 0);
    std::ifstream in(dot);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("digraph") != std::string::npos);
    CHECK(ss.str().find("style=dashed") != std::string::npos);

    const auto basis3 = (kWorkDir / "basis31.json").string();
    REQUIRE(run("construct --d 3 --n 1 --out " + basis3) == 0);
    CHECK(run("graph --file " + basis3 + " --dot " + dot) == 2);
}

TEST_CASE("coeff subcommand") {
    const auto pair = kWorkDir / "dashed_pair.json";
    write(pair, "{\"d\": 4, \"n\": 2, \"basis\": [[1, 0, 1, 0], [1, 2, 1, 0]]}");
    const auto out = capture("coeff --file " + pair.string() + " --mults 2,2");
    CHECK(out.find("c = 2") != std::string::npos);
    CHECK(out.find("(scalar)") != std::string::npos);
    CHECK(run("coeff --file " + pair.string() + " --mults 1,2,3") == 2);
}

TEST_CASE("search subcommand reports the known maximum") {
    const auto json_out = (kWorkDir / "search41.json").string();
    const auto out =
        capture("search --d 4 --n 1 --deterministic --json " + json_out);
    CHECK(out.find("max = 5") != std::string::npos);
    CHECK(run("search --d 4 --n 1") == 0);
    std::ifstream in(json_out);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("\"max_size\": 5") != std::string::npos);
    CHECK(ss.str().find("\"complete\": true") != std::string::npos);
}

TEST_CASE("verify-lemmas") {
    CHECK(run("verify-lemmas --d 4 --n 1") == 0);
    CHECK(run("verify-lemmas --d 3 --n 1") == 2);
    CHECK(run("verify-lemmas --d 4 --n 2") == 2);
}
