// Exercises the installed command line surface through real process
// invocations: exit codes, deterministic bytes, file outputs.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "sll/instance.hpp"

#ifndef SLL_CLI_PATH
#error "SLL_CLI_PATH must point at the sll binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(SLL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, got);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), std::move(output)};
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/sll_cli_test_") + name;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("random is deterministic and round-trips through verify") {
    std::string a = temp_path("rand_a.json");
    std::string b = temp_path("rand_b.json");
    CHECK(run_cli("random --field gf:3 --dim 4 --seed 7 --kind twosum --out " + a).exit_code == 0);
    CHECK(run_cli("random --field gf:3 --dim 4 --seed 7 --kind twosum --out " + b).exit_code == 0);
    CHECK(slurp(a) == slurp(b));  // same seed, same bytes
    CHECK(run_cli("random --field gf:3 --dim 4 --seed 8 --kind twosum --out " + b).exit_code == 0);
    CHECK(slurp(a) != slurp(b));

    CHECK(run_cli("verify " + a + " --suite all").exit_code == 0);
    CHECK(run_cli("verify " + a + " --suite section2").exit_code == 0);

    // Byte-exact round trip through parse/emit.
    std::string text = slurp(a);
    CHECK(sll::InstanceFile::parse_text(text).emit_text() == text);
}

TEST_CASE("random parameter validation") {
    CHECK(run_cli("random --field gf:2 --dim 4 --seed 1 --kind twosum").exit_code == 2);
    CHECK(run_cli("random --field gf:9 --dim 4 --seed 1 --kind twosum").exit_code == 2);
    CHECK(run_cli("random --field gf:3 --dim 0 --seed 1 --kind twosum").exit_code == 2);
    CHECK(run_cli("random --field gf:3 --dim 4 --seed 1 --kind nope").exit_code == 2);
    CHECK(run_cli("random --field q --dim 2 --seed 3 --kind reflexive").exit_code == 0);
}

TEST_CASE("decompose on the crossed-lines fixture") {
    std::string path = temp_path("crossed.json");
    write_text(path, R"({
      "field": "q",
      "dim": 2,
      "subspaces": {
        "V1": [["1", "0"]],
        "V2": [["0", "1"]],
        "W1": [["1", "1"]],
        "W2": [["1", "-1"]]
      }
    })");
    RunResult r = run_cli("decompose " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"-1/2\"") != std::string::npos);  // the commutator matrix
    CHECK(r.output.find("\"ftilde\"") != std::string::npos);
    // The image summand is everything.
    CHECK(r.output.find("\"nilpotency_index\": 0") != std::string::npos);
}

TEST_CASE("malformed files exit 2 with a position") {
    std::string path = temp_path("broken.json");
    write_text(path, "{\n  \"field\": \"q\",\n  broken\n}");
    CHECK(run_cli("decompose " + path).exit_code == 2);
    CHECK(run_cli("verify " + path).exit_code == 2);
    CHECK(run_cli("decompose /tmp/sll_no_such_file.json").exit_code == 2);
}

TEST_CASE("invariant violations exit 3") {
    std::string path = temp_path("overlap.json");
    write_text(path, R"({
      "field": "q", "dim": 2,
      "subspaces": {
        "V1": [["1", "0"]], "V2": [["1", "0"]],
        "W1": [["1", "0"]], "W2": [["0", "1"]]
      }
    })");
    CHECK(run_cli("decompose " + path).exit_code == 3);
}

TEST_CASE("lattice command writes dot output and honors the cap") {
    std::string path = temp_path("crossed2.json");
    write_text(path, R"({
      "field": "q",
      "dim": 2,
      "subspaces": {
        "V1": [["1", "0"]],
        "V2": [["0", "1"]],
        "W1": [["1", "1"]],
        "W2": [["1", "-1"]]
      }
    })");
    std::string dot = temp_path("lat.dot");
    RunResult r = run_cli("lattice " + path + " --dot " + dot);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"elements\": 6") != std::string::npos);
    std::string dot_text = slurp(dot);
    CHECK(dot_text.find("digraph") != std::string::npos);
    CHECK(slurp(dot + ".legend").find("n0") != std::string::npos);

    CHECK(run_cli("lattice " + path + " --max 4").exit_code == 4);
    CHECK(run_cli("lattice " + path + " --max 4 --allow-truncated").exit_code == 0);
}

TEST_CASE("verify on a formless file with the reflexive suite exits 0 with a notice") {
    std::string path = temp_path("formless.json");
    write_text(path, R"({
      "field": "gf:5", "dim": 2,
      "subspaces": {
        "V1": [["1", "0"]], "V2": [["0", "1"]],
        "W1": [["1", "1"]], "W2": [["1", "4"]]
      }
    })");
    RunResult r = run_cli("verify " + path + " --suite reflexive");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("inapplicable") != std::string::npos);
}

TEST_CASE("reflexive and curvature kinds round-trip through verify") {
    std::string path = temp_path("refl.json");
    CHECK(run_cli("random --field gf:5 --dim 4 --seed 21 --kind reflexive --out " + path)
              .exit_code == 0);
    CHECK(run_cli("verify " + path + " --suite all").exit_code == 0);

    CHECK(run_cli("random --field gf:3 --dim 4 --seed 22 --kind curvature --out " + path)
              .exit_code == 0);
    CHECK(run_cli("verify " + path + " --suite curvature").exit_code == 0);
}

TEST_CASE("environment variable overrides the closure cap") {
    std::string path = temp_path("crossed3.json");
    write_text(path, R"({
      "field": "q",
      "dim": 2,
      "subspaces": {
        "V1": [["1", "0"]],
        "V2": [["0", "1"]],
        "W1": [["1", "1"]],
        "W2": [["1", "-1"]]
      }
    })");
    std::string command = std::string("SLL_MAX_ELEMENTS=4 ") + SLL_CLI_PATH + " lattice " + path +
                          " >/dev/null 2>&1";
    int status = std::system(command.c_str());
    CHECK(WEXITSTATUS(status) == 4);
}
