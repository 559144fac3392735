// SPDX-License-Identifier: Apache-2.0
//
// End-to-end exercises of the command-line tool: exit-code contract
// (0 pass / 1 mathematical failure / 2 input error) and output shape.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(GALTWIST_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe)) res.output += buffer.data();
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path write_temp_spec(const std::string& name, const std::string& content) {
    fs::path dir = fs::temp_directory_path() / "galtwist_cli_tests";
    fs::create_directories(dir);
    fs::path path = dir / name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string spec_dir() { return GALTWIST_SPEC_DIR; }

}  // namespace

TEST_CASE("verify: passing specs exit 0") {
    auto res = run_cli("verify --spec " + spec_dir() + "/cyclic_n2_m3.json");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("overall: pass") != std::string::npos);
}

TEST_CASE("verify: the mixed tower passes with a visible discrepancy section") {
    auto res = run_cli("verify --spec " + spec_dir() + "/mixed_24_m2.json");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("differs from the chain formula") != std::string::npos);

    auto structured = run_cli("verify --format structured --spec " + spec_dir() + "/mixed_24_m2.json");
    CHECK(structured.exit_code == 0);
    CHECK(structured.output.find("\"c_agrees\": false") != std::string::npos);
}

TEST_CASE("verify: corrupt polynomial text exits 2") {
    auto path = write_temp_spec("corrupt.json", R"({
        "kind": "abelian", "ell": 1, "m": 2,
        "layers": [{"n": 2, "f": "x1 + + 2"}]
    })");
    auto res = run_cli("verify --spec " + path.string());
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("error") != std::string::npos);
}

TEST_CASE("build: bad divisibility chain exits 2 naming the chain") {
    auto path = write_temp_spec("badchain.json", R"({
        "kind": "abelian", "ell": 1, "m": 2,
        "layers": [{"n": 3, "f": "x1^3 + 1"}, {"n": 4, "f": "x1^3 + 2"}]
    })");
    auto res = run_cli("build --spec " + path.string());
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("divisibility chain") != std::string::npos);
}

TEST_CASE("build: m = 1 leaves an empty twist section with a note") {
    auto res = run_cli("build --spec " + spec_dir() + "/cyclic_n2_m3.json --m 1");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"twist\"") != std::string::npos);
    CHECK(res.output.find("m = 1") != std::string::npos);
}

TEST_CASE("build: writes the four presentations and points to a file") {
    fs::path out = fs::temp_directory_path() / "galtwist_cli_tests" / "build_out.json";
    auto res = run_cli("build --spec " + spec_dir() + "/dihedral_n3_m2.json --out " + out.string());
    REQUIRE(res.exit_code == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    for (const char* key : {"\"cover\"", "\"product\"", "\"quotient\"", "\"twist\"", "\"points\""})
        CHECK(content.find(key) != std::string::npos);
}

TEST_CASE("rank: prints m * rk_end") {
    auto res = run_cli("rank --spec " + spec_dir() + "/cyclic_n2_m3.json --m 5");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("predicted Mordell-Weil rank: 5") != std::string::npos);

    auto path = write_temp_spec("cm.json", R"({
        "kind": "abelian", "ell": 1, "m": 5,
        "layers": [{"n": 2, "f": "x1^3 + 1"}],
        "descriptor": {"preset": "cm-elliptic"}
    })");
    auto cm = run_cli("rank --spec " + path.string());
    CHECK(cm.exit_code == 0);
    CHECK(cm.output.find("predicted Mordell-Weil rank: 10") != std::string::npos);
}

TEST_CASE("rank: missing descriptor exits 2; unasserted hypothesis tags a lower bound") {
    auto no_desc = write_temp_spec("nodesc.json", R"({
        "kind": "abelian", "ell": 1, "m": 2,
        "layers": [{"n": 2, "f": "x1^3 + 1"}]
    })");
    auto res = run_cli("rank --spec " + no_desc.string());
    CHECK(res.exit_code == 2);

    auto lb = write_temp_spec("lowerbound.json", R"({
        "kind": "abelian", "ell": 1, "m": 3,
        "layers": [{"n": 2, "f": "x1^3 + 1"}],
        "descriptor": {"rk_end": 1, "assert_no_extra_factor": false}
    })");
    auto res2 = run_cli("rank --spec " + lb.string());
    CHECK(res2.exit_code == 0);
    CHECK(res2.output.find("lower bound") != std::string::npos);
}

TEST_CASE("ffcheck: healthy run exits 0, bad prime exits 2, zero trials warns") {
    auto res = run_cli("ffcheck --spec " + spec_dir() + "/cyclic_n2_m3.json --primes 7,11 --trials 25 --seed 7");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("p=7") != std::string::npos);
    CHECK(res.output.find("(100%)") != std::string::npos);

    auto bad = run_cli("ffcheck --spec " + spec_dir() + "/cyclic_n2_m3.json --primes 2 --trials 5");
    CHECK(bad.exit_code == 2);

    auto none = run_cli("ffcheck --spec " + spec_dir() + "/cyclic_n2_m3.json --trials 0");
    CHECK(none.exit_code == 0);
    CHECK(none.output.find("no samples") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs for a fixed seed") {
    std::string cmd = "ffcheck --spec " + spec_dir() + "/dihedral_n3_m2.json --primes 11,13 --trials 20 --seed 42";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    auto v1 = run_cli("verify --format structured --spec " + spec_dir() + "/cyclic_n2_m3.json");
    auto v2 = run_cli("verify --format structured --spec " + spec_dir() + "/cyclic_n2_m3.json");
    CHECK(v1.output == v2.output);
}
