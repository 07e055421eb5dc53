#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
    std::string out;
    int exit_code = -1;
};

std::string bin_path() {
    const char* p = std::getenv("WBU_BIN");
    REQUIRE_MESSAGE(p != nullptr, "WBU_BIN must point at the CLI binary");
    return p;
}

std::string fixture_dir() {
    const char* p = std::getenv("WBU_FIXTURES");
    REQUIRE_MESSAGE(p != nullptr, "WBU_FIXTURES must point at tests/fixtures");
    return p;
}

// Runs the CLI with the given argument string, capturing stdout and the exit
// status; stderr is routed to /dev/null.
RunResult run_cli(const std::string& args) {
    std::string cmd = bin_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("charts output matches the stored fixtures byte for byte") {
    struct Case {
        const char* germ;
        const char* weights;
        const char* fixture;
    } cases[] = {
        {"xy + z^3 + u^3", "1,2,1,1", "charts_zn_un_n3.txt"},
        {"xy + z^4 + u^4", "1,3,1,1", "charts_zn_un_n4.txt"},
        {"xy + z^5 + u^5", "1,4,1,1", "charts_zn_un_n5.txt"},
        {"xy + z^3 + u^4", "1,2,1,1", "charts_z3u4_w1211.txt"},
    };
    for (const Case& c : cases) {
        CAPTURE(c.fixture);
        std::string fixture = fixture_dir() + "/" + c.fixture;
        RunResult r = run_cli(std::string("charts --germ \"") + c.germ +
                              "\" --weights " + c.weights + " --expect " + fixture);
        CHECK(r.exit_code == 0);
        CHECK(r.out == read_file(fixture));
    }
}

TEST_CASE("--expect mismatch exits 1") {
    std::string fixture = fixture_dir() + "/charts_zn_un_n4.txt";
    RunResult r = run_cli("charts --germ \"xy + z^3 + u^3\" --weights 1,2,1,1 --expect " +
                          fixture);
    CHECK(r.exit_code == 1);
}

TEST_CASE("exit codes follow the error taxonomy") {
    CHECK(run_cli("charts --germ \"xy + z^3 + u^4\" --weights 1,2,x,1").exit_code == 2);
    CHECK(run_cli("charts --germ \"xy + w^3\" --weights 1,2,1,1").exit_code == 2);
    CHECK(run_cli("charts --germ \"xy + z^3 + u^4\" --weights 2,2,2,2").exit_code == 2);
    CHECK(run_cli("verdict --germ \"xy + z^2 + zu + u^2\" --weights 1,1,1,1").exit_code == 3);
    CHECK(run_cli("surface --germ \"xy + z^3 + u^4\" --weights 2,11,4,3").exit_code == 3);
    CHECK(run_cli("charts --germ \"xy + z^3 + u^4\" --weights "
                  "1,1,4000000000000000000,3").exit_code == 4);
    CHECK(run_cli("charts --germ \"xy + z^3 + u^4\"").exit_code == 2);  // missing weights
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("classify --germ \"xy + z^3 + u^4\" --bound 0").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("rejected verdicts still exit 0") {
    RunResult r = run_cli("verdict --germ \"xy + z^3 + u^4\" --weights 2,11,4,3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict: rejected (non-terminal point in chart 2)\n") !=
          std::string::npos);
}

TEST_CASE("accepted verdict text") {
    RunResult r = run_cli("verdict --germ \"xy + z^3 + u^4\" --weights 1,2,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "germ: xy + u^4 + z^3\n"
          "weights: (1,2,1,1)\n"
          "discrepancy: 1\n"
          "exceptional divisor: irreducible, reduced\n"
          "chart 2: cyclic quotient point 1/2(1,1,1), terminal\n"
          "verdict: accepted (terminal extraction with discrepancy 1)\n");
}

TEST_CASE("verdict json carries the same facts as the text report") {
    RunResult r = run_cli("verdict --germ \"xy + z^3 + u^4\" --weights 1,2,1,1 "
                          "--format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["germ"] == "xy + u^4 + z^3");
    CHECK(j["weights"] == nlohmann::json::array({1, 2, 1, 1}));
    CHECK(j["discrepancy"] == 1);
    CHECK(j["terminal"] == true);
    CHECK(j["exceptional"]["irreducible"] == true);
    CHECK(j["exceptional"]["reduced"] == true);
    CHECK(j["rejection_reason"] == "");
    REQUIRE(j["singular_points"].size() == 1);
    CHECK(j["singular_points"][0]["chart"] == 2);
    CHECK(j["singular_points"][0]["kind"] == "cyclic quotient point");
    CHECK(j["singular_points"][0]["terminal"] == true);
}

TEST_CASE("charts json") {
    RunResult r = run_cli("charts --germ \"xy + z^3 + u^4\" --weights 1,2,1,1 "
                          "--format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["weighted_multiplicity"] == 3);
    CHECK(j["discrepancy"] == 1);
    REQUIRE(j["charts"].size() == 4);
    CHECK(j["charts"][1]["index"] == 2);
    CHECK(j["charts"][1]["equation"] == "x + yu^4 + z^3");
    CHECK(j["charts"][1]["group"]["order"] == 2);
    CHECK(j["charts"][1]["group"]["weights"] == nlohmann::json::array({-1, 1, -1, -1}));
    CHECK(j["charts"][1]["origin_in_exceptional"] == true);
    CHECK(j["charts"][1]["rendered"] == "U2 = { x + yu^4 + z^3 } / Z_2(-1,1,-1,-1)");
    CHECK(j["charts"][2]["origin_in_exceptional"] == false);
}

TEST_CASE("surface text report through the CLI") {
    RunResult r = run_cli("surface --germ \"xy + z^3 + u^4\" --weights 1,2,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("K^2 of E: 6\n") != std::string::npos);
    CHECK(r.out.find("Picard rank of E: 1\n") != std::string::npos);
    CHECK(r.out.find("  resolved self-intersection: -1\n") != std::string::npos);
}

TEST_CASE("classify json against the frozen fixture") {
    std::string fixture = fixture_dir() + "/classify_z3u4_bound8.json";
    RunResult r = run_cli("classify --germ \"xy + z^3 + u^4\" --bound 8 "
                          "--format json --expect " + fixture);
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j == nlohmann::json::parse(read_file(fixture)));
    CHECK(j["discrepancy_one_count"] == 2);
}

TEST_CASE("classify --explain prints a single verdict instead of sweeping") {
    RunResult r = run_cli("classify --germ \"xy + z^3 + u^4\" --explain 1,2,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict: accepted (terminal extraction with discrepancy 1)\n") !=
          std::string::npos);
    CHECK(r.out.find("bound:") == std::string::npos);
}

TEST_CASE("classify text respects the discrepancy filters") {
    RunResult r = run_cli("classify --germ \"xy + z^3 + u^4\" --bound 2 "
                          "--min-discrepancy 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("accepted weight vectors (discrepancy >= 2):\n") !=
          std::string::npos);
    CHECK(r.out.find("(1,2,1,1) discrepancy") == std::string::npos);
}

TEST_CASE("quotient subcommand dispatches on arity") {
    RunResult terminal = run_cli("quotient \"1/3(1,1,1)\"");
    CHECK(terminal.exit_code == 0);
    CHECK(terminal.out ==
          "quotient: 1/3(1,1,1)\n"
          "isolated: true\n"
          "terminal: false\n");

    RunResult duval = run_cli("quotient \"1/4(1,1)\"");
    CHECK(duval.exit_code == 0);
    CHECK(duval.out ==
          "quotient: 1/4(1,1)\n"
          "type: non-Du-Val cyclic 1/4(1,1)\n"
          "chain: [4]\n"
          "discrepancies: [-1/2]\n");

    RunResult a2 = run_cli("quotient \"1/3(1,2)\" --test duval");
    CHECK(a2.exit_code == 0);
    CHECK(a2.out.find("type: A_2\n") != std::string::npos);
    CHECK(a2.out.find("chain: [2,2]\n") != std::string::npos);
    CHECK(a2.out.find("discrepancies: [0,0]\n") != std::string::npos);

    RunResult hyper = run_cli("quotient \"1/2(1,1,1,0)\" --test hyperquotient");
    CHECK(hyper.exit_code == 0);
    CHECK(hyper.out ==
          "quotient: 1/2(1,1,1,0)\n"
          "equation weight: 0\n"
          "terminal (fractional screen): true\n");

    CHECK(run_cli("quotient \"1/2(1,1)\" --test terminal").exit_code == 2);  // arity
    CHECK(run_cli("quotient \"1/2(1,1,1)\" --test badkind").exit_code == 2);
}

TEST_CASE("quotient-blowup lists the ambient charts") {
    RunResult r = run_cli("quotient-blowup \"1/2(1,1,1)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "U1 = C^3 / Z_1(2,-1,-1)\n"
          "U2 = C^3 / Z_1(-1,2,-1)\n"
          "U3 = C^3 / Z_1(-1,-1,2)\n");
    CHECK(run_cli("quotient-blowup \"1/3(1,2,3)\"").exit_code == 2);  // weight 3 = 0 mod 3
}
