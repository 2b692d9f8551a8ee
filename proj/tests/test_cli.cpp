#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jordanip/json_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("JORDANIP_CLI");
    REQUIRE_MESSAGE(p != nullptr, "JORDANIP_CLI must point at the CLI binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string tmp_file(const std::string& name) { return "/tmp/jordanip_cli_test_" + name; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << content;
}

}  // namespace

TEST_CASE("build-example then ip-check on complex lines passes") {
    std::string tensor = tmp_file("t.json");
    std::string triple = tmp_file("tr.json");
    RunResult build = run("build-example --delta1 1 --delta2 1 --reduced --lambda1 2 --lambda2 3 "
                          "-o " + tensor + " --triple-out " + triple);
    CHECK(build.exit_code == 0);

    RunResult check = run("ip-check " + tensor + " --plane-type spacelike --complex-lines "
                          "--triple " + triple + " --samples 25 --seed 42");
    CHECK(check.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(check.out);
    CHECK(report.at("schema") == 1);
    CHECK(report.at("ok") == true);
    CHECK(report.at("result").at("constant") == true);
    CHECK(report.at("config").at("seed") == 42);
    CHECK(report.at("config").at("samples") == 25);
}

TEST_CASE("check-symmetries flags a corrupted dense tensor with exit 1") {
    // dense 2x2x2x2 tensor with R(0,0,0,0) = 1 violates antisymmetry
    std::string path = tmp_file("corrupt.json");
    nlohmann::json dense;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) dense[i][j][k][l] = "0";
    dense[0][0][0][0] = "1";
    nlohmann::json gram = nlohmann::json::array(
        {nlohmann::json::array({"1", "0"}), nlohmann::json::array({"0", "1"})});
    nlohmann::json tensor = {{"space", {{"gram", gram}}}, {"dense", dense}};
    write_file(path, tensor.dump());

    RunResult r = run("check-symmetries " + path);
    CHECK(r.exit_code == 1);
    nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(report.at("ok") == false);
    CHECK(report.at("result").at("violated") == "antisymmetry");
    CHECK(report.at("result").at("witness") == nlohmann::json({0, 0, 0, 0}));
}

TEST_CASE("mixed complex lines are rejected with exit 2") {
    std::string tensor = tmp_file("t.json");
    std::string triple = tmp_file("tr.json");
    run("build-example --reduced -o " + tensor + " --triple-out " + triple);
    RunResult r = run("ip-check " + tensor + " --plane-type mixed --complex-lines --triple " +
                      triple);
    CHECK(r.exit_code == 2);
    nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(report.at("error").at("code") == "parse");
}

TEST_CASE("malformed tensor files and bad usage exit 2") {
    std::string path = tmp_file("bad.json");
    write_file(path, "{ not json");
    CHECK(run("check-symmetries " + path).exit_code == 2);

    write_file(path, R"({"space": {"gram": [["1","0"],["0","1"]]}})");
    CHECK(run("check-symmetries " + path).exit_code == 2);  // neither terms nor dense

    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("build-example --delta1 0 --delta2 0 -o /dev/null").exit_code == 2);
}

TEST_CASE("remaining verifiers run green on the reduced example") {
    std::string tensor = tmp_file("t.json");
    std::string triple = tmp_file("tr.json");
    run("build-example --reduced -o " + tensor + " --triple-out " + triple);

    CHECK(run("check-symmetries " + tensor).exit_code == 0);
    CHECK(run("rank-profile " + tensor + " --samples 10 --seed 42").exit_code == 0);
    CHECK(run("verify-lemma " + triple + " --samples 10 --seed 42").exit_code == 0);
    CHECK(run("verify-theorem5 " + triple + " --samples 5 --seed 42").exit_code == 0);
    CHECK(run("almost-complex-check " + tensor + " --triple " + triple +
              " --samples 5 --seed 42").exit_code == 0);

    RunResult jr = run("jr-spectrum " + tensor + " --triple " + triple +
                       " --samples 5 --seed 42");
    CHECK(jr.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(jr.out);
    CHECK(report.at("result").at("spectrum").at("pattern_ok") == true);
    CHECK(report.at("result").at("spectrum").at("ell") == 2);
}
