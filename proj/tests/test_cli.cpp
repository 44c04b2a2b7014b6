#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "edc/graph.hpp"
#include "edc/graph6.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(EDC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json schema_required_ok(const std::string& schema_file, const json& doc) {
    std::ifstream in(std::string(EDC_SCHEMA_DIR) + "/" + schema_file);
    REQUIRE(in.good());
    json schema = json::parse(in);
    json missing = json::array();
    for (const auto& key : schema.at("required"))
        if (!doc.contains(key.get<std::string>())) missing.push_back(key);
    return missing;
}

}  // namespace

TEST_CASE("phi on an inline triangle") {
    auto r = run_cli("phi --graph6 Bw");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["phi"] == 1);
    CHECK(j["proven_optimal"] == true);
    CHECK(schema_required_ok("phi.schema.json", j).empty());
}

TEST_CASE("phi with witness and oracle cross-check") {
    auto r = run_cli("phi --graph6 Bw --witness --brute-force");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["phi_brute_force"] == 1);
    REQUIRE(j["witness"].size() == 1);
    CHECK(j["witness"][0].size() == 3);
}

TEST_CASE("planar subcommand") {
    auto k5 = run_cli("planar --graph6 '" + edc::graph6_encode(edc::complete(5)) +
                      "' --obstruction");
    CHECK(k5.exit_code == 0);
    json j = json::parse(k5.out);
    CHECK(j["planar"] == false);
    CHECK(j.contains("obstruction"));
    CHECK(schema_required_ok("planar.schema.json", j).empty());

    auto c5 = run_cli("planar --graph6 '" + edc::graph6_encode(edc::cycle(5)) +
                      "' --outerplanar");
    json j2 = json::parse(c5.out);
    CHECK(j2["planar"] == true);
    CHECK(j2["outerplanar"] == true);
}

TEST_CASE("spectral subcommand") {
    auto r = run_cli("spectral --graph6 Bw --exact");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["rho"].get<double>() == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(j["rho_exact"].get<double>() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(schema_required_ok("spectral.schema.json", j).empty());
}

TEST_CASE("construct friendship family") {
    auto r = run_cli("construct --family friendship --k 3 --emit json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["n"] == 7);
    CHECK(j["edges"].size() == 9);
    CHECK(schema_required_ok("construct.schema.json", j).empty());
}

TEST_CASE("construct pipes into phi") {
    auto g6 = run_cli("construct --family extremal --k 3 --n 12");
    CHECK(g6.exit_code == 0);
    std::string line = g6.out.substr(0, g6.out.find('\n'));
    auto phi = run_cli("phi --graph6 '" + line + "'");
    CHECK(phi.exit_code == 0);
    CHECK(json::parse(phi.out)["phi"] == 2);
}

TEST_CASE("peel subcommand") {
    auto f2 = run_cli("construct --family friendship --k 2");
    std::string line = f2.out.substr(0, f2.out.find('\n'));
    auto r = run_cli("peel --graph6 '" + line + "'");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["q"] == 2);
    CHECK(j["residual_triangles"] == 0);
    CHECK(schema_required_ok("peel.schema.json", j).empty());
}

TEST_CASE("apex-pack subcommand") {
    // path on 5 vertices, apex joined to every tree vertex
    auto r = run_cli("apex-pack --graph6 '" + edc::graph6_encode(edc::path(5)) +
                     "' --neighbors 0,1,2,3,4");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["size"] == 2);
    CHECK(schema_required_ok("apex-pack.schema.json", j).empty());
}

TEST_CASE("verification subcommands exit 0 on success") {
    auto t11 = run_cli("verify-t11 --n 7 --k 2");
    CHECK(t11.exit_code == 0);
    json j = json::parse(t11.out);
    CHECK(j["matched"] == true);
    CHECK(schema_required_ok("report.schema.json", j).empty());

    auto t12 = run_cli("verify-t12 --n 15 --k 2");
    CHECK(t12.exit_code == 0);
    CHECK(json::parse(t12.out)["matched"] == true);

    auto c32 = run_cli("claim-32 --n 7 --k 2");
    CHECK(c32.exit_code == 0);
    CHECK(json::parse(c32.out)["matched"] == true);

    auto th = run_cli("threshold --n 6 --k 2");
    CHECK(th.exit_code == 0);
    CHECK(json::parse(th.out)["threshold"] == 4);
}

TEST_CASE("enumerate subcommand") {
    auto r = run_cli("enumerate --n 5 --count");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 34);
    CHECK(schema_required_ok("enumerate.schema.json", j).empty());

    auto lines = run_cli("enumerate --n 4");
    int count = 0;
    std::stringstream ss(lines.out);
    for (std::string line; std::getline(ss, line);)
        if (!line.empty()) ++count;
    CHECK(count == 11);
}

TEST_CASE("deterministic output across repeated runs") {
    auto a = run_cli("construct --family cactus --t 3 --seed 42");
    auto b = run_cli("construct --family cactus --t 3 --seed 42");
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("phi --graph6 'B'").exit_code == 2);           // malformed graph6
    CHECK(run_cli("construct --family nonsense").exit_code == 2);
    CHECK(run_cli("verify-t11 --n 7").exit_code == 2);           // missing --k
}
