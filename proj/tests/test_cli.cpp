#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "qdm/io.hpp"
#include "qdm/states.hpp"

namespace {

std::string cli_path() {
    const char* env = std::getenv("QDM_CLI");
    REQUIRE_MESSAGE(env != nullptr, "QDM_CLI must point at the qdm binary");
    return env;
}

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (header) *header = line;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

TEST_CASE("measures command on the probe presets") {
    const RunResult q = run_cli("measures --preset rho_q --p 0.8");
    REQUIRE(q.exit_code == 0);
    const auto jq = nlohmann::json::parse(q.output);
    CHECK(jq.at("qip_raw").get<double>() <= 0.64 + 1e-9);
    CHECK(jq.at("qip_normalized").get<double>() ==
          doctest::Approx(0.25 * jq.at("qip_raw").get<double>()));
    const double expected_purity = 0.25 * (1 + 0.64) * (1 + 0.64);
    CHECK(jq.at("purity").get<double>() == doctest::Approx(expected_purity).epsilon(1e-10));

    const RunResult c = run_cli("measures --preset rho_c --p 0.5");
    REQUIRE(c.exit_code == 0);
    const auto jc = nlohmann::json::parse(c.output);
    CHECK(jc.at("lqu").get<double>() <= 1e-8);
    CHECK(jc.at("qip_raw").get<double>() <= 1e-8);
}

TEST_CASE("measures command exit codes") {
    // Hermitian, unit trace, but not PSD -> invalid state -> exit 2
    nlohmann::json bad = qdm::state_to_json(qdm::make_rho_q(0.5));
    for (auto& entry : bad["matrix"]) entry = {0.0, 0.0};
    bad["matrix"][0] = {1.5, 0.0};
    bad["matrix"][5] = {0.5, 0.0};
    bad["matrix"][10] = {-0.5, 0.0};
    bad["matrix"][15] = {-0.5, 0.0};
    const std::string path = "/tmp/qdm_test_nonpsd_state.json";
    std::ofstream(path) << bad.dump();
    const RunResult invalid = run_cli("measures --state " + path);
    CHECK(invalid.exit_code == 2);

    // spectrum of the wrong length -> exit 3
    const RunResult mismatch = run_cli("measures --preset bell --spectrum 1,2,3");
    CHECK(mismatch.exit_code == 3);

    // degenerate spectrum -> exit 3
    const RunResult degenerate = run_cli("measures --preset bell --spectrum 1,1");
    CHECK(degenerate.exit_code == 3);

    // unreadable state file -> exit 4
    const RunResult missing = run_cli("measures --state /nonexistent/state.json");
    CHECK(missing.exit_code == 4);
}

TEST_CASE("sweep reproduces the analytic curves") {
    const RunResult q = run_cli("sweep --preset rho_q --points 11");
    REQUIRE(q.exit_code == 0);
    std::string header;
    const auto rows = parse_csv(q.output, &header);
    CHECK(header ==
          "p,qfi_x,qfi_y,qfi_z,qfi_diag,qip_raw,qip_normalized,lqu,discord_entropic,purity");
    REQUIRE(rows.size() == 11);

    const auto& zero = rows[0];  // p = 0: maximally mixed
    for (size_t col = 1; col <= 8; ++col) CHECK(std::abs(zero[col]) <= 1e-8);
    CHECK(zero[9] == doctest::Approx(0.25).epsilon(1e-12));

    const auto& half = rows[5];  // p = 0.5
    CHECK(half[0] == doctest::Approx(0.5));
    CHECK(half[1] == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(half[2] == doctest::Approx(0.4).epsilon(1e-8));
    CHECK(half[3] == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(half[4] == doctest::Approx(0.325).epsilon(1e-8));
    // qip_raw is the minimum of the QFI columns up to tolerance
    for (size_t col = 1; col <= 4; ++col) CHECK(half[5] <= half[col] + 1e-9);

    const RunResult c = run_cli("sweep --preset rho_c --points 11");
    REQUIRE(c.exit_code == 0);
    const auto crows = parse_csv(c.output, nullptr);
    const auto& chalf = crows[5];
    CHECK(std::abs(chalf[1]) <= 1e-8);
    CHECK(chalf[2] == doctest::Approx(0.4).epsilon(1e-8));
    CHECK(chalf[3] == doctest::Approx(0.4).epsilon(1e-8));
    CHECK(chalf[4] == doctest::Approx(0.2).epsilon(1e-8));
    CHECK(chalf[5] <= 1e-8);  // QIP vanishes for the classical probe

    const RunResult unwritable = run_cli("sweep --preset rho_q --points 3 -o /nonexistent/x.csv");
    CHECK(unwritable.exit_code == 4);
}

TEST_CASE("sweep output is byte-identical across runs and round-trips") {
    const RunResult a = run_cli("sweep --preset rho_q --points 11");
    const RunResult b = run_cli("sweep --preset rho_q --points 11");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    // 17-significant-digit round trip: re-printing the parsed values
    // reproduces every cell exactly
    std::istringstream in(a.output);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", std::stod(cell));
            CHECK(cell == buf);
        }
    }
}

TEST_CASE("estimate command: saturation, determinism, seeding") {
    const std::string args = "estimate --preset rho_q --p 0.9 --direction z "
                             "--theta 0.3 --shots 10000 --seed 42";
    const RunResult a = run_cli(args);
    REQUIRE(a.exit_code == 0);
    const auto ja = nlohmann::json::parse(a.output);
    const double ratio = ja.at("variance_to_crb_ratio").get<double>();
    CHECK(ratio >= 0.75);
    CHECK(ratio <= 1.25);

    const RunResult b = run_cli(args);
    CHECK(a.output == b.output);  // byte identical

    // QDM_SEED fills in when --seed is absent
    const RunResult env_seeded = run_cli(
        "estimate --preset rho_q --p 0.9 --direction z --theta 0.3 --shots 10000",
        "QDM_SEED=42 ");
    CHECK(env_seeded.output == a.output);
}

TEST_CASE("estimate command flags the insensitive probe") {
    const RunResult r = run_cli("estimate --preset rho_c --p 0.8 --direction x --theta 0.3");
    CHECK(r.exit_code == 5);
    CHECK(r.output.find("probe insensitive") != std::string::npos);
}

TEST_CASE("check command selectors and mutation harness") {
    const RunResult cq = run_cli("check --suite cq --thinning 5");
    CHECK(cq.exit_code == 0);
    CHECK(cq.output.find("PASS") != std::string::npos);

    const RunResult oracle = run_cli("check --suite oracle --thinning 20");
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.output.find("oracle") != std::string::npos);

    // fault injection: scaling the QFI must break the calibration/chain suite
    const RunResult mutated = run_cli("check --suite inequality --thinning 10 --mutate-qfi 1.01");
    CHECK(mutated.exit_code == 1);
    CHECK(mutated.output.find("FAIL") != std::string::npos);
    const bool names_property = mutated.output.find("calibration") != std::string::npos ||
                                mutated.output.find("inequality") != std::string::npos;
    CHECK(names_property);
}
