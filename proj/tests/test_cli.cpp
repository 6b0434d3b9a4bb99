#include "doctest.h"

#include "cli_io.hpp"

#include "fmd/completions.hpp"
#include "fmd/inversion.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FMD_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "fmd_cli_tests" / name;
    fs::create_directories(dir);
    return dir;
}

const std::string kPa100 = "--N 100 --a1 25 --a2 60 --pL 0.1 --pU 0.7";

} // namespace

TEST_CASE("predict writes the exact header and in-window components") {
    const fs::path dir = scratch_dir("predict");
    const fs::path out = dir / "p.csv";
    const auto r = run_cli("predict " + kPa100 + " --completion strict --out " +
                           out.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "wrote " + out.string() + "\n");

    const std::string bytes = slurp(out);
    const std::string header = bytes.substr(0, bytes.find('\n'));
    CHECK(header == fmd::cli::kCsvHeader);

    const auto table = fmd::cli::read_table_csv(out.string());
    REQUIRE(table.rows.size() == 101);
    for (int a = 25; a <= 60; ++a) {
        REQUIRE(table.rows[a].p_aN.has_value());
        CHECK(*table.rows[a].p_aN == static_cast<double>(a) / 100.0);
        CHECK(!table.rows[a].q_aNp1.has_value());
    }
}

TEST_CASE("identical invocations produce byte-identical files") {
    const fs::path dir = scratch_dir("determinism");
    const std::string base_cmd = "mass " + kPa100 + " --completion weak --out ";
    for (const std::string format : {"csv", "json"}) {
        const fs::path out1 = dir / ("m1." + format);
        const fs::path out2 = dir / ("m2." + format);
        REQUIRE(run_cli(base_cmd + out1.string() + " --format " + format)
                    .exit_code == 0);
        REQUIRE(run_cli(base_cmd + out2.string() + " --format " + format)
                    .exit_code == 0);
        CHECK(slurp(out1) == slurp(out2));
        CHECK(!slurp(out1).empty());
    }
}

TEST_CASE("mass tables round-trip through the csv reader") {
    const fs::path dir = scratch_dir("roundtrip");
    const fs::path out = dir / "m.csv";
    REQUIRE(run_cli("mass " + kPa100 + " --completion weak --out " +
                    out.string())
                .exit_code == 0);

    const fmd::MassFunction expected = fmd::invert_to_mass(
        fmd::build_predictive(fmd::PaNAssertion(100, 25, 60, 0.1, 0.7),
                              fmd::CompletionKind::Weak));
    const fmd::MassFunction got = fmd::cli::read_mass_csv(out.string());
    REQUIRE(got.events() == expected.events());
    for (int a = 0; a <= got.events(); ++a)
        CHECK(std::fabs(got.at(a) - expected.at(a)) < 1e-9);
}

TEST_CASE("log output round-trips through the csv reader") {
    const fs::path dir = scratch_dir("roundtrip_log");
    const fs::path out = dir / "mlog.csv";
    REQUIRE(run_cli("mass " + kPa100 + " --completion weak --log-output --out " +
                    out.string())
                .exit_code == 0);

    const fmd::MassFunction expected = fmd::invert_to_mass(
        fmd::build_predictive(fmd::PaNAssertion(100, 25, 60, 0.1, 0.7),
                              fmd::CompletionKind::Weak));
    const fmd::MassFunction got =
        fmd::cli::read_mass_csv(out.string(), /*log_input=*/true);
    REQUIRE(got.events() == expected.events());
    for (int a = 0; a <= got.events(); ++a)
        CHECK(std::fabs(got.at(a) - expected.at(a)) < 1e-9);
}

TEST_CASE("invalid inputs exit with status 2") {
    const fs::path dir = scratch_dir("errors");
    const fs::path out = dir / "x.csv";
    CHECK(run_cli("mass --N 100 --a1 25").exit_code == 2);
    CHECK(run_cli("bogusverb").exit_code == 2);
    CHECK(run_cli("preset nope --out-dir " + dir.string()).exit_code == 2);

    const auto bad_bound =
        run_cli("predict --N 100 --a1 25 --a2 60 --pL 0.9 --pU 0.7 --out " +
                out.string());
    CHECK(bad_bound.exit_code == 2);
    CHECK(bad_bound.output.find("pL") != std::string::npos);

    CHECK(run_cli("mass " + kPa100 + " --format yaml --out " + out.string())
              .exit_code == 2);
}

TEST_CASE("verify prints one summary line and exits 0 on pass") {
    const auto t3 = run_cli("verify theorem3 " + kPa100);
    CHECK(t3.exit_code == 0);
    CHECK(t3.output.find("theorem3:") == 0);
    CHECK(t3.output.find("PASS") != std::string::npos);

    const auto t1 = run_cli("verify theorem1 --N 100 --q0 0.2 --q1 0.005");
    CHECK(t1.exit_code == 0);
    CHECK(t1.output.find("PASS") != std::string::npos);

    CHECK(run_cli("verify theorem1 --N 100 --q0 0.2").exit_code == 2);
    CHECK(run_cli("verify theorem9 --N 100").exit_code == 2);
}

TEST_CASE("extend reports the interior mass both ways") {
    const fs::path dir = scratch_dir("extend");
    const fs::path out = dir / "e.csv";
    const auto r = run_cli("extend " + kPa100 +
                           " --completion linear --K 100 --pL-ext 0.05 "
                           "--pU-ext 0.9 --out " +
                           out.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("interior_mass direct=") != std::string::npos);
    CHECK(r.output.find("closed=") != std::string::npos);

    const auto table = fmd::cli::read_table_csv(out.string());
    CHECK(table.rows.size() == 202); // mass over 100+100+1 events
}

TEST_CASE("limit with a comparison N prints the sup distance") {
    const fs::path dir = scratch_dir("limit");
    const fs::path out = dir / "l.csv";
    const auto r = run_cli(
        "limit --theta1 0.2 --theta2 0.6 --n-events 101 --compare-N 100 "
        "--out " +
        out.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("sup_distance=0.7755003") != std::string::npos);
}

TEST_CASE("sensitivity names one output file per upper bound") {
    const fs::path dir = scratch_dir("sensitivity");
    const fs::path out = dir / "s.csv";
    const auto r = run_cli("sensitivity --N 100 --a1 25 --a2 60 --pL 0.1 "
                           "--pU-list 0.75,0.83 --completion weak --out " +
                           out.string());
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(dir / "s-pU0.75.csv"));
    CHECK(fs::exists(dir / "s-pU0.83.csv"));
    CHECK(fmd::cli::read_table_csv((dir / "s-pU0.75.csv").string())
              .rows.size() == 102);
}

TEST_CASE("preset fig1 writes one table per completion family") {
    const fs::path dir = scratch_dir("preset_fig1");
    const auto r = run_cli("preset fig1 --out-dir " + dir.string());
    REQUIRE(r.exit_code == 0);
    for (const std::string kind : {"linear", "quartic", "weak", "strict"}) {
        const fs::path file = dir / ("fig1-" + kind + ".csv");
        CHECK(fs::exists(file));
        CHECK(slurp(file).rfind(fmd::cli::kCsvHeader, 0) == 0);
    }
}

TEST_CASE("help exits cleanly") {
    const auto r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Subcommands") != std::string::npos);
}
