#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "gridfreq/cli.hpp"
#include "gridfreq/mix.hpp"
#include "gridfreq/report_io.hpp"
#include "gridfreq/scenario_io.hpp"

using namespace gridfreq;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("gridfreq_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string str(const std::string& sub = "") const {
        return sub.empty() ? path.string() : (path / sub).string();
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}

const std::string kScn = std::string(GRIDFREQ_DATA_DIR) + "/california-2021-02-28.scn";
const std::string kProfile = std::string(GRIDFREQ_DATA_DIR) + "/synthetic-day.profile";

} // namespace

TEST_CASE("run writes the documented artifacts") {
    TempDir dir;
    const auto res = cli({"run", "--scenario", kScn, "--out", dir.str()});
    CAPTURE(res.err);
    REQUIRE(res.code == kExitOk);

    const auto traj = lines_of(slurp(dir.path / "trajectory.csv"));
    REQUIRE(traj.size() == 6002); // header + horizon/dt + 1 samples
    CHECK(traj[0] == "t,f_hz,delta_f_pu,p_turbine_pu,p_ev_mw,triggered");

    const auto nadir = lines_of(slurp(dir.path / "nadir.csv"));
    REQUIRE(nadir.size() == 2);
    CHECK(nadir[0] == "nadir_hz,nadir_time_s,settling_time_s,steady_state_f_hz");
    const auto cells = split_csv(nadir[1]);
    REQUIRE(cells.size() == 4);
    CHECK(std::abs(std::stod(cells[3]) - 59.728) < 1e-3); // steady state
    CHECK(std::stod(cells[0]) < 59.7);

    // manifest is a valid scenario equal to the input
    CHECK(parse_scenario(dir.path / "manifest.json") == parse_scenario(kScn));
    CHECK_FALSE(fs::exists(dir.path / "trajectory.svg"));
}

TEST_CASE("run without a scenario uses the built-in defaults") {
    TempDir dir;
    const auto res = cli({"run", "--out", dir.str()});
    REQUIRE(res.code == kExitOk);
    CHECK(parse_scenario(dir.path / "manifest.json") == Scenario{});
}

TEST_CASE("repeated runs are byte-identical") {
    TempDir a, b;
    REQUIRE(cli({"run", "--scenario", kScn, "--out", a.str()}).code == kExitOk);
    REQUIRE(cli({"run", "--scenario", kScn, "--out", b.str()}).code == kExitOk);
    CHECK(slurp(a.path / "trajectory.csv") == slurp(b.path / "trajectory.csv"));
    CHECK(slurp(a.path / "nadir.csv") == slurp(b.path / "nadir.csv"));
    CHECK(slurp(a.path / "manifest.json") == slurp(b.path / "manifest.json"));
}

TEST_CASE("zero participation collapses to the no-fleet run") {
    TempDir none, zero;
    REQUIRE(cli({"run", "--out", none.str(), "--mode", "none"}).code == kExitOk);
    REQUIRE(cli({"run", "--out", zero.str(), "--mode", "v2g", "--participation", "0"}).code ==
            kExitOk);
    CHECK(slurp(none.path / "trajectory.csv") == slurp(zero.path / "trajectory.csv"));
}

TEST_CASE("mode override changes the response") {
    TempDir dir;
    REQUIRE(cli({"run", "--out", dir.str(), "--mode", "v2g"}).code == kExitOk);
    const auto manifest = parse_scenario(dir.path / "manifest.json");
    CHECK(manifest.fleet.mode == FleetMode::V2G);
    const auto nadir = lines_of(slurp(dir.path / "nadir.csv"));
    CHECK(std::stod(split_csv(nadir[1])[0]) > 59.6); // lifted well above baseline

    const auto bad = cli({"run", "--out", dir.str(), "--mode", "v5g"});
    CHECK(bad.code != kExitOk);
    CHECK(bad.err.find("v1g") != std::string::npos);
}

TEST_CASE("plot flag emits an svg rendering") {
    TempDir dir;
    REQUIRE(cli({"run", "--out", dir.str(), "--plot"}).code == kExitOk);
    const std::string svg = slurp(dir.path / "trajectory.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
}

TEST_CASE("sweep covers baseline plus both modes") {
    TempDir dir;
    const auto res = cli({"sweep", "--scenario", kScn, "--levels", "0.2,0.4,0.6,0.8,1.0",
                          "--out", dir.str()});
    REQUIRE(res.code == kExitOk);
    const auto rows = lines_of(slurp(dir.path / "sweep.csv"));
    REQUIRE(rows.size() == 12); // header + baseline + 5 x 2
    CHECK(rows[0] == "level,mode,nadir_hz,nadir_time_s,settling_time_s");
    CHECK(split_csv(rows[1])[1] == "none");
    for (size_t i = 2; i < rows.size(); i += 2) {
        const auto v1g = split_csv(rows[i]);
        const auto v2g = split_csv(rows[i + 1]);
        CHECK(v1g[1] == "v1g");
        CHECK(v2g[1] == "v2g");
        CHECK(v1g[0] == v2g[0]);
        CHECK(std::stod(v2g[2]) >= std::stod(v1g[2]));
    }
}

TEST_CASE("sweep level zero equals the baseline") {
    TempDir dir;
    REQUIRE(cli({"sweep", "--out", dir.str(), "--levels", "0"}).code == kExitOk);
    const auto rows = lines_of(slurp(dir.path / "sweep.csv"));
    REQUIRE(rows.size() == 4);
    const std::string baseline_nadir = split_csv(rows[1])[2];
    CHECK(split_csv(rows[2])[2] == baseline_nadir);
    CHECK(split_csv(rows[3])[2] == baseline_nadir);
}

TEST_CASE("malformed sweep levels are usage errors") {
    TempDir dir;
    const auto high = cli({"sweep", "--out", dir.str(), "--levels", "1.5"});
    CHECK(high.code == kExitUsage);
    CHECK(high.err.find("1.5") != std::string::npos);
    const auto text = cli({"sweep", "--out", dir.str(), "--levels", "0.2,abc"});
    CHECK(text.code == kExitUsage);
    CHECK_FALSE(fs::exists(dir.path / "sweep.csv"));
}

TEST_CASE("daily emits 96 rows over the synthetic profile") {
    TempDir dir;
    const auto res = cli({"daily", "--profile", kProfile, "--out", dir.str()});
    CAPTURE(res.err);
    REQUIRE(res.code == kExitOk);
    const auto rows = lines_of(slurp(dir.path / "daily.csv"));
    REQUIRE(rows.size() == 97);
    CHECK(rows[0] == "time,baseline_nadir_hz,v1g_nadir_hz,v2g_nadir_hz");
    CHECK(split_csv(rows[1])[0] == "00:00");
    CHECK(split_csv(rows[96])[0] == "23:45");
}

TEST_CASE("daily over a constant profile repeats the baseline") {
    TempDir dir;
    DailyProfile constant;
    for (int i = 0; i < 96; ++i) constant.entries.push_back({i * 15, default_generation_mix()});
    const std::string profile_path = dir.str("constant.profile");
    atomic_write_file(profile_path, serialize_daily_profile(constant));

    REQUIRE(cli({"daily", "--profile", profile_path, "--out", dir.str()}).code == kExitOk);
    const auto rows = lines_of(slurp(dir.path / "daily.csv"));
    REQUIRE(rows.size() == 97);
    const std::string baseline = split_csv(rows[1])[1];
    for (size_t i = 1; i < rows.size(); ++i) {
        CHECK(split_csv(rows[i])[1] == baseline);
    }
}

TEST_CASE("daily rejects malformed profiles with the actual count") {
    TempDir dir;
    DailyProfile short_profile;
    for (int i = 0; i < 40; ++i) short_profile.entries.push_back({i * 15, default_generation_mix()});
    const std::string p = dir.str("short.profile");
    atomic_write_file(p, serialize_daily_profile(short_profile));
    const auto res = cli({"daily", "--profile", p, "--out", dir.str()});
    CHECK(res.code != kExitOk);
    CHECK(res.err.find("40") != std::string::npos);
}

TEST_CASE("soc emits the per-minute series") {
    TempDir dir;
    REQUIRE(cli({"soc", "--strategy", "immediate", "--out", dir.str()}).code == kExitOk);
    const auto rows = lines_of(slurp(dir.path / "soc.csv"));
    REQUIRE(rows.size() == 1442); // header + minutes 0..1440
    CHECK(rows[0] == "minute,soc");
    CHECK(std::stod(split_csv(rows[1 + 1380])[1]) == 1.0); // full at 23:00
    CHECK(std::stod(split_csv(rows[1 + 1379])[1]) < 1.0);
    CHECK(std::stod(split_csv(rows[1 + 960])[1]) == 0.0); // empty at window start
}

TEST_CASE("unknown soc strategy lists the presets") {
    TempDir dir;
    const auto res = cli({"soc", "--strategy", "fast", "--out", dir.str()});
    CHECK(res.code != kExitOk);
    CHECK(res.err.find("immediate") != std::string::npos);
    CHECK(res.err.find("delayed") != std::string::npos);
    CHECK(res.err.find("constant") != std::string::npos);
}

TEST_CASE("validate reports resolved quantities or violations") {
    const auto ok = cli({"validate", "--scenario", kScn});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("19830") != std::string::npos);

    TempDir dir;
    const std::string bad = dir.str("bad.scn");
    atomic_write_file(bad, R"({"simulation": {"dt": 0}})");
    const auto res = cli({"validate", "--scenario", bad});
    CHECK(res.code != kExitOk);
    CHECK(res.err.find("simulation.dt") != std::string::npos);
    CHECK(lines_of(res.err).size() == 1); // single-line diagnostic
}

TEST_CASE("output directory resolution") {
    const auto missing = cli({"run"});
    CHECK(missing.code != kExitOk);
    CHECK(missing.err.find("--out") != std::string::npos);

    TempDir dir;
    ::setenv("GRIDFREQ_OUT", dir.str("from_env").c_str(), 1);
    const auto res = cli({"run"});
    ::unsetenv("GRIDFREQ_OUT");
    REQUIRE(res.code == kExitOk);
    CHECK(fs::exists(dir.path / "from_env" / "trajectory.csv"));
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
    CHECK(cli({"daily"}).code == kExitUsage); // --profile required
}
