#include "gridfreq/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gridfreq/engine.hpp"
#include "gridfreq/errors.hpp"
#include "gridfreq/report_io.hpp"
#include "gridfreq/scenario_io.hpp"

namespace gridfreq {

namespace {

namespace fs = std::filesystem;

// --out wins; GRIDFREQ_OUT fills in when the flag is absent.
fs::path resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("GRIDFREQ_OUT"); env && *env) return env;
    throw ValidationError({"--out: output directory required (or set GRIDFREQ_OUT)"});
}

fs::path prepare_out_dir(const std::string& flag_value) {
    const fs::path dir = resolve_out_dir(flag_value);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ParseError("cannot create output directory '" + dir.string() + "': " +
                             ec.message());
    return dir;
}

Scenario load_scenario(const std::string& path) {
    return path.empty() ? Scenario{} : parse_scenario(path);
}

FleetMode mode_from_flag(const std::string& v) {
    if (v == "none") return FleetMode::None;
    if (v == "v1g") return FleetMode::V1G;
    if (v == "v2g") return FleetMode::V2G;
    throw ValidationError({"--mode: expected none, v1g or v2g"});
}

std::vector<double> parse_levels(const std::string& csv) {
    std::vector<double> levels;
    std::vector<std::string> errs;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            const double v = std::stod(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            if (!(v >= 0.0 && v <= 1.0)) {
                errs.push_back("--levels: '" + item + "' must lie in [0, 1]");
                continue;
            }
            levels.push_back(v);
        } catch (const std::exception&) {
            errs.push_back("--levels: '" + item + "' is not a number");
        }
    }
    if (levels.empty() && errs.empty()) errs.push_back("--levels: empty list");
    if (!errs.empty()) throw ValidationError(std::move(errs));
    return levels;
}

int cmd_run(const std::string& scenario_path, const std::string& out_flag,
            const std::string& mode_flag, std::optional<double> participation, bool plot,
            std::ostream& out) {
    Scenario sc = load_scenario(scenario_path);
    if (!mode_flag.empty()) sc.fleet.mode = mode_from_flag(mode_flag);
    if (participation) sc.fleet.participation = *participation;

    const fs::path dir = prepare_out_dir(out_flag);
    const Trajectory traj = simulate(sc);
    const NadirReport report = nadir_report(traj, kDefaultSettlingBandHz);

    atomic_write_file(dir / "trajectory.csv", trajectory_csv(traj));
    atomic_write_file(dir / "nadir.csv", nadir_csv(report));
    atomic_write_file(dir / "manifest.json", serialize_scenario(sc));
    if (plot) atomic_write_file(dir / "trajectory.svg", trajectory_svg(traj));

    out << "run: " << traj.samples.size() << " samples, nadir "
        << format_double(report.nadir_hz) << " Hz at " << format_double(report.nadir_time_s)
        << " s, final " << format_double(report.steady_state_f_hz) << " Hz -> " << dir.string()
        << "\n";
    return kExitOk;
}

int cmd_sweep(const std::string& scenario_path, const std::string& out_flag,
              const std::string& levels_csv, std::ostream& out) {
    const Scenario sc = load_scenario(scenario_path);
    const std::vector<double> levels = parse_levels(levels_csv);

    const fs::path dir = prepare_out_dir(out_flag);
    const ParticipationSweep sweep = sweep_participation(sc, levels);

    atomic_write_file(dir / "sweep.csv", sweep_csv(sweep));
    atomic_write_file(dir / "manifest.json", serialize_scenario(sc));

    out << "sweep: " << (1 + sweep.points.size()) << " rows (baseline + " << levels.size()
        << " levels x 2 modes) -> " << dir.string() << "\n";
    return kExitOk;
}

int cmd_daily(const std::string& profile_path, const std::string& scenario_path,
              const std::string& out_flag, std::ostream& out) {
    const DailyProfile profile = parse_daily_profile(profile_path);
    const Scenario tmpl = load_scenario(scenario_path);

    const fs::path dir = prepare_out_dir(out_flag);
    const std::vector<DailyRow> rows = daily_sweep(profile, tmpl);

    atomic_write_file(dir / "daily.csv", daily_csv(rows));
    atomic_write_file(dir / "manifest.json", serialize_scenario(tmpl));

    out << "daily: " << rows.size() << " rows -> " << dir.string() << "\n";
    return kExitOk;
}

int cmd_soc(const std::string& strategy_name, const std::string& out_flag, std::ostream& out) {
    ChargingStrategy strategy;
    if (strategy_name == "immediate") {
        strategy = ChargingStrategy::immediate();
    } else if (strategy_name == "delayed") {
        strategy = ChargingStrategy::delayed();
    } else if (strategy_name == "constant") {
        strategy = ChargingStrategy::constant_minimum();
    } else {
        throw ValidationError({"--strategy: unknown strategy '" + strategy_name +
                               "' (expected immediate, delayed, constant)"});
    }

    const fs::path dir = prepare_out_dir(out_flag);
    const std::vector<double> soc = soc_trajectory(strategy, BatteryConfig{}, 1);
    atomic_write_file(dir / "soc.csv", soc_csv(soc));

    out << "soc: " << soc.size() << " rows (" << strategy_name << ") -> " << dir.string()
        << "\n";
    return kExitOk;
}

int cmd_validate(const std::string& scenario_path, std::ostream& out) {
    const Scenario sc = parse_scenario(scenario_path);
    out << "ok: " << scenario_path << " (base " << format_double(sc.mix.base_power_mw())
        << " MW, H " << format_double(sc.resolved_h_s()) << " s, "
        << format_double(sc.horizon_s / sc.dt_s) << " steps)\n";
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Primary frequency response simulator for an EV fleet on a low-inertia grid"};
    app.require_subcommand(1);

    std::string scenario_path, profile_path, out_flag, mode_flag, levels_csv, strategy_name;
    std::optional<double> participation;
    bool plot = false;

    auto* run = app.add_subcommand("run", "Simulate one scenario and write trajectory CSVs");
    run->add_option("--scenario", scenario_path, "Scenario file (defaults apply when omitted)");
    run->add_option("--out", out_flag, "Output directory");
    run->add_option("--mode", mode_flag, "Override fleet mode: none|v1g|v2g");
    run->add_option("--participation", participation, "Override participation in [0,1]");
    run->add_flag("--plot", plot, "Also write trajectory.svg");

    auto* sweep = app.add_subcommand("sweep", "Participation sweep over V1G and V2G");
    sweep->add_option("--scenario", scenario_path, "Scenario file");
    sweep->add_option("--levels", levels_csv, "Comma-separated participation levels")
        ->default_val("0.2,0.4,0.6,0.8,1.0");
    sweep->add_option("--out", out_flag, "Output directory");

    auto* daily = app.add_subcommand("daily", "Nadir sweep over a 96-entry daily profile");
    daily->add_option("--profile", profile_path, "Daily profile file")->required();
    daily->add_option("--scenario", scenario_path, "Template scenario file");
    daily->add_option("--out", out_flag, "Output directory");

    auto* soc = app.add_subcommand("soc", "Per-minute SOC series for a charging preset");
    soc->add_option("--strategy", strategy_name, "immediate|delayed|constant")->required();
    soc->add_option("--out", out_flag, "Output directory");

    auto* validate = app.add_subcommand("validate", "Parse and validate a scenario file");
    validate->add_option("--scenario", scenario_path, "Scenario file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            return cmd_run(scenario_path, out_flag, mode_flag, participation, plot, out);
        }
        if (sweep->parsed()) return cmd_sweep(scenario_path, out_flag, levels_csv, out);
        if (daily->parsed()) return cmd_daily(profile_path, scenario_path, out_flag, out);
        if (soc->parsed()) return cmd_soc(strategy_name, out_flag, out);
        if (validate->parsed()) return cmd_validate(scenario_path, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return e.violations().size() == 1 && e.violations()[0].rfind("--", 0) == 0 ? kExitUsage
                                                                                   : kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace gridfreq
