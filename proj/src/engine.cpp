#include "gridfreq/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "engine_detail.hpp"
#include "gridfreq/errors.hpp"

namespace gridfreq {

namespace detail {

LaneSetup make_lane_setup(const Scenario& sc) {
    if (auto violations = sc.validate(); !violations.empty()) {
        throw ValidationError(std::move(violations));
    }
    LaneSetup su;
    su.kp = make_kernel_params(sc.governor, sc.resolved_h_s());
    su.dt = sc.dt_s;
    su.steps = std::lround(sc.horizon_s / sc.dt_s);
    su.s_base_mw = sc.mix.base_power_mw();
    su.loss_mw = sc.disturbance.magnitude_mw;
    su.apply_time_s = sc.disturbance.apply_time_s;
    su.threshold_hz = sc.trigger_threshold_hz;
    su.tod0_min = static_cast<double>(sc.sim_time_of_day_min);
    su.fleet = &sc.fleet;
    return su;
}

// Reference lane driver; the batch backends reproduce this loop shape
// exactly, so every path yields bit-identical trajectories.
Trajectory run_lane(const LaneSetup& su) {
    Trajectory traj;
    traj.samples.reserve(static_cast<size_t>(su.steps) + 1);

    KState s{};
    FleetSignal sig{};
    for (long k = 0; k <= su.steps; ++k) {
        const double t = static_cast<double>(k) * su.dt;
        const auto step = lane_step_control(su, s, t, sig);
        traj.samples.push_back(make_sample(su, s, t, step, sig.triggered));
        if (k == su.steps) break;
        s = k_rk4(su.kp, s, su.dt, step.net_pu);
        if (!k_finite(s)) {
            throw NumericError("simulation diverged to a non-finite state", t + su.dt);
        }
    }
    return traj;
}

} // namespace detail

FleetSignal detect_event(double f_hz, double threshold_hz, FleetSignal signal, double t_s) {
    if (signal.triggered) return signal; // latched for the rest of the run
    if (f_hz < threshold_hz) {
        signal.triggered = true;
        signal.trigger_time_s = t_s;
    }
    return signal;
}

Trajectory simulate(const Scenario& scenario) {
    return detail::run_lane(detail::make_lane_setup(scenario));
}

NadirReport nadir_report(const Trajectory& traj, double band_hz) {
    if (traj.samples.empty()) throw ValidationError({"trajectory: empty"});

    NadirReport rep;
    rep.nadir_hz = traj.samples.front().f_hz;
    rep.nadir_time_s = traj.samples.front().t_s;
    for (const auto& s : traj.samples) {
        if (s.f_hz < rep.nadir_hz) { // first minimum wins ties
            rep.nadir_hz = s.f_hz;
            rep.nadir_time_s = s.t_s;
        }
    }
    rep.steady_state_f_hz = traj.samples.back().f_hz;

    // Earliest sample from which the whole suffix stays inside the band.
    size_t k = traj.samples.size() - 1;
    for (size_t i = traj.samples.size(); i-- > 0;) {
        if (std::abs(traj.samples[i].f_hz - rep.steady_state_f_hz) <= band_hz) {
            k = i;
        } else {
            break;
        }
    }
    rep.settling_time_s = traj.samples[k].t_s;
    return rep;
}

ParticipationSweep sweep_participation(const Scenario& scenario,
                                       std::span<const double> levels, Backend backend) {
    std::vector<std::string> violations;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (!(levels[i] >= 0.0 && levels[i] <= 1.0)) {
            violations.push_back("levels[" + std::to_string(i) + "]: must lie in [0, 1]");
        }
    }
    if (!violations.empty()) throw ValidationError(std::move(violations));

    std::vector<Scenario> lanes;
    lanes.reserve(1 + 2 * levels.size());
    Scenario base = scenario;
    base.fleet.mode = FleetMode::None;
    lanes.push_back(base);
    for (double level : levels) {
        for (FleetMode mode : {FleetMode::V1G, FleetMode::V2G}) {
            Scenario sc = scenario;
            sc.fleet.mode = mode;
            sc.fleet.participation = level;
            lanes.push_back(std::move(sc));
        }
    }

    const auto trajs = simulate_batch(lanes, backend);

    ParticipationSweep sweep;
    sweep.baseline = nadir_report(trajs[0], kDefaultSettlingBandHz);
    sweep.points.reserve(2 * levels.size());
    size_t lane = 1;
    for (double level : levels) {
        for (FleetMode mode : {FleetMode::V1G, FleetMode::V2G}) {
            sweep.points.push_back(
                {level, mode, nadir_report(trajs[lane], kDefaultSettlingBandHz)});
            ++lane;
        }
    }
    return sweep;
}

std::vector<DailyRow> daily_sweep(const DailyProfile& profile, const Scenario& tmpl,
                                  Backend backend) {
    if (profile.entries.size() != kDailyProfileEntries) {
        throw ValidationError({"profile.entries: has " + std::to_string(profile.entries.size()) +
                               " entries, expected " + std::to_string(kDailyProfileEntries)});
    }

    std::vector<Scenario> lanes;
    lanes.reserve(profile.entries.size() * 3);
    for (const auto& entry : profile.entries) {
        Scenario sc = tmpl;
        sc.mix = entry.mix;
        sc.h_override_s.reset(); // per-entry inertia always derives from the entry's mix
        sc.sim_time_of_day_min = entry.time_of_day_min;
        for (FleetMode mode : {FleetMode::None, FleetMode::V1G, FleetMode::V2G}) {
            sc.fleet.mode = mode;
            lanes.push_back(sc);
        }
    }

    const auto trajs = simulate_batch(lanes, backend);

    std::vector<DailyRow> rows;
    rows.reserve(profile.entries.size());
    for (size_t i = 0; i < profile.entries.size(); ++i) {
        DailyRow row;
        row.time_of_day_min = profile.entries[i].time_of_day_min;
        row.baseline_nadir_hz = nadir_report(trajs[3 * i + 0], kDefaultSettlingBandHz).nadir_hz;
        row.v1g_nadir_hz = nadir_report(trajs[3 * i + 1], kDefaultSettlingBandHz).nadir_hz;
        row.v2g_nadir_hz = nadir_report(trajs[3 * i + 2], kDefaultSettlingBandHz).nadir_hz;
        rows.push_back(row);
    }
    return rows;
}

} // namespace gridfreq
