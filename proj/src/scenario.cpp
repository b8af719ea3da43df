#include "gridfreq/scenario.hpp"

#include <cmath>
#include <string>

namespace gridfreq {

double Scenario::resolved_h_s() const {
    return h_override_s ? *h_override_s : effective_inertia(mix);
}

namespace {

void check_time_of_day(std::vector<std::string>& v, const std::string& path, int minutes) {
    if (minutes < 0 || minutes >= 1440) {
        v.push_back(path + ": time of day must lie in [00:00, 24:00)");
    }
}

} // namespace

std::vector<std::string> Scenario::validate() const {
    std::vector<std::string> v;

    if (mix.sources.empty()) {
        v.push_back("mix.sources: at least one generation source is required");
    }
    for (size_t i = 0; i < mix.sources.size(); ++i) {
        const auto& s = mix.sources[i];
        const std::string p = "mix.sources[" + std::to_string(i) + "]";
        if (!(s.inertia_constant >= 0.0) || !std::isfinite(s.inertia_constant)) {
            v.push_back(p + ".inertia_constant: must be finite and >= 0");
        }
        if (!(s.power_output >= 0.0) || !std::isfinite(s.power_output)) {
            v.push_back(p + ".power_output: must be finite and >= 0");
        }
    }
    if (!mix.sources.empty() && !(mix.base_power_mw() > 0.0)) {
        v.push_back("mix.sources: total power output must be positive");
    }

    if (h_override_s && !(*h_override_s > 0.0 && std::isfinite(*h_override_s))) {
        v.push_back("h_override: must be finite and positive");
    }

    if (governor.droop_enabled && !(governor.droop_r > 0.0 && std::isfinite(governor.droop_r))) {
        v.push_back("governor.droop_r: must be positive when droop is enabled");
    }
    if (!(governor.t_governor >= 0.0) || !std::isfinite(governor.t_governor)) {
        v.push_back("governor.t_governor: must be finite and >= 0");
    }
    if (!(governor.t_turbine >= 0.0) || !std::isfinite(governor.t_turbine)) {
        v.push_back("governor.t_turbine: must be finite and >= 0");
    }
    if (!(governor.damping_d >= 0.0) || !std::isfinite(governor.damping_d)) {
        v.push_back("governor.damping_d: must be finite and >= 0");
    }

    if (fleet.vehicle_count < 0) {
        v.push_back("fleet.vehicle_count: must be >= 0");
    }
    if (!(fleet.strategy.charge_power_kw > 0.0) || !std::isfinite(fleet.strategy.charge_power_kw)) {
        v.push_back("fleet.strategy.charge_power: must be positive");
    }
    check_time_of_day(v, "fleet.strategy.window_start", fleet.strategy.window_start_min);
    check_time_of_day(v, "fleet.strategy.window_end", fleet.strategy.window_end_min);
    if (fleet.strategy.window_start_min == fleet.strategy.window_end_min) {
        v.push_back("fleet.strategy.window_end: window must have positive duration");
    }
    if (!(fleet.battery.capacity_kwh > 0.0) || !std::isfinite(fleet.battery.capacity_kwh)) {
        v.push_back("fleet.battery.capacity: must be positive");
    }
    if (!(fleet.battery.initial_soc >= 0.0 && fleet.battery.initial_soc <= 1.0)) {
        v.push_back("fleet.battery.initial_soc: must lie in [0, 1]");
    }
    if (!(fleet.battery.charge_efficiency > 0.0 && fleet.battery.charge_efficiency <= 1.0)) {
        v.push_back("fleet.battery.charge_efficiency: must lie in (0, 1]");
    }
    if (!(fleet.participation >= 0.0 && fleet.participation <= 1.0)) {
        v.push_back("fleet.participation: must lie in [0, 1]");
    }
    if (!(fleet.v2g_discharge_power_kw >= 0.0) || !std::isfinite(fleet.v2g_discharge_power_kw)) {
        v.push_back("fleet.v2g_discharge_power: must be finite and >= 0");
    }
    if (!(fleet.actuation_lag_s >= 0.0) || !std::isfinite(fleet.actuation_lag_s)) {
        v.push_back("fleet.actuation_lag: must be finite and >= 0");
    }

    if (!std::isfinite(disturbance.magnitude_mw)) {
        v.push_back("disturbance.magnitude: must be finite");
    }
    if (!(disturbance.apply_time_s >= 0.0) || !std::isfinite(disturbance.apply_time_s)) {
        v.push_back("disturbance.apply_time: must be finite and >= 0");
    }

    if (!(trigger_threshold_hz < 60.0) || !std::isfinite(trigger_threshold_hz)) {
        v.push_back("simulation.trigger_threshold: must be below the 60 Hz nominal");
    }
    check_time_of_day(v, "simulation.time_of_day", sim_time_of_day_min);
    if (!(dt_s > 0.0) || !std::isfinite(dt_s)) {
        v.push_back("simulation.dt: must be positive");
    }
    if (!(horizon_s >= dt_s) || !std::isfinite(horizon_s)) {
        v.push_back("simulation.horizon: must be at least one time step");
    }

    return v;
}

} // namespace gridfreq
