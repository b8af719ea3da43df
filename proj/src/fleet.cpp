#include "gridfreq/fleet.hpp"

#include <algorithm>
#include <cmath>

#include "gridfreq/errors.hpp"

namespace gridfreq {

ChargingStrategy ChargingStrategy::immediate() {
    return {StrategyKind::Immediate, 100.0, 16 * 60, 23 * 60};
}
ChargingStrategy ChargingStrategy::delayed() {
    return {StrategyKind::Delayed, 100.0, 23 * 60, 6 * 60};
}
ChargingStrategy ChargingStrategy::constant_minimum() {
    return {StrategyKind::ConstantMinimum, 50.0, 16 * 60, 6 * 60};
}

int ChargingStrategy::window_duration_min() const {
    int d = window_end_min - window_start_min;
    if (d <= 0) d += 24 * 60;
    return d;
}

namespace {

// Minutes since the most recent window start, in [0, 1440).
double minutes_since_window_start(const ChargingStrategy& st, double tod_min) {
    double rel = tod_min - static_cast<double>(st.window_start_min);
    if (rel < 0.0) rel += 1440.0;
    return rel;
}

} // namespace

double charging_power_per_vehicle(const ChargingStrategy& strategy, double time_of_day_min) {
    const double rel = minutes_since_window_start(strategy, time_of_day_min);
    return rel < strategy.window_duration_min() ? strategy.charge_power_kw : 0.0;
}

double session_soc(const ChargingStrategy& strategy, const BatteryConfig& battery,
                   double time_of_day_min) {
    if (battery.capacity_kwh <= 0.0) {
        throw ValidationError({"fleet.battery.capacity: must be positive"});
    }
    const double rel = minutes_since_window_start(strategy, time_of_day_min);
    const double charged_min = std::min(rel, static_cast<double>(strategy.window_duration_min()));
    const double energy_kwh =
        strategy.charge_power_kw * battery.charge_efficiency * (charged_min / 60.0);
    return std::min(1.0, battery.initial_soc + energy_kwh / battery.capacity_kwh);
}

double fleet_load(const FleetConfig& fleet, double time_of_day_min) {
    const double per_vehicle_kw = charging_power_per_vehicle(fleet.strategy, time_of_day_min);
    if (per_vehicle_kw == 0.0) return 0.0;
    if (session_soc(fleet.strategy, fleet.battery, time_of_day_min) >= 1.0) return 0.0;
    return fleet.vehicle_count * per_vehicle_kw / 1000.0;
}

std::vector<double> soc_trajectory(const ChargingStrategy& strategy,
                                   const BatteryConfig& battery, int resolution_min) {
    if (battery.capacity_kwh <= 0.0) {
        throw ValidationError({"fleet.battery.capacity: must be positive"});
    }
    if (resolution_min <= 0 || 1440 % resolution_min != 0) {
        throw ValidationError({"resolution: must be a positive divisor of 1440 minutes"});
    }
    // Session anchored at the window start: the tail of a window that
    // wrapped in from the previous day does not charge in this view.
    // Power is constant inside the window, so each grid point gets the
    // exact cumulative value (a running sum would drift off the exact
    // full-at-window-end point by a few ulp).
    const double start = strategy.window_start_min;
    const double visible_end = std::min(start + strategy.window_duration_min(), 1440.0);
    const int n = 1440 / resolution_min;
    std::vector<double> soc(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) * resolution_min;
        const double charged_min = std::clamp(t - start, 0.0, visible_end - start);
        const double energy_kwh =
            strategy.charge_power_kw * battery.charge_efficiency * (charged_min / 60.0);
        soc[static_cast<size_t>(i)] =
            std::min(1.0, battery.initial_soc + energy_kwh / battery.capacity_kwh);
    }
    return soc;
}

double fleet_response_power(const FleetConfig& fleet, const FleetSignal& signal,
                            double time_of_day_min, double elapsed_since_trigger_s) {
    if (!signal.triggered || fleet.mode == FleetMode::None) return 0.0;
    const double shed_mw = fleet_load(fleet, time_of_day_min);
    double inject_mw = 0.0;
    if (fleet.mode == FleetMode::V2G &&
        charging_power_per_vehicle(fleet.strategy, time_of_day_min) > 0.0) {
        inject_mw = fleet.vehicle_count * fleet.v2g_discharge_power_kw / 1000.0;
    }
    const double raw = fleet.participation * (shed_mw + inject_mw);
    const double lag_factor = fleet.actuation_lag_s == 0.0
                                  ? 1.0
                                  : 1.0 - std::exp(-elapsed_since_trigger_s / fleet.actuation_lag_s);
    return raw * lag_factor;
}

} // namespace gridfreq
