#pragma once

#include <optional>
#include <vector>

namespace gridfreq {

enum class StrategyKind { Immediate, Delayed, ConstantMinimum };

/// Daily charging schedule: constant per-vehicle power inside a half-open
/// time-of-day window [start, end) that may wrap past midnight.
struct ChargingStrategy {
    StrategyKind kind = StrategyKind::Immediate;
    double charge_power_kw = 100.0;
    int window_start_min = 16 * 60; ///< minutes from midnight, [0, 1440)
    int window_end_min = 23 * 60;

    /// 100 kW, 16:00-23:00
    static ChargingStrategy immediate();
    /// 100 kW, 23:00-06:00
    static ChargingStrategy delayed();
    /// 50 kW, 16:00-06:00
    static ChargingStrategy constant_minimum();

    /// Window length in minutes, wrap-aware. start == end is invalid.
    int window_duration_min() const;

    bool operator==(const ChargingStrategy&) const = default;
};

struct BatteryConfig {
    double capacity_kwh = 700.0;
    double initial_soc = 0.0;        ///< fraction in [0, 1]
    double charge_efficiency = 1.0;  ///< fraction in (0, 1]

    bool operator==(const BatteryConfig&) const = default;
};

enum class FleetMode { None, V1G, V2G };

/// Aggregated homogeneous heavy-duty EV fleet.
struct FleetConfig {
    int vehicle_count = 5000;
    ChargingStrategy strategy = ChargingStrategy::immediate();
    BatteryConfig battery{};
    FleetMode mode = FleetMode::None;
    double participation = 1.0;           ///< fraction of fleet enrolled, [0, 1]
    double v2g_discharge_power_kw = 100.0; ///< per-vehicle injection rating
    double actuation_lag_s = 0.1;          ///< first-order response lag (0 = step)

    bool operator==(const FleetConfig&) const = default;
};

/// Latched grid-event signal. trigger_time_s is present iff triggered.
struct FleetSignal {
    bool triggered = false;
    std::optional<double> trigger_time_s{};

    bool operator==(const FleetSignal&) const = default;
};

/// Scheduled per-vehicle charging power (kW) at a time of day in minutes.
/// charge_power inside the window, 0 outside; windows wrapping midnight
/// are handled (23:00-06:00 contains 02:00). Pure schedule, no SOC.
double charging_power_per_vehicle(const ChargingStrategy& strategy, double time_of_day_min);

/// Live state of charge of the fleet archetype at a time of day, measured
/// session-relative: charging accumulates from the most recent window
/// start (wrap-aware), so a battery that fills mid-session stays full for
/// the rest of the window, including past midnight.
double session_soc(const ChargingStrategy& strategy, const BatteryConfig& battery,
                   double time_of_day_min);

/// Aggregate fleet charging load in MW: vehicle_count x per-vehicle power,
/// zeroed once the archetype battery reaches SOC 1.0.
double fleet_load(const FleetConfig& fleet, double time_of_day_min);

/// Daily SOC series for one charging session, sampled every
/// `resolution_min` minutes from 00:00 to 24:00 inclusive
/// (1440/resolution + 1 values). The session is anchored at the window
/// start: the series holds initial_soc before the window opens, rises
/// monotonically inside it (clipped at 1.0), and a window wrapping past
/// midnight keeps rising to the end of the day. resolution_min must
/// divide 1440; capacity must be positive.
std::vector<double> soc_trajectory(const ChargingStrategy& strategy,
                                   const BatteryConfig& battery, int resolution_min);

/// Positive power relief delivered to the grid (MW) after a grid event:
///   - not triggered, or mode None: 0
///   - V1G: participation x current fleet charging load (shed)
///   - V2G: participation x (load + vehicle_count x v2g rating), the
///     injection term gated on being inside the strategy window
/// scaled by the first-order actuation factor 1 - exp(-elapsed/lag)
/// (factor 1 when the lag is 0).
double fleet_response_power(const FleetConfig& fleet, const FleetSignal& signal,
                            double time_of_day_min, double elapsed_since_trigger_s);

} // namespace gridfreq
