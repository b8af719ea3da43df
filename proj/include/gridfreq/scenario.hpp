#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridfreq/dynamics.hpp"
#include "gridfreq/fleet.hpp"
#include "gridfreq/mix.hpp"

namespace gridfreq {

/// Full simulation input. Defaults reproduce the calibrated reference
/// case: the shipped California mix, a 1,800 MW loss at t = 0, the
/// 59.7 Hz trigger, and a 60 s / 10 ms integration window anchored at
/// 20:00.
struct Scenario {
    GenerationMix mix = default_generation_mix();
    std::optional<double> h_override_s{}; ///< absent: derive from the mix
    GovernorParams governor{};
    FleetConfig fleet{};
    Disturbance disturbance{};
    double trigger_threshold_hz = 59.7;
    int sim_time_of_day_min = 20 * 60; ///< anchors fleet schedules
    double horizon_s = 60.0;
    double dt_s = 0.01;

    /// Effective inertia actually used: the override when present,
    /// otherwise the output-weighted mix average.
    double resolved_h_s() const;

    /// All constraint violations, formatted as "<field path>: problem"
    /// using the scenario-file key names (e.g. "simulation.dt").
    /// Empty means valid.
    std::vector<std::string> validate() const;

    bool operator==(const Scenario&) const = default;
};

struct TrajectorySample {
    double t_s = 0.0;
    double f_hz = 0.0;
    double delta_f_pu = 0.0;
    double p_turbine_pu = 0.0;
    double p_ev_mw = 0.0;
    bool triggered = false;

    bool operator==(const TrajectorySample&) const = default;
};

/// Time-indexed record of one simulation: samples at t = 0, dt, ..., horizon
/// with f_hz = 60 * (1 + delta_f_pu) at every sample.
struct Trajectory {
    std::vector<TrajectorySample> samples;

    bool operator==(const Trajectory&) const = default;
};

/// Summary frequency metrics of a trajectory.
struct NadirReport {
    double nadir_hz = 0.0;
    double nadir_time_s = 0.0;
    std::optional<double> settling_time_s{}; ///< first entry into the band that holds
    double steady_state_f_hz = 0.0;          ///< final sample

    bool operator==(const NadirReport&) const = default;
};

/// One 15-minute slot of a daily generation profile.
struct DailyEntry {
    int time_of_day_min = 0;
    GenerationMix mix;

    bool operator==(const DailyEntry&) const = default;
};

/// 96 slots covering 24 h at 15-minute resolution.
struct DailyProfile {
    std::vector<DailyEntry> entries;

    bool operator==(const DailyProfile&) const = default;
};

inline constexpr int kDailyProfileEntries = 96;

} // namespace gridfreq
