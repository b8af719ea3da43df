#pragma once

#include <span>
#include <vector>

#include "gridfreq/batch.hpp"
#include "gridfreq/scenario.hpp"

namespace gridfreq {

/// Settling band used by the command-line reports, Hz about the final value.
inline constexpr double kDefaultSettlingBandHz = 0.02;

/// Latched under-frequency detector: once triggered the signal never
/// releases. Triggers at the first sample where f is strictly below the
/// threshold; f exactly at the threshold does not trigger.
FleetSignal detect_event(double f_hz, double threshold_hz, FleetSignal signal, double t_s);

/// Fixed-step RK4 time-domain run of one scenario. Per step: the
/// disturbance is applied as a step, the trigger is evaluated on the
/// latest frequency, and the fleet response is latched and held constant
/// across the RK4 sub-stages (zero-order hold). Throws ValidationError
/// for an invalid scenario and NumericError (with the step time) on
/// divergence.
Trajectory simulate(const Scenario& scenario);

/// Nadir, time of first minimum, settling time into +/-band_hz about the
/// final sample, and the final sample itself. Throws on an empty
/// trajectory.
NadirReport nadir_report(const Trajectory& traj, double band_hz);

struct ParticipationPoint {
    double level = 0.0;
    FleetMode mode = FleetMode::None;
    NadirReport report{};
};

struct ParticipationSweep {
    NadirReport baseline{}; ///< same scenario with the fleet inert
    std::vector<ParticipationPoint> points; ///< per level: V1G then V2G
};

/// One run per (level, mode) over both V1G and V2G with all else fixed,
/// plus the no-fleet baseline. Levels must lie in [0, 1]; results follow
/// input order.
ParticipationSweep sweep_participation(const Scenario& scenario,
                                       std::span<const double> levels,
                                       Backend backend = Backend::Auto);

struct DailyRow {
    int time_of_day_min = 0;
    double baseline_nadir_hz = 0.0;
    double v1g_nadir_hz = 0.0;
    double v2g_nadir_hz = 0.0;
};

/// For each of the 96 profile entries, rebuild the template scenario with
/// that entry's mix (effective inertia is recomputed, so any h_override in
/// the template is ignored) and time of day, then run baseline, V1G and
/// V2G simulations. The disturbance stays fixed across the day.
std::vector<DailyRow> daily_sweep(const DailyProfile& profile, const Scenario& tmpl,
                                  Backend backend = Backend::Auto);

} // namespace gridfreq
