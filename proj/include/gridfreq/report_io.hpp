#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gridfreq/engine.hpp"
#include "gridfreq/scenario.hpp"

namespace gridfreq {

/// Shortest round-trip decimal rendering of a double (std::to_chars).
/// Deterministic: the same value always renders to the same bytes.
std::string format_double(double v);

/// Write a file atomically: the content lands under a temporary name in
/// the same directory and is renamed into place.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

// CSV renderers. Headers are fixed; see README for column semantics.
std::string trajectory_csv(const Trajectory& traj);                 // t,f_hz,delta_f_pu,p_turbine_pu,p_ev_mw,triggered
std::string nadir_csv(const NadirReport& report);                   // nadir_hz,nadir_time_s,settling_time_s,steady_state_f_hz
std::string sweep_csv(const ParticipationSweep& sweep);             // level,mode,nadir_hz,nadir_time_s,settling_time_s
std::string daily_csv(const std::vector<DailyRow>& rows);           // time,baseline_nadir_hz,v1g_nadir_hz,v2g_nadir_hz
std::string soc_csv(const std::vector<double>& soc_per_minute);     // minute,soc

/// Minimal SVG frequency plot, a pure rendering of the trajectory.
std::string trajectory_svg(const Trajectory& traj);

} // namespace gridfreq
