#pragma once

#include <filesystem>
#include <string>

#include "gridfreq/scenario.hpp"

namespace gridfreq {

/// Parse a scenario file (JSON; see README for the schema). Unspecified
/// fields take the documented defaults; an empty file yields the pure
/// default scenario. Unknown keys are rejected with their full path, and
/// constraint violations are reported all at once. Throws ParseError for
/// file/syntax problems (with line and column) and ValidationError for
/// constraint violations.
Scenario parse_scenario(const std::filesystem::path& path);

/// Same, from an in-memory document. `origin` labels error messages.
Scenario parse_scenario_text(const std::string& text, const std::string& origin = "<input>");

/// Serialize a scenario with every field explicit (the run manifest).
/// parse(serialize(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

/// Parse a 96-entry daily generation profile (JSON; see README).
/// Throws ParseError or ValidationError; a wrong entry count reports the
/// actual count.
DailyProfile parse_daily_profile(const std::filesystem::path& path);

DailyProfile parse_daily_profile_text(const std::string& text,
                                      const std::string& origin = "<input>");

std::string serialize_daily_profile(const DailyProfile& profile);

/// "HH:MM" <-> minutes from midnight, used throughout the file formats.
int parse_time_of_day(const std::string& hhmm);
std::string format_time_of_day(int minutes);

} // namespace gridfreq
