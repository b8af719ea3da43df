#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridfreq {

/// Exit codes: 0 success, 1 runtime failure (bad input data, I/O),
/// 2 usage errors (unknown flags, malformed values).
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Full command-line front end: `run`, `sweep`, `daily`, `soc`,
/// `validate`. args excludes the program name. Failures write a
/// single-line diagnostic to err and return nonzero.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gridfreq
