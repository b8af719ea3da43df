#pragma once

#include <span>
#include <string>
#include <vector>

#include "gridfreq/scenario.hpp"

namespace gridfreq {

/// Integration backend for batched runs. Scalar is the reference; Avx2
/// integrates four lanes per register and is selected automatically when
/// the CPU supports it. Results are equivalence-tested bit-for-bit, so
/// backend choice never changes output.
enum class Backend { Auto, Scalar, Avx2 };

const char* backend_name(Backend b);

bool cpu_supports_avx2() noexcept;

/// Resolve Auto to a concrete backend: the GRIDFREQ_BACKEND environment
/// variable ("scalar", "avx2", "auto") wins, then CPU detection. Throws
/// ValidationError for an unknown value or an unsupported request.
Backend resolve_backend(Backend requested);

/// Simulate many independent scenarios in lock-step. All lanes must share
/// dt and horizon (sweep drivers build them that way); every lane is
/// validated up front. Output order matches input order regardless of
/// backend.
std::vector<Trajectory> simulate_batch(std::span<const Scenario> scenarios,
                                       Backend backend = Backend::Auto);

} // namespace gridfreq
