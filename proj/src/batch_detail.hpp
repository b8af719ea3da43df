#pragma once

#include <vector>

#include "engine_detail.hpp"

namespace gridfreq::detail {

Trajectory run_lane(const LaneSetup& su); // engine.cpp

std::vector<Trajectory> run_batch_scalar(const std::vector<LaneSetup>& lanes);

// Compiled with AVX2 codegen on x86-64; callable only when
// cpu_supports_avx2() reports true.
std::vector<Trajectory> run_batch_avx2(const std::vector<LaneSetup>& lanes);

} // namespace gridfreq::detail
