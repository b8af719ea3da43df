#include "batch_detail.hpp"

namespace gridfreq::detail {

std::vector<Trajectory> run_batch_scalar(const std::vector<LaneSetup>& lanes) {
    std::vector<Trajectory> out;
    out.reserve(lanes.size());
    for (const auto& lane : lanes) out.push_back(run_lane(lane));
    return out;
}

} // namespace gridfreq::detail
