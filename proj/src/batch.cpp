#include "gridfreq/batch.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>

#include "batch_detail.hpp"
#include "gridfreq/errors.hpp"

namespace gridfreq {

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Auto: return "auto";
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "?";
}

bool cpu_supports_avx2() noexcept {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend resolve_backend(Backend requested) {
    if (requested == Backend::Auto) {
        if (const char* env = std::getenv("GRIDFREQ_BACKEND")) {
            std::string v(env);
            std::transform(v.begin(), v.end(), v.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            if (v == "scalar") {
                requested = Backend::Scalar;
            } else if (v == "avx2") {
                requested = Backend::Avx2;
            } else if (v != "auto" && !v.empty()) {
                throw ValidationError({"GRIDFREQ_BACKEND: unknown value '" + v +
                                       "' (expected scalar, avx2 or auto)"});
            }
        }
    }
    if (requested == Backend::Auto) {
        requested = cpu_supports_avx2() ? Backend::Avx2 : Backend::Scalar;
    }
    if (requested == Backend::Avx2 && !cpu_supports_avx2()) {
        throw ValidationError({"backend: avx2 requested but this CPU does not support AVX2"});
    }
    return requested;
}

std::vector<Trajectory> simulate_batch(std::span<const Scenario> scenarios, Backend backend) {
    backend = resolve_backend(backend);
    if (scenarios.empty()) return {};

    std::vector<std::string> violations;
    for (size_t i = 0; i < scenarios.size(); ++i) {
        for (auto& msg : scenarios[i].validate()) {
            violations.push_back("lane[" + std::to_string(i) + "]." + msg);
        }
        if (scenarios[i].dt_s != scenarios[0].dt_s ||
            scenarios[i].horizon_s != scenarios[0].horizon_s) {
            violations.push_back("lane[" + std::to_string(i) +
                                 "]: all lanes of a batch must share dt and horizon");
        }
    }
    if (!violations.empty()) throw ValidationError(std::move(violations));

    std::vector<detail::LaneSetup> lanes;
    lanes.reserve(scenarios.size());
    for (const auto& sc : scenarios) lanes.push_back(detail::make_lane_setup(sc));

    return backend == Backend::Avx2 ? detail::run_batch_avx2(lanes)
                                    : detail::run_batch_scalar(lanes);
}

} // namespace gridfreq
