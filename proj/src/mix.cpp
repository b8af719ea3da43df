#include "gridfreq/mix.hpp"

#include "gridfreq/errors.hpp"

namespace gridfreq {

double GenerationMix::base_power_mw() const {
    double total = 0.0;
    for (const auto& s : sources) total += s.power_output;
    return total;
}

double effective_inertia(const GenerationMix& mix) {
    if (mix.sources.empty()) throw ValidationError({"mix.sources: empty generation mix"});
    const double base = mix.base_power_mw();
    if (base <= 0.0) throw ValidationError({"mix.sources: total power output is zero"});
    double weighted = 0.0;
    for (const auto& s : mix.sources) weighted += s.inertia_constant * s.power_output;
    return weighted / base;
}

double to_per_unit(double power_mw, const GenerationMix& mix) {
    const double base = mix.base_power_mw();
    if (base <= 0.0) throw ValidationError({"mix.sources: total power output is zero"});
    return power_mw / base;
}

GenerationMix default_generation_mix() {
    return GenerationMix{{
        {"Coal", 2.6, 1166.0},
        {"Natural gas", 4.9, 12996.0},
        {"Nuclear", 4.1, 1147.0},
        {"Petroleum", 3.6, 88.0},
        {"Wind and solar", 0.0, 809.0},
        {"Hydro", 2.4, 3115.0},
        {"Other", 0.0, 509.0},
    }};
}

} // namespace gridfreq
