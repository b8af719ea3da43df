#pragma once

#include <string>
#include <vector>

namespace gridfreq {

/// One named generation source. Zero-inertia sources (wind, solar,
/// inverter-based "other") are represented with inertia_constant == 0.
struct GenerationSource {
    std::string name;
    double inertia_constant = 0.0; ///< H, seconds (>= 0)
    double power_output = 0.0;     ///< MW (>= 0)

    bool operator==(const GenerationSource&) const = default;
};

/// Ordered list of sources. The per-unit power base is the summed output;
/// it is always recomputed from the members, never stored separately.
struct GenerationMix {
    std::vector<GenerationSource> sources;

    double base_power_mw() const;

    bool operator==(const GenerationMix&) const = default;
};

/// Output-weighted average inertia constant of the mix, in seconds:
/// sum(H_i * P_i) / sum(P_i). Bounded by the min/max H over sources
/// with nonzero output, and invariant under uniform scaling of outputs.
/// Throws ValidationError for an empty mix or zero total power.
double effective_inertia(const GenerationMix& mix);

/// Normalize a MW quantity on the mix's total-output base.
/// Throws ValidationError when the base is zero.
double to_per_unit(double power_mw, const GenerationMix& mix);

/// Built-in default mix: a California generation snapshot for a
/// low-inertia evening hour, totalling 19,830 MW. Its output-weighted
/// inertia works out to ~3.994 s; see README for the 6.4 s override.
GenerationMix default_generation_mix();

} // namespace gridfreq
