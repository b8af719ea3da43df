#pragma once

#include <cmath>

#include "gridfreq/detail/step_kernel.hpp"
#include "gridfreq/engine.hpp"
#include "gridfreq/scenario.hpp"

namespace gridfreq::detail {

/// Everything one integration lane needs, precomputed once per run.
/// The single-scenario path and every batch backend drive lanes through
/// the same control function below so their outputs agree bit-for-bit.
struct LaneSetup {
    KernelParams kp{};
    double dt = 0.0;
    long steps = 0;
    double s_base_mw = 0.0;
    double loss_mw = 0.0;
    double apply_time_s = 0.0;
    double threshold_hz = 0.0;
    double tod0_min = 0.0;
    const FleetConfig* fleet = nullptr;
};

/// Validates the scenario (throwing with every violation) and builds the
/// lane pack. H comes from the override when present, otherwise from the
/// mix.
LaneSetup make_lane_setup(const Scenario& sc);

inline double time_of_day_at(const LaneSetup& su, double t_s) {
    return std::fmod(su.tod0_min + t_s / 60.0, 1440.0);
}

/// Per-sample control: advances the latched trigger, evaluates the fleet
/// relief for this step (zero-order hold), and forms the per-unit net
/// power the integrator sees until the next sample.
struct LaneStep {
    double f_hz = 0.0;
    double p_ev_mw = 0.0;
    double net_pu = 0.0;
};

inline LaneStep lane_step_control(const LaneSetup& su, const KState& s, double t,
                                  FleetSignal& sig) {
    LaneStep out;
    out.f_hz = kNominalFrequencyHz * (1.0 + s.df);
    sig = detect_event(out.f_hz, su.threshold_hz, sig, t);
    out.p_ev_mw = fleet_response_power(*su.fleet, sig, time_of_day_at(su, t),
                                       sig.triggered ? t - *sig.trigger_time_s : 0.0);
    const double loss_pu = (t >= su.apply_time_s ? su.loss_mw : 0.0) / su.s_base_mw;
    out.net_pu = -loss_pu + out.p_ev_mw / su.s_base_mw;
    return out;
}

inline TrajectorySample make_sample(const LaneSetup& su, const KState& s, double t,
                                    const LaneStep& step, bool triggered) {
    return {t, step.f_hz, s.df, turbine_output(su.kp, s), step.p_ev_mw, triggered};
}

} // namespace gridfreq::detail
