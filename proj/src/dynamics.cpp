#include "gridfreq/dynamics.hpp"

#include "gridfreq/detail/step_kernel.hpp"

namespace gridfreq {

namespace detail {

KernelParams make_kernel_params(const GovernorParams& g, double h_eff_s) {
    KernelParams p;
    p.inv_2h = 1.0 / (2.0 * h_eff_s);
    if (g.droop_enabled) {
        p.droop_gain = 1.0 / g.droop_r;
        if (g.t_governor > 0.0) {
            p.inv_tg = 1.0 / g.t_governor;
        } else {
            p.tg_algebraic = true;
        }
    }
    // droop disabled: gain and inv_tg stay 0, so x_governor is frozen
    if (g.t_turbine > 0.0) {
        p.inv_tt = 1.0 / g.t_turbine;
    } else {
        p.tt_algebraic = true;
    }
    p.damping = g.damping_d;
    return p;
}

} // namespace detail

GridState derivatives(const GridState& state, const GovernorParams& params,
                      double h_eff_s, double net_power_pu) {
    if (h_eff_s <= 0.0) throw ValidationError({"h_eff: must be positive"});
    if (!std::isfinite(state.delta_f) || !std::isfinite(state.x_governor) ||
        !std::isfinite(state.x_turbine) || !std::isfinite(net_power_pu) ||
        !std::isfinite(h_eff_s)) {
        throw NumericError("non-finite derivative input", 0.0);
    }
    const auto p = detail::make_kernel_params(params, h_eff_s);
    const auto r = detail::k_derivatives(p, {state.delta_f, state.x_governor, state.x_turbine},
                                         net_power_pu);
    return {r.df, r.xg, r.xt};
}

} // namespace gridfreq
