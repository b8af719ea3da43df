#pragma once

#include "gridfreq/dynamics.hpp"

namespace gridfreq::detail {

/// Precomputed per-run scalar pack. Reciprocals are stored so that every
/// integration path (public ops, scalar batch lanes, SIMD lanes) performs
/// the identical multiply sequence. inv_tg is zero both for the algebraic
/// T_G == 0 collapse and for disabled droop, which freezes x_governor
/// exactly; the *_algebraic flags select pass-through outputs.
struct KernelParams {
    double inv_2h = 0.0;
    double droop_gain = 0.0; ///< 1/R, 0 when droop disabled
    double inv_tg = 0.0;
    double inv_tt = 0.0;
    double damping = 0.0;
    bool tg_algebraic = false; ///< T_G == 0: governor output follows the droop command
    bool tt_algebraic = false; ///< T_T == 0: turbine output follows the governor
};

KernelParams make_kernel_params(const GovernorParams& g, double h_eff_s);

struct KState {
    double df = 0.0;
    double xg = 0.0;
    double xt = 0.0;
};

inline double governor_output(const KernelParams& p, const KState& s) {
    return p.tg_algebraic ? -s.df * p.droop_gain : s.xg;
}

inline double turbine_output(const KernelParams& p, const KState& s) {
    return p.tt_algebraic ? governor_output(p, s) : s.xt;
}

inline KState k_derivatives(const KernelParams& p, const KState& s, double net_pu) {
    const double cmd = -s.df * p.droop_gain;
    const double gov_out = p.tg_algebraic ? cmd : s.xg;
    const double dxg = (cmd - s.xg) * p.inv_tg;
    const double turb_out = p.tt_algebraic ? gov_out : s.xt;
    const double dxt = (gov_out - s.xt) * p.inv_tt;
    const double ddf = (turb_out + net_pu - p.damping * s.df) * p.inv_2h;
    return {ddf, dxg, dxt};
}

inline KState k_axpy(const KState& y, double h, const KState& k) {
    return {y.df + h * k.df, y.xg + h * k.xg, y.xt + h * k.xt};
}

// Op order here is the contract the AVX2 kernel mirrors instruction for
// instruction; changing an association changes results bit-for-bit.
inline KState k_rk4(const KernelParams& p, const KState& s, double dt, double net_pu) {
    const double half = 0.5 * dt;
    const KState k1 = k_derivatives(p, s, net_pu);
    const KState k2 = k_derivatives(p, k_axpy(s, half, k1), net_pu);
    const KState k3 = k_derivatives(p, k_axpy(s, half, k2), net_pu);
    const KState k4 = k_derivatives(p, k_axpy(s, dt, k3), net_pu);
    KState sum{k1.df + 2.0 * k2.df, k1.xg + 2.0 * k2.xg, k1.xt + 2.0 * k2.xt};
    sum = {sum.df + 2.0 * k3.df, sum.xg + 2.0 * k3.xg, sum.xt + 2.0 * k3.xt};
    sum = {sum.df + k4.df, sum.xg + k4.xg, sum.xt + k4.xt};
    return k_axpy(s, dt / 6.0, sum);
}

inline bool k_finite(const KState& s) {
    return std::isfinite(s.df) && std::isfinite(s.xg) && std::isfinite(s.xt);
}

} // namespace gridfreq::detail
