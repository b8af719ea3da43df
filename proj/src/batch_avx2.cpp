#include "batch_detail.hpp"

#include <string>

#include "gridfreq/errors.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace gridfreq::detail {

namespace {

// Four-lane mirrors of the scalar kernel. Every arithmetic instruction
// matches step_kernel.hpp in kind and order (no FMA), so each lane is
// bit-identical to the scalar path.

struct VParams {
    __m256d inv_2h, droop_gain, inv_tg, inv_tt, damping;
    __m256d tg_mask, tt_mask; // all-ones lanes select the algebraic pass-through
};

struct VState {
    __m256d df, xg, xt;
};

inline __m256d v_neg(__m256d x) { return _mm256_xor_pd(x, _mm256_set1_pd(-0.0)); }

inline VState v_derivatives(const VParams& p, const VState& s, __m256d net) {
    const __m256d cmd = _mm256_mul_pd(v_neg(s.df), p.droop_gain);
    const __m256d gov_out = _mm256_blendv_pd(s.xg, cmd, p.tg_mask);
    const __m256d dxg = _mm256_mul_pd(_mm256_sub_pd(cmd, s.xg), p.inv_tg);
    const __m256d turb_out = _mm256_blendv_pd(s.xt, gov_out, p.tt_mask);
    const __m256d dxt = _mm256_mul_pd(_mm256_sub_pd(gov_out, s.xt), p.inv_tt);
    const __m256d ddf = _mm256_mul_pd(
        _mm256_sub_pd(_mm256_add_pd(turb_out, net), _mm256_mul_pd(p.damping, s.df)), p.inv_2h);
    return {ddf, dxg, dxt};
}

inline VState v_axpy(const VState& y, __m256d h, const VState& k) {
    return {_mm256_add_pd(y.df, _mm256_mul_pd(h, k.df)),
            _mm256_add_pd(y.xg, _mm256_mul_pd(h, k.xg)),
            _mm256_add_pd(y.xt, _mm256_mul_pd(h, k.xt))};
}

inline VState v_rk4(const VParams& p, const VState& s, __m256d half, __m256d dt,
                    __m256d sixth, __m256d net) {
    const VState k1 = v_derivatives(p, s, net);
    const VState k2 = v_derivatives(p, v_axpy(s, half, k1), net);
    const VState k3 = v_derivatives(p, v_axpy(s, half, k2), net);
    const VState k4 = v_derivatives(p, v_axpy(s, dt, k3), net);
    const __m256d two = _mm256_set1_pd(2.0);
    VState sum{_mm256_add_pd(k1.df, _mm256_mul_pd(two, k2.df)),
               _mm256_add_pd(k1.xg, _mm256_mul_pd(two, k2.xg)),
               _mm256_add_pd(k1.xt, _mm256_mul_pd(two, k2.xt))};
    sum = {_mm256_add_pd(sum.df, _mm256_mul_pd(two, k3.df)),
           _mm256_add_pd(sum.xg, _mm256_mul_pd(two, k3.xg)),
           _mm256_add_pd(sum.xt, _mm256_mul_pd(two, k3.xt))};
    sum = {_mm256_add_pd(sum.df, k4.df), _mm256_add_pd(sum.xg, k4.xg),
           _mm256_add_pd(sum.xt, k4.xt)};
    return v_axpy(s, sixth, sum);
}

inline __m256d lane_mask(bool a, bool b, bool c, bool d) {
    return _mm256_castsi256_pd(_mm256_set_epi64x(d ? -1 : 0, c ? -1 : 0, b ? -1 : 0, a ? -1 : 0));
}

} // namespace

std::vector<Trajectory> run_batch_avx2(const std::vector<LaneSetup>& lanes) {
    const size_t n = lanes.size();
    const double dt = lanes[0].dt;
    const long steps = lanes[0].steps;

    std::vector<double> df(n, 0.0), xg(n, 0.0), xt(n, 0.0), net(n, 0.0);
    std::vector<FleetSignal> sigs(n);

    const size_t groups = n / 4;
    std::vector<VParams> vp(groups);
    for (size_t g = 0; g < groups; ++g) {
        const auto& a = lanes[4 * g].kp;
        const auto& b = lanes[4 * g + 1].kp;
        const auto& c = lanes[4 * g + 2].kp;
        const auto& d = lanes[4 * g + 3].kp;
        vp[g].inv_2h = _mm256_set_pd(d.inv_2h, c.inv_2h, b.inv_2h, a.inv_2h);
        vp[g].droop_gain = _mm256_set_pd(d.droop_gain, c.droop_gain, b.droop_gain, a.droop_gain);
        vp[g].inv_tg = _mm256_set_pd(d.inv_tg, c.inv_tg, b.inv_tg, a.inv_tg);
        vp[g].inv_tt = _mm256_set_pd(d.inv_tt, c.inv_tt, b.inv_tt, a.inv_tt);
        vp[g].damping = _mm256_set_pd(d.damping, c.damping, b.damping, a.damping);
        vp[g].tg_mask = lane_mask(a.tg_algebraic, b.tg_algebraic, c.tg_algebraic, d.tg_algebraic);
        vp[g].tt_mask = lane_mask(a.tt_algebraic, b.tt_algebraic, c.tt_algebraic, d.tt_algebraic);
    }

    const __m256d v_half = _mm256_set1_pd(0.5 * dt);
    const __m256d v_dt = _mm256_set1_pd(dt);
    const __m256d v_sixth = _mm256_set1_pd(dt / 6.0);

    std::vector<Trajectory> out(n);
    for (auto& traj : out) traj.samples.reserve(static_cast<size_t>(steps) + 1);

    for (long k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * dt;

        // Scalar per-lane control: trigger latch, fleet relief, net power.
        for (size_t i = 0; i < n; ++i) {
            const KState s{df[i], xg[i], xt[i]};
            const auto step = lane_step_control(lanes[i], s, t, sigs[i]);
            out[i].samples.push_back(make_sample(lanes[i], s, t, step, sigs[i].triggered));
            net[i] = step.net_pu;
        }
        if (k == steps) break;

        size_t i = 0;
        for (size_t g = 0; g < groups; ++g, i += 4) {
            VState s{_mm256_loadu_pd(&df[i]), _mm256_loadu_pd(&xg[i]), _mm256_loadu_pd(&xt[i])};
            s = v_rk4(vp[g], s, v_half, v_dt, v_sixth, _mm256_loadu_pd(&net[i]));
            _mm256_storeu_pd(&df[i], s.df);
            _mm256_storeu_pd(&xg[i], s.xg);
            _mm256_storeu_pd(&xt[i], s.xt);
        }
        for (; i < n; ++i) { // remainder lanes take the scalar kernel
            const KState s = k_rk4(lanes[i].kp, {df[i], xg[i], xt[i]}, dt, net[i]);
            df[i] = s.df;
            xg[i] = s.xg;
            xt[i] = s.xt;
        }

        for (size_t j = 0; j < n; ++j) {
            if (!k_finite({df[j], xg[j], xt[j]})) {
                throw NumericError("lane " + std::to_string(j) +
                                       ": simulation diverged to a non-finite state",
                                   t + dt);
            }
        }
    }
    return out;
}

} // namespace gridfreq::detail

#else // non-x86: never selectable, cpu_supports_avx2() is false

namespace gridfreq::detail {

std::vector<Trajectory> run_batch_avx2(const std::vector<LaneSetup>&) {
    throw ValidationError({"backend: avx2 is not available on this architecture"});
}

} // namespace gridfreq::detail

#endif
