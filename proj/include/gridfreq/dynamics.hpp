#pragma once

#include <cmath>

#include "gridfreq/errors.hpp"

namespace gridfreq {

inline constexpr double kNominalFrequencyHz = 60.0;

/// Droop governor and turbine first-order lags. damping_d is a load
/// frequency-damping coefficient; the default 0 keeps the pure droop loop.
/// A zero time constant collapses that lag to an algebraic pass-through.
struct GovernorParams {
    bool droop_enabled = true;
    double droop_r = 0.05;   ///< pu frequency per pu power (> 0 when enabled)
    double t_governor = 0.2; ///< s (>= 0)
    double t_turbine = 0.5;  ///< s (>= 0)
    double damping_d = 0.0;  ///< pu (>= 0)

    bool operator==(const GovernorParams&) const = default;
};

/// Continuous state of the single-machine equivalent, all per-unit.
/// The all-zero state is the undisturbed 60 Hz equilibrium.
struct GridState {
    double delta_f = 0.0;    ///< frequency deviation, pu on 60 Hz
    double x_governor = 0.0; ///< governor lag state, pu power
    double x_turbine = 0.0;  ///< turbine lag state, pu power

    bool operator==(const GridState&) const = default;
};

inline GridState operator+(const GridState& a, const GridState& b) {
    return {a.delta_f + b.delta_f, a.x_governor + b.x_governor, a.x_turbine + b.x_turbine};
}
inline GridState operator*(double s, const GridState& a) {
    return {s * a.delta_f, s * a.x_governor, s * a.x_turbine};
}

/// Step generation loss: magnitude_mw is shed from t >= apply_time_s.
struct Disturbance {
    double magnitude_mw = 1800.0; ///< > 0 means generation loss
    double apply_time_s = 0.0;

    bool operator==(const Disturbance&) const = default;
};

/// Time derivative of the grid state under the swing equation with a
/// droop governor behind two first-order lags:
///
///   d(delta_f)/dt    = (x_turbine + net_power_pu - damping_d*delta_f) / (2 H)
///   d(x_governor)/dt = (-delta_f/droop_r - x_governor) / t_governor
///   d(x_turbine)/dt  = (x_governor - x_turbine) / t_turbine
///
/// net_power_pu is the externally supplied imbalance (negative for a
/// generation loss, plus any fleet relief), already per-unit.
/// Disabled droop freezes x_governor; a zero time constant makes the
/// corresponding block algebraic. Throws NumericError on non-finite
/// inputs and ValidationError when h_eff_s <= 0.
GridState derivatives(const GridState& state, const GovernorParams& params,
                      double h_eff_s, double net_power_pu);

/// Classical fixed-step 4th-order Runge-Kutta update. The derivative
/// evaluator must be time-invariant within the step (externally latched
/// inputs are held across sub-stages). Works for any state with
/// `state + state` and `double * state`, including plain double.
template <class State, class F>
State rk4_step(const State& y, double dt, F&& deriv) {
    const double half = 0.5 * dt;
    const State k1 = deriv(y);
    const State k2 = deriv(y + half * k1);
    const State k3 = deriv(y + half * k2);
    const State k4 = deriv(y + dt * k3);
    State sum = k1 + 2.0 * k2;
    sum = sum + 2.0 * k3;
    sum = sum + k4;
    return y + (dt / 6.0) * sum;
}

} // namespace gridfreq
