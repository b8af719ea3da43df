#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gridfreq/detail/step_kernel.hpp"
#include "gridfreq/dynamics.hpp"
#include "gridfreq/errors.hpp"

using namespace gridfreq;

namespace {
const GovernorParams kDefaultGov{};
}

TEST_CASE("equilibrium has zero rates") {
    const GridState rate = derivatives(GridState{}, kDefaultGov, 3.994, 0.0);
    CHECK(rate.delta_f == 0.0);
    CHECK(rate.x_governor == 0.0);
    CHECK(rate.x_turbine == 0.0);
}

TEST_CASE("initial frequency slope after a step loss") {
    // At t = 0+ the lag states are still zero, so d(delta_f)/dt = net/(2H).
    const double h = 79207.5 / 19830.0;
    const double net = -1800.0 / 19830.0;
    const GridState rate = derivatives(GridState{}, kDefaultGov, h, net);
    CHECK(rate.delta_f == doctest::Approx(-1800.0 / 158415.0).epsilon(1e-14));
    CHECK(std::abs(rate.delta_f - (-0.0113625)) < 1e-6);
    // -0.68175 Hz/s on the 60 Hz base
    CHECK(rate.delta_f * 60.0 == doctest::Approx(-0.6817536).epsilon(1e-6));
}

TEST_CASE("governor lag rate follows the droop demand") {
    GridState s;
    s.delta_f = -0.005;
    GovernorParams g;
    g.droop_r = 0.05;
    g.t_governor = 0.2;
    const GridState rate = derivatives(s, g, 4.0, 0.0);
    // demand -delta_f/R = 0.1 pu; (0.1 - 0)/0.2 = 0.5 pu/s
    CHECK(rate.x_governor == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("disabled droop freezes the governor state") {
    GridState s;
    s.delta_f = -0.01;
    s.x_governor = 0.3;
    GovernorParams g;
    g.droop_enabled = false;
    const GridState rate = derivatives(s, g, 4.0, 0.0);
    CHECK(rate.x_governor == 0.0);
}

TEST_CASE("zero time constants collapse to pass-through") {
    GridState s;
    s.delta_f = -0.005;
    s.x_governor = 123.0; // ignored states
    s.x_turbine = 456.0;
    GovernorParams g;
    g.t_governor = 0.0;
    g.t_turbine = 0.0;
    const GridState rate = derivatives(s, g, 4.0, 0.0);
    CHECK(rate.x_governor == 0.0);
    CHECK(rate.x_turbine == 0.0);
    // turbine output = governor output = -delta_f/R feeds the swing directly
    const double expected = (-(-0.005) / 0.05 + 0.0) / (2.0 * 4.0);
    CHECK(rate.delta_f == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("derivative errors") {
    CHECK_THROWS_AS(derivatives(GridState{}, kDefaultGov, 0.0, 0.0), ValidationError);
    GridState bad;
    bad.delta_f = std::nan("");
    CHECK_THROWS_AS(derivatives(bad, kDefaultGov, 4.0, 0.0), NumericError);
    CHECK_THROWS_AS(derivatives(GridState{}, kDefaultGov, 4.0,
                                std::numeric_limits<double>::infinity()),
                    NumericError);
}

TEST_CASE("rk4 leaves an equilibrium unchanged") {
    const GridState s{};
    const auto deriv = [](const GridState&) { return GridState{}; };
    const GridState next = rk4_step(s, 0.25, deriv);
    CHECK(next == s);
}

TEST_CASE("rk4 reproduces the first-order lag step response") {
    // x' = (1 - x)/T integrated to t = T gives 1 - e^-1.
    const double T = 0.7;
    const double dt = T / 100.0;
    double x = 0.0;
    for (int i = 0; i < 100; ++i) {
        x = rk4_step(x, dt, [&](double v) { return (1.0 - v) / T; });
    }
    CHECK(std::abs(x - (1.0 - std::exp(-1.0))) < 1e-7);
}

TEST_CASE("rk4 is exact on a constant derivative") {
    const double c = -3.25;
    const double x = rk4_step(7.0, 0.125, [&](double) { return c; });
    CHECK(x == 7.0 + c * 0.125);
}

TEST_CASE("public derivatives and the internal kernel agree bitwise") {
    GovernorParams g;
    g.damping_d = 0.7;
    const double h = 4.2;
    GridState s;
    s.delta_f = -0.004;
    s.x_governor = 0.02;
    s.x_turbine = 0.015;
    const double net = -0.09;

    const auto kp = detail::make_kernel_params(g, h);
    const auto kr = detail::k_derivatives(kp, {s.delta_f, s.x_governor, s.x_turbine}, net);
    const GridState pr = derivatives(s, g, h, net);
    CHECK(pr.delta_f == kr.df);
    CHECK(pr.x_governor == kr.xg);
    CHECK(pr.x_turbine == kr.xt);

    // one public rk4 step equals one kernel step
    const GridState pub = rk4_step(s, 0.01, [&](const GridState& y) {
        return derivatives(y, g, h, net);
    });
    const auto ker = detail::k_rk4(kp, {s.delta_f, s.x_governor, s.x_turbine}, 0.01, net);
    CHECK(pub.delta_f == ker.df);
    CHECK(pub.x_governor == ker.xg);
    CHECK(pub.x_turbine == ker.xt);
}
