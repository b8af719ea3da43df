#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "gridfreq/batch.hpp"
#include "gridfreq/engine.hpp"
#include "gridfreq/errors.hpp"

using namespace gridfreq;

namespace {

// A deliberately heterogeneous lane set: modes, participation levels,
// degenerate lags, disabled droop, a different mix, a wrapping window.
std::vector<Scenario> mixed_lanes() {
    std::vector<Scenario> lanes;

    Scenario a; // calibrated default, no fleet
    lanes.push_back(a);

    Scenario b = a;
    b.fleet.mode = FleetMode::V1G;
    b.fleet.participation = 0.6;
    lanes.push_back(b);

    Scenario c = a;
    c.fleet.mode = FleetMode::V2G;
    c.fleet.participation = 1.0;
    lanes.push_back(c);

    Scenario d = a; // degenerate lags exercise the pass-through masks
    d.governor.t_governor = 0.0;
    d.governor.t_turbine = 0.0;
    d.fleet.mode = FleetMode::V2G;
    lanes.push_back(d);

    Scenario e = a;
    e.governor.droop_enabled = false;
    e.governor.damping_d = 1.2;
    lanes.push_back(e);

    Scenario f = a; // smaller overnight mix, wrapping charge window
    f.mix = GenerationMix{{{"gas", 4.5, 9000.0}, {"hydro", 2.4, 2500.0}, {"solar", 0.0, 3000.0}}};
    f.fleet.strategy = ChargingStrategy::constant_minimum();
    f.fleet.mode = FleetMode::V1G;
    f.sim_time_of_day_min = 2 * 60; // 02:00, inside the wrapped window
    f.disturbance.magnitude_mw = 1200.0;
    lanes.push_back(f);

    Scenario g = a;
    g.h_override_s = 6.4;
    g.fleet.mode = FleetMode::V2G;
    g.fleet.actuation_lag_s = 0.0;
    lanes.push_back(g);

    return lanes;
}

} // namespace

TEST_CASE("backend resolution") {
    CHECK(resolve_backend(Backend::Scalar) == Backend::Scalar);
    const Backend picked = resolve_backend(Backend::Auto);
    CHECK((picked == Backend::Scalar || picked == Backend::Avx2));
    if (cpu_supports_avx2()) {
        CHECK(resolve_backend(Backend::Avx2) == Backend::Avx2);
        CHECK(picked == Backend::Avx2);
    } else {
        CHECK_THROWS_AS(resolve_backend(Backend::Avx2), ValidationError);
        CHECK(picked == Backend::Scalar);
    }
}

TEST_CASE("environment variable overrides backend selection") {
    ::setenv("GRIDFREQ_BACKEND", "scalar", 1);
    CHECK(resolve_backend(Backend::Auto) == Backend::Scalar);
    ::setenv("GRIDFREQ_BACKEND", "bogus", 1);
    CHECK_THROWS_AS(resolve_backend(Backend::Auto), ValidationError);
    ::unsetenv("GRIDFREQ_BACKEND");
}

TEST_CASE("scalar batch equals single-scenario runs exactly") {
    const auto lanes = mixed_lanes();
    const auto batch = simulate_batch(lanes, Backend::Scalar);
    REQUIRE(batch.size() == lanes.size());
    for (size_t i = 0; i < lanes.size(); ++i) {
        CHECK(batch[i] == simulate(lanes[i]));
    }
}

TEST_CASE("avx2 batch is bit-identical to the scalar batch") {
    if (!cpu_supports_avx2()) {
        MESSAGE("CPU lacks AVX2; skipping");
        return;
    }
    const auto lanes = mixed_lanes(); // 7 lanes: one vector group + 3 remainder
    const auto scalar = simulate_batch(lanes, Backend::Scalar);
    const auto avx2 = simulate_batch(lanes, Backend::Avx2);
    REQUIRE(scalar.size() == avx2.size());
    for (size_t i = 0; i < scalar.size(); ++i) {
        REQUIRE(scalar[i].samples.size() == avx2[i].samples.size());
        for (size_t k = 0; k < scalar[i].samples.size(); ++k) {
            const auto& a = scalar[i].samples[k];
            const auto& b = avx2[i].samples[k];
            REQUIRE(a.t_s == b.t_s);
            REQUIRE(a.f_hz == b.f_hz);
            REQUIRE(a.delta_f_pu == b.delta_f_pu);
            REQUIRE(a.p_turbine_pu == b.p_turbine_pu);
            REQUIRE(a.p_ev_mw == b.p_ev_mw);
            REQUIRE(a.triggered == b.triggered);
        }
    }
}

TEST_CASE("batch validates lanes together") {
    std::vector<Scenario> lanes(2);
    lanes[1].dt_s = 0.02; // mismatched step
    CHECK_THROWS_AS(simulate_batch(lanes, Backend::Scalar), ValidationError);

    lanes[1].dt_s = 0.01;
    lanes[0].fleet.participation = 7.0;
    try {
        simulate_batch(lanes, Backend::Scalar);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("lane[0]") != std::string::npos);
    }

    CHECK(simulate_batch(std::vector<Scenario>{}, Backend::Scalar).empty());
}

TEST_CASE("sweep results do not depend on the backend") {
    if (!cpu_supports_avx2()) {
        MESSAGE("CPU lacks AVX2; skipping");
        return;
    }
    const std::vector<double> levels{0.3, 0.9};
    const auto a = sweep_participation(Scenario{}, levels, Backend::Scalar);
    const auto b = sweep_participation(Scenario{}, levels, Backend::Avx2);
    CHECK(a.baseline.nadir_hz == b.baseline.nadir_hz);
    REQUIRE(a.points.size() == b.points.size());
    for (size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].report.nadir_hz == b.points[i].report.nadir_hz);
        CHECK(a.points[i].report.nadir_time_s == b.points[i].report.nadir_time_s);
    }
}
