#include "support.hpp"

#include "tdho/mode_solver.hpp"

#include <cmath>
#include <numbers>

using namespace tdho;
using std::numbers::pi;

TEST_SUITE("mode-solver") {

TEST_CASE("wronskian residual arithmetic") {
    const auto spec = OscillatorSpec::constant(1.0, 1.0);
    const ModeSample s = init_minimum_uncertainty(spec, 0.0);
    CHECK(wronskian_residual(s) <= 1e-15);

    ModeSample scaled = s;
    scaled.u *= 1.1;
    scaled.du *= 1.1;
    CHECK(wronskian_residual(scaled) == doctest::Approx(0.21).epsilon(1e-12));

    ModeSample flipped = s;
    flipped.u = std::conj(s.u);
    flipped.du = std::conj(s.du);
    CHECK(wronskian_residual(flipped) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("minimum-uncertainty initial data") {
    const ModeSample a = init_minimum_uncertainty(OscillatorSpec::constant(1.0, 1.0), 0.0);
    CHECK(a.u.real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(a.u.imag() == 0.0);
    CHECK(a.du.imag() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));

    const ModeSample b = init_minimum_uncertainty(OscillatorSpec::constant(1.0, 4.0), 0.0);
    CHECK(b.u.real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(b.du.imag() == doctest::Approx(-1.0).epsilon(1e-15));

    CHECK_CODE(init_minimum_uncertainty(OscillatorSpec::constant(1.0, -1.0), 0.0),
               ErrorCode::no_instantaneous_vacuum);
    CHECK_CODE(init_minimum_uncertainty(OscillatorSpec::constant(1.0, 0.0), 0.0),
               ErrorCode::no_instantaneous_vacuum);
}

TEST_CASE("constant oscillator reaches the analytic mode at t = pi") {
    const auto spec = OscillatorSpec::constant(1.0, 1.0);
    const double grid[] = {0.0, pi / 2, pi};
    const auto traj = integrate_mode(spec, init_minimum_uncertainty(spec, 0.0), pi, 1e-12, grid);
    REQUIRE(traj.size() == 3);
    const ModeSample& end = traj[2];
    CHECK(end.u.real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(std::abs(end.u.imag()) < 1e-10);
    CHECK(std::abs(end.du.real()) < 1e-10);
    CHECK(end.du.imag() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    for (const ModeSample& s : traj.samples()) CHECK(wronskian_residual(s) < 1e-9);
}

TEST_CASE("modulated frequency keeps the Wronskian over t in [0, 100]") {
    const auto spec = OscillatorSpec::custom(1.0, [](double t) {
        const double w = 1.0 + 0.5 * std::sin(0.3 * t);
        return w * w;
    });
    const auto grid = uniform_grid(0.0, 100.0, 2001);
    const auto traj = integrate_mode(spec, init_minimum_uncertainty(spec, 0.0), 100.0, 1e-12, grid);
    CHECK(traj.max_wronskian_drift() < 1e-9);
    CHECK(traj.steps() > 0);
}

TEST_CASE("backward integration returns samples in increasing t") {
    const auto spec = OscillatorSpec::constant(1.0, 2.0);
    const auto grid = uniform_grid(-3.0, 0.0, 31);
    const auto traj = integrate_mode(spec, init_minimum_uncertainty(spec, 0.0), -3.0, 1e-12, grid);
    REQUIRE(traj.size() == 31);
    for (size_t i = 1; i < traj.size(); ++i) CHECK(traj[i].t > traj[i - 1].t);
    const ModeSample exact = stationary_vacuum(spec, -3.0);
    CHECK(std::abs(traj[0].u - exact.u) < 1e-10);
}

TEST_CASE("integration agrees with the stationary closed form") {
    const auto spec = OscillatorSpec::constant(1.0, 2.25);
    const auto grid = uniform_grid(0.0, 20.0, 201);
    const auto traj = integrate_mode(spec, stationary_vacuum(spec, 0.0), 20.0, 1e-12, grid);
    double worst = 0.0;
    for (const ModeSample& s : traj.samples())
        worst = std::max(worst, std::abs(s.u - stationary_vacuum(spec, s.t).u));
    CHECK(worst < 1e-10);
}

TEST_CASE("integration errors") {
    const auto spec = OscillatorSpec::constant(1.0, 1.0, {0.0, 5.0});
    const ModeSample init = init_minimum_uncertainty(spec, 0.0);
    const double ok[] = {1.0};
    const double outside[] = {6.0};
    CHECK_CODE(integrate_mode(spec, init, 6.0, 1e-12, outside), ErrorCode::domain);
    CHECK_CODE(integrate_mode(spec, init, 1.0, 0.0, ok), ErrorCode::invalid_argument);
    CHECK_CODE(integrate_mode(spec, init, 1.0, 1e-12, std::span<const double>{}),
               ErrorCode::invalid_argument);

    ModeSample bad = init;
    bad.u *= 2.0;
    CHECK_CODE(integrate_mode(spec, bad, 1.0, 1e-12, ok), ErrorCode::invalid_argument);

    // an inverted oscillator grows like e^t, so the absolute Wronskian error
    // eventually exceeds 1e3 tol
    const auto inverted = OscillatorSpec::constant(1.0, -1.0);
    const double far[] = {60.0};
    CHECK_CODE(integrate_mode(inverted, init, 60.0, 1e-12, far), ErrorCode::integration_failure);
}

TEST_CASE("uniform grid") {
    const auto g = uniform_grid(0.0, 1.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g[2] == 0.5);
    CHECK(g.back() == 1.0);
    CHECK_CODE(uniform_grid(0.0, 1.0, 1), ErrorCode::invalid_argument);
}

}
