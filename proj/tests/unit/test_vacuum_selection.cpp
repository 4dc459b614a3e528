#include "support.hpp"

#include "tdho/desitter.hpp"
#include "tdho/vacuum_selection.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace tdho;
using std::numbers::pi;

namespace {

ModeTrajectory stationary_base(double omega, std::size_t n) {
    const auto spec = OscillatorSpec::constant(1.0, omega * omega);
    std::vector<ModeSample> s;
    for (double t : uniform_grid(0.0, 2 * pi / omega, n)) s.push_back(stationary_vacuum(spec, t));
    return trajectory_from_samples(spec, std::move(s));
}

}  // namespace

TEST_SUITE("vacuum-selection") {

TEST_CASE("vacuum wins the max-over-window scan") {
    const auto base = stationary_base(1.0, 1601);
    const double r[] = {0.0, 0.25, 0.5, 1.0};
    const double d[] = {0.0};
    const auto rep = scan_squeeze_grid(base, r, d, Functional::max_over_window, {0.0, 2 * pi});
    CHECK(rep.argmin_r == 0.0);
    CHECK(rep.argmin_value == doctest::Approx(0.5).epsilon(1e-12));
    REQUIRE(rep.points.size() == 4);
    CHECK(rep.points[2].value == doctest::Approx(std::cosh(1.0) / 2).epsilon(1e-8));
    CHECK(rep.margin >= 0.5 * (std::cosh(0.5) - 1.0) - 1e-9);
}

TEST_CASE("mean and at-time functionals") {
    const auto base = stationary_base(1.0, 1601);
    const double r[] = {0.0, 0.5};
    const double d[] = {0.0, pi / 2};
    const auto mean = scan_squeeze_grid(base, r, d, Functional::mean_over_window, {0.0, 2 * pi});
    CHECK(mean.argmin_r == 0.0);
    // time average of the product over a period exceeds the vacuum value
    CHECK(mean.points.back().value > 0.5);

    // at t = 0 with delta = 0 the squeezed product is also minimal: a tie,
    // broken toward the smallest r
    const auto at = scan_squeeze_grid(base, r, d, Functional::at_time, {0.0, 2 * pi}, 0.0);
    CHECK(at.argmin_r == 0.0);
    CHECK(at.points[2].value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("reduction tie-breaking and margin") {
    std::vector<SelectionPoint> pts = {{0.5, 1.0, 0.4}, {0.25, 2.0, 0.4}, {0.25, 1.0, 0.4}, {0.0, 0.0, 0.9}};
    const auto rep = reduce_selection(pts, Functional::max_over_window);
    CHECK(rep.argmin_r == 0.25);
    CHECK(rep.argmin_delta == 1.0);
    CHECK(rep.margin == doctest::Approx(0.0));

    // delta is irrelevant at r = 0, so those points are the same state
    std::vector<SelectionPoint> same = {{0.0, 0.0, 0.5}, {0.0, 1.0, 0.5}};
    CHECK(reduce_selection(same, Functional::max_over_window).margin ==
          std::numeric_limits<double>::infinity());
    CHECK_CODE(reduce_selection({}, Functional::max_over_window), ErrorCode::invalid_argument);
}

TEST_CASE("scan errors") {
    const auto base = stationary_base(1.0, 101);
    const double r[] = {0.0, 0.5};
    const double r_no_zero[] = {0.5};
    const double d[] = {0.0};
    CHECK_CODE(scan_squeeze_grid(base, {}, d, Functional::max_over_window, {0, 1}), ErrorCode::invalid_argument);
    CHECK_CODE(scan_squeeze_grid(base, r, {}, Functional::max_over_window, {0, 1}), ErrorCode::invalid_argument);
    CHECK_CODE(scan_squeeze_grid(base, r_no_zero, d, Functional::max_over_window, {0, 1}),
               ErrorCode::invalid_argument);
    CHECK_CODE(scan_squeeze_grid(base, r, d, Functional::max_over_window, {-1.0, 1.0}), ErrorCode::domain);
    CHECK_CODE(scan_squeeze_grid(base, r, d, Functional::at_time, {0.0, 1.0}, 3.0), ErrorCode::domain);
    CHECK(parse_functional("mean") == Functional::mean_over_window);
    CHECK(std::string(functional_name(Functional::at_time)) == "at-time");
    CHECK_CODE(parse_functional("median"), ErrorCode::invalid_argument);
}

TEST_CASE("Bunch-Davies base selects r = 0") {
    const auto s = derive_spec_mass_sq(1.0, 2.0, 1.0);
    const double t0 = time_at_z(s, 50.0), t1 = time_at_z(s, 5.0);
    std::vector<ModeSample> samples;
    for (double t : uniform_grid(t0, t1, 2001)) samples.push_back(bunch_davies_mode(s, t));
    const auto base = trajectory_from_samples(oscillator_for(s), std::move(samples));
    const double r[] = {0.0, 0.25, 0.5, 1.0};
    std::vector<double> d;
    for (int i = 0; i < 8; ++i) d.push_back(i * pi / 4);
    const auto rep = scan_squeeze_grid(base, r, d, Functional::max_over_window, {t0, t1});
    CHECK(rep.argmin_r == 0.0);
    CHECK(rep.margin > 0.0);
}

TEST_CASE("inequalities at nu = 0 hold with equality") {
    const auto base = stationary_base(1.0, 201);
    const auto rep = verify_inequalities(base, polar_to_bogoliubov(0.0, 0.0));
    CHECK(rep.rows.size() == 201);
    CHECK(std::abs(rep.worst_product_a) <= 1e-12);
    CHECK(std::abs(rep.worst_product_b) <= 1e-12);
    CHECK(std::abs(rep.worst_energy_a) <= 1e-12);
    CHECK(std::abs(rep.worst_energy_b) <= 1e-12);
}

TEST_CASE("random squeezes on the stationary base") {
    const auto base = stationary_base(1.3, 301);
    auto gen = test::rng();
    std::uniform_real_distribution<double> r(0.0, 2.0), d(0.0, 2 * pi);
    for (int i = 0; i < 200; ++i) {
        const auto rep = verify_inequalities(base, polar_to_bogoliubov(r(gen), d(gen)));
        CHECK(rep.pass_a);
        CHECK(rep.pass_b);
    }
}

TEST_CASE("verification on a subset of times") {
    const auto base = stationary_base(1.0, 101);
    const double ts[] = {0.0, 1.0, 2.0};
    const auto rep = verify_inequalities(base, polar_to_bogoliubov(0.3, 0.2), ts);
    CHECK(rep.rows.size() == 3);
    const double outside[] = {100.0};
    CHECK_CODE(verify_inequalities(base, polar_to_bogoliubov(0.3, 0.2), outside), ErrorCode::domain);
}

}
