#include "support.hpp"

#include "tdho/desitter.hpp"
#include "tdho/invariant_states.hpp"

#include <cmath>
#include <numbers>

using namespace tdho;
using std::numbers::pi;

namespace {

// u for chi = 1/2 from the elementary form of the Hankel function, with the
// positive-frequency (e^{+iz}) branch that the library assembles.
cplx half_integer_mode(double H0, double k, double t) {
    const double z = (k / H0) * std::exp(-H0 * t);
    const cplx h = cplx{0.0, -1.0} * std::sqrt(2.0 / (pi * z)) * std::exp(cplx{0.0, z});
    return std::sqrt(pi / (4.0 * H0)) * std::exp(-1.5 * H0 * t) * h;
}

}  // namespace

TEST_SUITE("desitter-modes") {

TEST_CASE("Hankel order from the field mass") {
    CHECK(derive_spec(1.0, 1.5, 1.0).chi == 0.0);
    CHECK(derive_spec(1.0, 1.0, 1.0).chi == doctest::Approx(std::sqrt(5.0) / 2).epsilon(1e-15));
    CHECK(derive_spec_mass_sq(1.0, 2.0, 1.0).chi == 0.5);
    CHECK(derive_spec(2.0, 0.0, 1.0).chi == 1.5);
    CHECK_CODE(derive_spec(1.0, 1.6, 1.0), ErrorCode::imaginary_order);
    const auto im = derive_spec(1.0, 1.6, 1.0, OrderPolicy::allow_imaginary);
    CHECK(im.chi_sq < 0.0);
    CHECK_FALSE(im.real_order());
    CHECK_CODE(derive_spec(0.0, 1.0, 1.0), ErrorCode::invalid_argument);
    CHECK_CODE(derive_spec(1.0, -1.0, 1.0), ErrorCode::invalid_argument);
}

TEST_CASE("z and t conversions") {
    const auto s = derive_spec_mass_sq(1.0, 2.0, 3.0);
    CHECK(z_at_time(s, 0.0) == 3.0);
    CHECK(z_at_time(s, time_at_z(s, 50.0)) == doctest::Approx(50.0).epsilon(1e-15));
    CHECK_CODE(time_at_z(s, 0.0), ErrorCode::domain);
}

TEST_CASE("Bunch-Davies mode at chi = 1/2") {
    const auto s = derive_spec_mass_sq(1.0, 2.0, 1.0);
    const ModeSample u0 = bunch_davies_mode(s, 0.0);
    CHECK(std::abs(u0.u.real()) == doctest::Approx(0.59502).epsilon(1e-5));
    CHECK(std::abs(u0.u.imag()) == doctest::Approx(0.38206).epsilon(1e-4));
    CHECK(u0.mass == 1.0);
    for (double t : {-4.0, -1.0, 0.0, 1.5, 3.0})
        CHECK(test::rel(bunch_davies_mode(s, t).u, half_integer_mode(1.0, 1.0, t)) < 1e-12);
}

TEST_CASE("Bunch-Davies mode is Wronskian-normalized") {
    for (double msq : {0.0, 0.5, 1.0, 2.0, 2.25}) {
        const auto s = derive_spec_mass_sq(1.0, msq, 1.3);
        for (double z : {0.02, 0.5, 3.0, 14.9, 15.1, 80.0, 1e3}) {
            CAPTURE(msq);
            CAPTURE(z);
            CHECK(wronskian_residual(bunch_davies_mode(s, time_at_z(s, z))) < 1e-8);
        }
    }
    CHECK_CODE(bunch_davies_mode(derive_spec(1.0, 2.0, 1.0, OrderPolicy::allow_imaginary), 0.0),
               ErrorCode::imaginary_order);
}

TEST_CASE("early-time uncertainty product approaches one half") {
    const auto s = derive_spec_mass_sq(1.0, 2.0, 1.0);
    const double p2 = uncertainty_product(bunch_davies_mode(s, time_at_z(s, 1e2)));
    const double p3 = uncertainty_product(bunch_davies_mode(s, time_at_z(s, 1e3)));
    CHECK(std::abs(p3 - 0.5) < 1e-3);
    CHECK(std::abs(p3 - 0.5) < std::abs(p2 - 0.5));
}

TEST_CASE("asymptotic seed") {
    const auto half = derive_spec_mass_sq(1.0, 2.0, 1.0);
    const ModeSample a = bd_init_sample(half, 100.0);
    CHECK(test::rel(a.u, half_integer_mode(1.0, 1.0, a.t)) < 1e-10);
    CHECK(wronskian_residual(a) < 1e-9);

    const auto massive = derive_spec(1.0, 1.5, 1.0);
    CHECK(std::abs(uncertainty_product(bd_init_sample(massive, 100.0)) - 0.5) < 1e-3);

    for (double msq : {0.0, 1.0, 3.0, 10.0}) {
        const auto s = derive_spec_mass_sq(1.0, msq, 1.0, OrderPolicy::allow_imaginary);
        CHECK(wronskian_residual(bd_init_sample(s, 100.0)) < 1e-12);
    }
    CHECK_CODE(bd_init_sample(half, 49.0), ErrorCode::asymptotic_regime);
}

TEST_CASE("mode equation residual") {
    const auto s = derive_spec_mass_sq(1.0, 2.0, 1.0);
    // z in [0.5, 1] on a step of 1e-3 in t
    const double t0 = time_at_z(s, 1.0), t1 = time_at_z(s, 0.5);
    std::vector<ModeSample> samples;
    for (double t : uniform_grid(t0, t1, static_cast<std::size_t>(std::round((t1 - t0) / 1e-3)) + 1))
        samples.push_back(bunch_davies_mode(s, t));
    CHECK(mode_equation_residual(samples, s) < 1e-5);
    CHECK(mode_equation_residual(samples, derive_spec_mass_sq(1.0, 2.0, 2.0)) > 1e-1);
    CHECK_CODE(mode_equation_residual(std::span(samples).first(2), s), ErrorCode::insufficient_data);

    const auto traj = integrate_mode(oscillator_for(s), bunch_davies_mode(s, t0), t1, 1e-12,
                                     uniform_grid(t0, t1, samples.size()));
    CHECK(mode_equation_residual(traj, s) < 1e-5);
}

TEST_CASE("integrator reproduces the analytic mode from the asymptotic seed") {
    const auto s = derive_spec_mass_sq(1.0, 2.0, 1.0);
    const auto cmp = compare_bunch_davies(s, 50.0, 0.5, 2001, 1e-12);
    CHECK(cmp.max_rel_dev_u < 1e-6);
    CHECK(cmp.max_rel_dev_du < 1e-6);
    CHECK(cmp.max_wronskian_numeric < 1e-8);
    CHECK(cmp.max_wronskian_analytic < 1e-8);
    CHECK(cmp.analytic.size() == cmp.numeric.size());

    const auto heavy = derive_spec_mass_sq(1.0, 4.0, 1.0, OrderPolicy::allow_imaginary);
    const auto h = compare_bunch_davies(heavy, 50.0, 0.5, 401, 1e-12);
    CHECK(h.analytic.empty());
    CHECK(h.max_wronskian_numeric < 1e-8);
}

TEST_CASE("k scan") {
    const double ks[] = {0.5, 1.0, 2.0};
    const auto rows = k_scan(1.0, 2.0, ks, 50.0, 0.5, 11, 1e-12);
    REQUIRE(rows.size() == 33);
    CHECK(rows.front().k == 0.5);
    CHECK(rows.front().z == doctest::Approx(50.0));
    CHECK(rows[10].z == doctest::Approx(0.5));
    for (const auto& r : rows) CHECK(r.wronskian_residual < 1e-8);

    const auto heavy = k_scan(1.0, 4.0, std::span(ks).first(1), 50.0, 0.5, 11, 1e-12);
    CHECK(heavy.size() == 11);
    CHECK_CODE(k_scan(1.0, 2.0, {}, 50.0, 0.5, 11, 1e-12), ErrorCode::invalid_argument);
    CHECK_CODE(k_scan(1.0, 2.0, ks, 0.5, 50.0, 11, 1e-12), ErrorCode::invalid_argument);
}

}
