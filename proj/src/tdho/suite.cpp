#include "tdho/suite.hpp"

#include "tdho/desitter.hpp"
#include "tdho/hankel.hpp"
#include "tdho/invariant_states.hpp"
#include "tdho/mode_solver.hpp"
#include "tdho/squeeze.hpp"
#include "tdho/vacuum_selection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace tdho {

namespace {

constexpr double kPi = std::numbers::pi;

struct Collector {
    std::vector<CheckResult> out;

    void at_most(const std::string& name, double measured, double bound, bool gating = true) {
        out.push_back({name, measured, bound, true, measured <= bound, gating});
    }
    void at_least(const std::string& name, double measured, double bound, bool gating = true) {
        out.push_back({name, measured, bound, false, measured >= bound, gating});
    }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

ModeTrajectory vacuum_run(double omega, double t_end, std::size_t n, double tol) {
    const OscillatorSpec spec = OscillatorSpec::constant(1.0, omega * omega);
    const std::vector<double> grid = uniform_grid(0.0, t_end, n);
    return integrate_mode(spec, init_minimum_uncertainty(spec, 0.0), t_end, tol, grid);
}

ModeTrajectory mixed(const ModeTrajectory& base, const SqueezeParams& p) {
    std::vector<ModeSample> s;
    s.reserve(base.size());
    for (const ModeSample& b : base.samples()) s.push_back(mix_mode(b, p));
    return trajectory_from_samples(base.spec(), std::move(s));
}

void mode_checks(Collector& c, double tol) {
    const OscillatorSpec modulated = OscillatorSpec::custom(1.0, [](double t) {
        const double w = 1.0 + 0.5 * std::sin(0.3 * t);
        return w * w;
    });
    const std::vector<double> grid = uniform_grid(0.0, 100.0, 1001);
    const ModeTrajectory run =
        integrate_mode(modulated, init_minimum_uncertainty(modulated, 0.0), 100.0, tol, grid);
    c.at_most("wronskian_drift_modulated_T100", run.max_wronskian_drift(), 1e-9);

    const ModeTrajectory longrun = vacuum_run(1.0, 1e4, 101, tol);
    c.at_most("wronskian_drift_constant_T1e4", longrun.max_wronskian_drift(), 1e-9);

    const ModeTrajectory v = vacuum_run(1.0, kPi, 2, tol);
    c.at_most("vacuum_at_pi_vs_exact",
              std::abs(v[1].u - std::polar(1.0 / std::sqrt(2.0), -kPi)), 1e-9);
}

void state_checks(Collector& c, double tol) {
    const OscillatorSpec spec = OscillatorSpec::constant(1.0, 1.0);
    const ModeSample vac = init_minimum_uncertainty(spec, 0.0);
    c.at_most("vacuum_product_analytic", std::abs(uncertainty_product(vac) - 0.5), 1e-12);

    const ModeTrajectory base = vacuum_run(1.0, 2.0 * kPi, 6284, tol);
    double dev = 0.0;
    for (const ModeSample& s : base.samples())
        dev = std::max(dev, std::abs(uncertainty_product(s) - 0.5));
    c.at_most("vacuum_product_ode", dev, 1e-9);

    // Identities exact for Wronskian-exact samples are checked on the closed-form base.
    const SqueezeParams p = polar_to_bogoliubov(0.7, 1.1);
    double rs = 0.0, comm = 0.0, frame = 0.0;
    for (double t : uniform_grid(0.0, 2.0 * kPi, 1001)) {
        const ModeSample s = mix_mode(stationary_vacuum(spec, t), p);
        const UncertaintyReport m = moments(s);
        rs = std::max(rs, std::abs(m.var_q * m.var_p - m.cov_qp * m.cov_qp - 0.25));
        comm = std::max(comm, std::abs(ladder_commutator(ladder_coefficients(s)) - 1.0));
        frame = std::max(frame, rel(energy_from_frame(ermakov_frame(s, 1.0), 1.0),
                                    energy_expectation(s, spec).epsilon));
    }
    c.at_most("robertson_schrodinger_saturation", rs, 1e-12);
    c.at_most("ladder_commutator", comm, 1e-12);
    c.at_most("energy_frame_agreement", frame, 1e-8);
    c.at_most("gaussian_norm",
              std::abs(gaussian_norm(gaussian_state(mix_mode(base[1000], p))) - 1.0), 1e-6);

    const ModeTrajectory fine = vacuum_run(1.0, 10.0, 10001, tol);
    c.at_most("ermakov_residual_vacuum", ermakov_residual(fine), 1e-6);
    // Central differences carry an h^2/12 xi'''' truncation that grows quickly
    // with squeezing; at h = 1e-3 the eps = omega state sits near 2.5e-5, so
    // that reading is reported and the gate uses h = 1e-4 on the exact mode.
    const SqueezeParams pe = squeeze_from_energy(1.0, 1.0);
    c.at_most("ermakov_residual_squeezed_h1e-3", ermakov_residual(mixed(fine, pe)), 1e-6, false);
    std::vector<ModeSample> exact;
    for (double t : uniform_grid(0.0, 2.0, 20001))
        exact.push_back(mix_mode(stationary_vacuum(spec, t), pe));
    c.at_most("ermakov_residual_squeezed_h1e-4",
              ermakov_residual(trajectory_from_samples(spec, std::move(exact))), 1e-6);
}

void squeeze_checks(Collector& c) {
    double xi_err = 0.0;
    for (auto [eps, omega] : {std::pair{0.5, 1.0}, {1.0, 1.0}, {2.0, 2.0}, {3.0, 1.0}}) {
        const OscillatorSpec spec = OscillatorSpec::constant(1.0, omega * omega);
        const SqueezeParams p = squeeze_from_energy(eps, omega);
        for (double t : uniform_grid(0.0, kPi / omega, 257)) {
            const ModeSample s = mix_mode(stationary_vacuum(spec, t), p);
            xi_err = std::max(xi_err, rel(2.0 * std::norm(s.u), closed_form_xi_sq(eps, omega, t)));
        }
    }
    c.at_most("closed_form_xi_sq", xi_err, 1e-8);

    double rt = 0.0;
    for (double ratio : {0.5, 1.0, 3.5}) {
        const double omega = 1.3;
        const OscillatorSpec spec = OscillatorSpec::constant(1.0, omega * omega);
        const ModeSample s = mix_mode(stationary_vacuum(spec, 0.4), squeeze_from_energy(ratio * omega, omega));
        rt = std::max(rt, rel(energy_expectation(s, spec).epsilon, ratio * omega));
    }
    c.at_most("squeeze_energy_roundtrip", rt, 1e-10);

    const OscillatorSpec unit = OscillatorSpec::constant(1.0, 1.0);
    const SqueezeParams p = polar_to_bogoliubov(0.5, 0.0);
    double lo = 1e300, hi = 0.0;
    for (double t : uniform_grid(0.0, kPi, 1025)) {
        const double v = uncertainty_product(mix_mode(stationary_vacuum(unit, t), p));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const auto [emin, emax] = uncertainty_extrema(p);
    c.at_most("uncertainty_extrema_max", std::abs(hi - emax), 1e-8);
    c.at_most("uncertainty_extrema_min", std::abs(lo - emin), 1e-8);
}

void selection_checks(Collector& c, double tol) {
    const ModeTrajectory base = vacuum_run(1.0, 2.0 * kPi, 1601, tol);
    const double rs[] = {0.0, 0.25, 0.5, 1.0};
    const double ds[] = {0.0};
    const SelectionReport rep = scan_squeeze_grid(base, rs, ds, Functional::max_over_window,
                                                  {0.0, 2.0 * kPi});
    c.at_most("selection_argmin_r", rep.argmin_r, 0.0);
    c.at_most("selection_argmin_value", std::abs(rep.argmin_value - 0.5), 1e-9);
    c.at_least("selection_margin", rep.margin, 0.5 * (std::cosh(0.5) - 1.0) - 1e-9);

    const DeSitterSpec bd = derive_spec_mass_sq(1.0, 2.0, 1.0);
    std::vector<ModeSample> samples;
    for (double t : uniform_grid(time_at_z(bd, 50.0), time_at_z(bd, 5.0), 2001))
        samples.push_back(bunch_davies_mode(bd, t));
    const ModeTrajectory bdt = trajectory_from_samples(oscillator_for(bd), std::move(samples));
    const double dgrid[] = {0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi, 5 * kPi / 4, 3 * kPi / 2,
                            7 * kPi / 4};
    const SelectionReport brep = scan_squeeze_grid(bdt, rs, dgrid, Functional::max_over_window,
                                                   {bdt[0].t, bdt[bdt.size() - 1].t});
    c.at_most("selection_argmin_r_bunch_davies", brep.argmin_r, 0.0);
}

void hankel_checks(Collector& c) {
    double oracle = 0.0;
    for (double z = 0.1; z <= 100.0; z *= 1.05) {
        const std::complex<double> exact =
            std::complex<double>{0.0, 1.0} * std::sqrt(2.0 / (kPi * z)) * std::polar(1.0, -z);
        oracle = std::max(oracle, std::abs(hankel_h2(0.5, z).value - exact) / std::abs(exact));
    }
    c.at_most("hankel_half_integer_oracle", oracle, 1e-10);

    double wr = 0.0;
    for (double chi : {0.0, 0.2, 0.5, 0.75, 1.0, std::sqrt(5.0) / 2.0, 1.5})
        for (double z = 1e-2; z <= 1e4; z *= 1.2) {
            const HankelValue h = hankel_h2(chi, z);
            const double j = h.value.real(), y = -h.value.imag();
            const double dj = h.derivative.real(), dy = -h.derivative.imag();
            const double target = 2.0 / (kPi * z);
            wr = std::max(wr, std::abs(j * dy - dj * y - target) / target);
        }
    c.at_most("bessel_wronskian_identity", wr, 1e-10);
}

void desitter_checks(Collector& c, double tol) {
    const DeSitterSpec spec = derive_spec_mass_sq(1.0, 2.0, 1.0);
    const BunchDaviesComparison cmp = compare_bunch_davies(spec, 50.0, 0.5, 2001, tol);
    c.at_most("bunch_davies_ode_vs_analytic", std::max(cmp.max_rel_dev_u, cmp.max_rel_dev_du), 1e-6);
    c.at_most("bunch_davies_wronskian",
              std::max(cmp.max_wronskian_analytic, cmp.max_wronskian_numeric), 1e-8);

    const double d2 = std::abs(uncertainty_product(bunch_davies_mode(spec, time_at_z(spec, 1e2))) - 0.5);
    const double d3 = std::abs(uncertainty_product(bunch_davies_mode(spec, time_at_z(spec, 1e3))) - 0.5);
    c.at_most("early_time_product_z1e3", d3, 1e-3);
    c.at_most("early_time_monotone_z1e3_vs_z1e2", d3 - d2, 0.0);

    const DeSitterSpec heavy = derive_spec_mass_sq(1.0, 4.0, 1.0, OrderPolicy::allow_imaginary);
    c.at_most("heavy_seed_wronskian", wronskian_residual(bd_init_sample(heavy, 100.0)), 1e-9);
}

void inequality_checks(Collector& c, const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> rdist(0.0, 2.0), ddist(0.0, 2.0 * kPi);

    const ModeTrajectory cbase = vacuum_run(1.0, 2.0 * kPi, 801, o.tol);
    const DeSitterSpec bd = derive_spec_mass_sq(1.0, 2.0, 1.0);
    std::vector<ModeSample> samples;
    for (double t : uniform_grid(time_at_z(bd, 50.0), time_at_z(bd, 5.0), 801))
        samples.push_back(bunch_davies_mode(bd, t));
    const ModeTrajectory bbase = trajectory_from_samples(oscillator_for(bd), std::move(samples));

    double ca = 1e300, cb = 1e300, ba = 1e300, bb = 1e300;
    for (int i = 0; i < o.random_params; ++i) {
        const double r = rdist(rng), d = ddist(rng);
        const SqueezeParams p = polar_to_bogoliubov(r, d);
        const InequalityReport cr = verify_inequalities(cbase, p);
        const InequalityReport br = verify_inequalities(bbase, p);
        ca = std::min({ca, cr.worst_product_a, cr.worst_energy_a});
        cb = std::min({cb, cr.worst_product_b, cr.worst_energy_b});
        ba = std::min({ba, br.worst_product_a, br.worst_energy_a});
        bb = std::min({bb, br.worst_product_b, br.worst_energy_b});
    }
    c.at_least("inequality_a_constant_base", ca, -kBoundTolA);
    c.at_least("inequality_a_bunch_davies_base", ba, -kBoundTolA);
    c.at_least("inequality_b_constant_base", cb, -kBoundTolB);
    // The unconditional claim fails on the Bunch-Davies base at finite z (the
    // base itself is not a minimum-uncertainty state there); reported only.
    c.at_least("inequality_b_bunch_davies_base", bb, -kBoundTolB, false);
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const SuiteOptions& options) {
    Collector c;
    mode_checks(c, options.tol);
    state_checks(c, options.tol);
    squeeze_checks(c);
    selection_checks(c, options.tol);
    hankel_checks(c);
    desitter_checks(c, options.tol);
    inequality_checks(c, options);
    return std::move(c.out);
}

bool suite_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed || !r.gating; });
}

}  // namespace tdho
