#include "tdho/desitter.hpp"

#include "tdho/error.hpp"
#include "tdho/hankel.hpp"
#include "tdho/invariant_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace tdho {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinSeedZ = 50.0;

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must be positive and finite (got " << v << ")";
        fail(ErrorCode::invalid_argument, os.str());
    }
}

DeSitterSpec make_spec(double H0, double m, double m_sq, double k, OrderPolicy policy,
                       Parity parity) {
    DeSitterSpec s;
    s.H0 = H0;
    s.m = m;
    s.m_sq = m_sq;
    s.k = k;
    s.parity = parity;
    s.chi_sq = 2.25 - m_sq / (H0 * H0);
    if (s.chi_sq < 0.0) {
        if (policy == OrderPolicy::real_only) {
            std::ostringstream os;
            os << "m = " << m << " exceeds 3 H0 / 2 = " << 1.5 * H0
               << "; the Hankel order is imaginary (use the integrator path)";
            fail(ErrorCode::imaginary_order, os.str());
        }
        s.chi = 0.0;
    } else {
        s.chi = std::sqrt(s.chi_sq);
    }
    return s;
}

// sqrt(pi/(4 H0)) e^{-3 H0 t / 2} times (h, dh/dz) with dz/dt = -H0 z.
ModeSample assemble(const DeSitterSpec& spec, double t, double z, cplx h, cplx dh) {
    const double scale = std::sqrt(kPi / (4.0 * spec.H0)) * std::exp(-1.5 * spec.H0 * t);
    ModeSample s;
    s.t = t;
    s.mass = std::exp(3.0 * spec.H0 * t);
    s.u = scale * h;
    s.du = scale * (-1.5 * spec.H0 * h - spec.H0 * z * dh);
    return s;
}

}  // namespace

DeSitterSpec derive_spec(double H0, double m, double k, OrderPolicy policy, Parity parity) {
    check_positive(H0, "H0");
    check_positive(k, "k");
    if (!(m >= 0.0) || !std::isfinite(m))
        fail(ErrorCode::invalid_argument, "field mass must be >= 0");
    return make_spec(H0, m, m * m, k, policy, parity);
}

DeSitterSpec derive_spec_mass_sq(double H0, double m_sq, double k, OrderPolicy policy,
                                 Parity parity) {
    check_positive(H0, "H0");
    check_positive(k, "k");
    if (!(m_sq >= 0.0) || !std::isfinite(m_sq))
        fail(ErrorCode::invalid_argument, "field mass squared must be >= 0");
    return make_spec(H0, std::sqrt(m_sq), m_sq, k, policy, parity);
}

double z_at_time(const DeSitterSpec& spec, double t) {
    return spec.k / spec.H0 * std::exp(-spec.H0 * t);
}

double time_at_z(const DeSitterSpec& spec, double z) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        std::ostringstream os;
        os << "z = " << z << " must be positive";
        fail(ErrorCode::domain, os.str());
    }
    return -std::log(z * spec.H0 / spec.k) / spec.H0;
}

OscillatorSpec oscillator_for(const DeSitterSpec& spec) {
    return OscillatorSpec::desitter_mode(spec.params(), 1.0);
}

ModeSample bunch_davies_mode(const DeSitterSpec& spec, double t) {
    if (!spec.real_order())
        fail(ErrorCode::imaginary_order, "analytic mode needs a real Hankel order");
    const double z = z_at_time(spec, t);
    // Positive frequency in t is carried by H1 = conj(H2) for real order and argument.
    const HankelValue h2 = hankel_h2(spec.chi, z);
    return assemble(spec, t, z, std::conj(h2.value), std::conj(h2.derivative));
}

ModeSample bd_init_sample(const DeSitterSpec& spec, double z_start) {
    if (!(z_start >= kMinSeedZ) || !std::isfinite(z_start)) {
        std::ostringstream os;
        os << "z_start = " << z_start << " is below " << kMinSeedZ
           << "; the asymptotic seed is not accurate there";
        fail(ErrorCode::asymptotic_regime, os.str());
    }
    const detail::AsymptoticSum sum = detail::hankel_asymptotic_sum(4.0 * spec.chi_sq, z_start);
    if (sum.last_term > 1e-10) {
        std::ostringstream os;
        os << "asymptotic series stalls at a term of size " << sum.last_term << " for z = "
           << z_start << "; raise z_start";
        fail(ErrorCode::asymptotic_regime, os.str());
    }
    // H1 ~ sqrt(2/(pi z)) e^{i(z - chi pi/2 - pi/4)} conj(sum). For imaginary
    // order the e^{mu pi/2} growth cancels against the mode normalization and
    // only e^{-i pi/4} remains.
    const double amp = std::sqrt(2.0 / (kPi * z_start));
    const double const_phase = (spec.real_order() ? -spec.chi * kPi / 2.0 : 0.0) - kPi / 4.0;
    const cplx pre = amp * std::polar(1.0, const_phase) * std::polar(1.0, z_start);
    const cplx s = std::conj(sum.s), ds = std::conj(sum.ds);
    const cplx h = pre * s;
    const cplx dh = pre * ((-0.5 / z_start + cplx{0.0, 1.0}) * s + ds);
    return assemble(spec, time_at_z(spec, z_start), z_start, h, dh);
}

double mode_equation_residual(std::span<const ModeSample> samples, const DeSitterSpec& spec) {
    if (samples.size() < 3)
        fail(ErrorCode::insufficient_data, "mode equation residual needs at least 3 samples");
    const double h = samples[1].t - samples[0].t;
    if (!(h > 0.0))
        fail(ErrorCode::invalid_argument, "samples must increase in t");
    for (std::size_t i = 2; i < samples.size(); ++i)
        if (std::abs((samples[i].t - samples[i - 1].t) - h) > 1e-8 * h)
            fail(ErrorCode::invalid_argument, "mode equation residual needs a uniform grid");
    double umax = 0.0;
    for (const ModeSample& s : samples) umax = std::max(umax, std::abs(s.u));
    if (!(umax > 0.0))
        fail(ErrorCode::decomposition, "mode vanishes identically");
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        const ModeSample& s = samples[i];
        const cplx ddu = (samples[i + 1].du - samples[i - 1].du) / (2.0 * h);
        const double w2 = spec.m_sq + spec.k * spec.k * std::exp(-2.0 * spec.H0 * s.t);
        worst = std::max(worst, std::abs(ddu + 3.0 * spec.H0 * s.du + w2 * s.u));
    }
    return worst / umax;
}

double mode_equation_residual(const ModeTrajectory& trajectory, const DeSitterSpec& spec) {
    return mode_equation_residual(trajectory.samples(), spec);
}

BunchDaviesComparison compare_bunch_davies(const DeSitterSpec& spec, double z_start, double z_end,
                                           std::size_t samples, double tol) {
    if (!(z_end > 0.0) || !(z_end < z_start))
        fail(ErrorCode::invalid_argument, "need 0 < z_end < z_start");
    const ModeSample seed = bd_init_sample(spec, z_start);
    const double t_end = time_at_z(spec, z_end);
    const std::vector<double> grid = uniform_grid(seed.t, t_end, samples);
    ModeTrajectory numeric = integrate_mode(oscillator_for(spec), seed, t_end, tol, grid);

    BunchDaviesComparison out{std::move(numeric), {}, 0.0, 0.0, 0.0, 0.0};
    for (const ModeSample& s : out.numeric.samples())
        out.max_wronskian_numeric = std::max(out.max_wronskian_numeric, wronskian_residual(s));
    if (!spec.real_order()) return out;

    out.analytic.reserve(out.numeric.size());
    for (const ModeSample& s : out.numeric.samples()) {
        const ModeSample a = bunch_davies_mode(spec, s.t);
        out.max_rel_dev_u = std::max(out.max_rel_dev_u, std::abs(s.u - a.u) / std::abs(a.u));
        out.max_rel_dev_du = std::max(out.max_rel_dev_du, std::abs(s.du - a.du) / std::abs(a.du));
        out.max_wronskian_analytic = std::max(out.max_wronskian_analytic, wronskian_residual(a));
        out.analytic.push_back(a);
    }
    return out;
}

std::vector<KScanRow> k_scan(double H0, double m_sq, std::span<const double> ks, double z_start,
                             double z_end, std::size_t n, double tol) {
    if (ks.empty())
        fail(ErrorCode::invalid_argument, "k list is empty");
    if (!(z_end > 0.0) || !(z_end < z_start))
        fail(ErrorCode::invalid_argument, "need 0 < z_end < z_start");
    std::vector<KScanRow> rows;
    rows.reserve(ks.size() * n);
    for (double k : ks) {
        const DeSitterSpec spec =
            derive_spec_mass_sq(H0, m_sq, k, OrderPolicy::allow_imaginary);
        const OscillatorSpec osc = oscillator_for(spec);
        const std::vector<double> grid =
            uniform_grid(time_at_z(spec, z_start), time_at_z(spec, z_end), n);
        std::vector<ModeSample> modes;
        if (spec.real_order()) {
            for (double t : grid) modes.push_back(bunch_davies_mode(spec, t));
        } else {
            const ModeSample seed = bd_init_sample(spec, z_start);
            const ModeTrajectory traj = integrate_mode(osc, seed, grid.back(), tol, grid);
            modes.assign(traj.samples().begin(), traj.samples().end());
        }
        for (const ModeSample& s : modes)
            rows.push_back({k, s.t, z_at_time(spec, s.t), s.u, uncertainty_product(s),
                            energy_expectation(s, osc).epsilon, wronskian_residual(s)});
    }
    return rows;
}

}  // namespace tdho
