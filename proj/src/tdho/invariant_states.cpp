#include "tdho/invariant_states.hpp"

#include "tdho/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace tdho {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

double wrap_phase(double d) {
    d = std::remainder(d, 2.0 * kPi);
    return d;
}

template <class F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double adaptive_simpson(F f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

ErmakovFrame ermakov_frame(const ModeSample& s, double m0) {
    const double a = std::abs(s.u);
    if (!(a > 0.0) || !std::isfinite(a)) {
        std::ostringstream os;
        os << "mode vanishes at t = " << s.t << "; no polar decomposition";
        fail(ErrorCode::decomposition, os.str());
    }
    const double root = std::sqrt(2.0 * m0);
    return {s.t, root * a, root * std::real(s.du * std::conj(s.u)) / a, -std::arg(s.u)};
}

std::vector<ErmakovFrame> ermakov_frame(const ModeTrajectory& trajectory) {
    const OscillatorSpec& spec = trajectory.spec();
    if (!spec.has_constant_mass())
        fail(ErrorCode::unsupported_kind,
             std::string("Ermakov frame requires constant mass; got kind ") + kind_name(spec.kind()));
    std::vector<ErmakovFrame> frames;
    frames.reserve(trajectory.size());
    for (const ModeSample& s : trajectory.samples()) {
        ErmakovFrame f = ermakov_frame(s, spec.m0());
        if (!frames.empty()) {
            const double prev = frames.back().theta;
            const double step = wrap_phase(f.theta - prev);
            if (std::abs(step) >= 0.5 * kPi) {
                std::ostringstream os;
                os << "phase step " << step << " between t = " << frames.back().t << " and t = "
                   << f.t << " is not below pi/2; refine the grid";
                fail(ErrorCode::phase_aliasing, os.str());
            }
            f.theta = prev + step;
        }
        frames.push_back(f);
    }
    return frames;
}

double ermakov_residual(std::span<const ErmakovFrame> frames, std::span<const double> omega_sq,
                        double h) {
    if (frames.size() < 3)
        fail(ErrorCode::insufficient_data, "Ermakov residual needs at least 3 samples");
    if (omega_sq.size() != frames.size())
        fail(ErrorCode::invalid_argument, "omega^2 samples do not match frames");
    if (!(h > 0.0))
        fail(ErrorCode::invalid_argument, "grid spacing must be positive");
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < frames.size(); ++i) {
        const double xi = frames[i].xi;
        const double xi_dd = (frames[i + 1].xi - 2.0 * xi + frames[i - 1].xi) / (h * h);
        worst = std::max(worst, std::abs(xi_dd + omega_sq[i] * xi - 1.0 / (xi * xi * xi)));
    }
    return worst;
}

double ermakov_residual(const ModeTrajectory& trajectory) {
    if (trajectory.size() < 3)
        fail(ErrorCode::insufficient_data, "Ermakov residual needs at least 3 samples");
    const auto samples = trajectory.samples();
    const double h = samples[1].t - samples[0].t;
    for (std::size_t i = 2; i < samples.size(); ++i)
        if (std::abs((samples[i].t - samples[i - 1].t) - h) > 1e-8 * h)
            fail(ErrorCode::invalid_argument, "Ermakov residual needs a uniform grid");
    const auto frames = ermakov_frame(trajectory);
    std::vector<double> w2(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        w2[i] = trajectory.spec().frequency_sq(samples[i].t);
    return ermakov_residual(frames, w2, h);
}

double energy_from_frame(const ErmakovFrame& f, double omega_sq) {
    return 0.25 * (f.dxi * f.dxi + omega_sq * f.xi * f.xi + 1.0 / (f.xi * f.xi));
}

LadderCoefficients ladder_coefficients(const ModeSample& s) {
    return {I * std::conj(s.u), -I * s.mass * std::conj(s.du)};
}

cplx ladder_commutator(const LadderCoefficients& c) {
    // [q, p] = i
    return -I * c.c_p * std::conj(c.c_q) + I * c.c_q * std::conj(c.c_p);
}

GaussianState gaussian_state(const ModeSample& s) {
    const cplx width = std::conj(s.u) * s.u;
    return {s, std::pow(1.0 / (2.0 * kPi * width), 0.25),
            I * s.mass * std::conj(s.du) / (2.0 * std::conj(s.u))};
}

cplx gaussian_wavefunction(const GaussianState& state, double q) {
    return state.norm_coeff * std::exp(state.exp_coeff * q * q);
}

double gaussian_norm(const GaussianState& state, double tol) {
    const double sigma = std::abs(state.sample.u);
    auto density = [&](double q) { return std::norm(gaussian_wavefunction(state, q)); };
    return adaptive_simpson(density, -8.0 * sigma, 8.0 * sigma, tol);
}

UncertaintyReport moments(const ModeSample& s) {
    UncertaintyReport r;
    r.var_q = std::norm(s.u);
    r.var_p = s.mass * s.mass * std::norm(s.du);
    r.cov_qp = s.mass * std::real(s.u * std::conj(s.du));
    r.product = std::sqrt(r.var_q * r.var_p);
    return r;
}

double uncertainty_product(const ModeSample& s) { return s.mass * std::abs(s.u) * std::abs(s.du); }

EnergyReport energy_expectation(const ModeSample& s, const OscillatorSpec& spec) {
    const double w2 = spec.frequency_sq(s.t);
    EnergyReport e;
    e.kinetic = 0.5 * s.mass * std::norm(s.du);
    e.potential = 0.5 * s.mass * w2 * std::norm(s.u);
    e.epsilon = e.kinetic + e.potential;
    return e;
}

double excitation_number(const SqueezeParams& params) {
    validate(params);
    return std::norm(params.nu);
}

double invariant_expectation(const SqueezeParams& params) { return excitation_number(params) + 0.5; }

}  // namespace tdho
