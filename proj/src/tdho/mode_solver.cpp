#include "tdho/mode_solver.hpp"

#include "tdho/dop853.hpp"
#include "tdho/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace tdho {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr std::size_t kMaxSteps = 50'000'000;

using State = std::array<double, 4>;  // Re u, Im u, Re du, Im du

State pack(const ModeSample& s) { return {s.u.real(), s.u.imag(), s.du.real(), s.du.imag()}; }

ModeSample unpack(const State& x, double t, double mass) {
    return {t, {x[0], x[1]}, {x[2], x[3]}, mass};
}

// Stage times of the final step may overshoot a finite domain edge by a few ulps.
double snap_to_domain(const TimeDomain& d, double t) {
    const double slack = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
    if (t > d.t_max && t - d.t_max <= slack) return d.t_max;
    if (t < d.t_min && d.t_min - t <= slack) return d.t_min;
    return t;
}

struct ModeRhs {
    const OscillatorSpec* spec;

    void operator()(double t, const State& x, State& dxdt) const {
        t = snap_to_domain(spec->domain(), t);
        const double w2 = spec->frequency_sq(t);
        const double damping = spec->mass_log_derivative(t);
        dxdt[0] = x[2];
        dxdt[1] = x[3];
        dxdt[2] = -damping * x[2] - w2 * x[0];
        dxdt[3] = -damping * x[3] - w2 * x[1];
    }
};

}  // namespace

cplx wronskian(const ModeSample& s) noexcept {
    return s.mass * (std::conj(s.du) * s.u - std::conj(s.u) * s.du);
}

double wronskian_residual(const ModeSample& s) noexcept { return std::abs(wronskian(s) - I); }

ModeSample init_minimum_uncertainty(const OscillatorSpec& spec, double t0) {
    const double w2 = spec.frequency_sq(t0);
    if (!(w2 > 0.0)) {
        std::ostringstream os;
        os << "omega^2(" << t0 << ") = " << w2 << " <= 0 admits no instantaneous vacuum";
        fail(ErrorCode::no_instantaneous_vacuum, os.str());
    }
    const double m = spec.mass(t0);
    const double w = std::sqrt(w2);
    const cplx u = 1.0 / std::sqrt(2.0 * m * w);
    return {t0, u, -I * w * u, m};
}

ModeSample stationary_vacuum(const OscillatorSpec& spec, double t) {
    if (spec.kind() != OscillatorKind::constant)
        fail(ErrorCode::unsupported_kind, "stationary vacuum requires a constant oscillator");
    const double w2 = spec.frequency_sq(t);
    if (!(w2 > 0.0))
        fail(ErrorCode::no_instantaneous_vacuum, "stationary vacuum requires omega^2 > 0");
    const double w = std::sqrt(w2);
    const cplx u = std::polar(1.0 / std::sqrt(2.0 * spec.m0() * w), -w * t);
    return {t, u, -I * w * u, spec.m0()};
}

ModeTrajectory::ModeTrajectory(OscillatorSpec spec, std::vector<ModeSample> samples, double tol,
                               double max_wronskian_drift, std::size_t steps)
    : spec_(std::move(spec)), samples_(std::move(samples)), tol_(tol),
      max_drift_(max_wronskian_drift), steps_(steps) {
    for (std::size_t i = 1; i < samples_.size(); ++i)
        if (!(samples_[i].t > samples_[i - 1].t))
            fail(ErrorCode::invalid_argument, "trajectory samples must be strictly increasing in t");
}

ModeTrajectory integrate_mode(const OscillatorSpec& spec, const ModeSample& init, double t_end,
                              double tol, std::span<const double> output_grid) {
    if (!(tol > 0.0) || !std::isfinite(tol))
        fail(ErrorCode::invalid_argument, "tolerance must be positive");
    if (output_grid.empty())
        fail(ErrorCode::invalid_argument, "output grid is empty");
    const double t0 = init.t;
    spec.check_time(t0);
    spec.check_time(t_end);

    ModeSample start = init;
    start.mass = spec.mass(t0);
    const double init_residual = wronskian_residual(start);
    if (!(init_residual <= 10.0 * tol)) {
        std::ostringstream os;
        os << "initial sample violates the Wronskian normalization (|W - i| = " << init_residual
           << ")";
        fail(ErrorCode::invalid_argument, os.str());
    }

    const double dir = t_end >= t0 ? 1.0 : -1.0;
    const double lo = std::min(t0, t_end), hi = std::max(t0, t_end);
    std::vector<double> grid(output_grid.begin(), output_grid.end());
    for (double g : grid)
        if (!(g >= lo && g <= hi)) {
            std::ostringstream os;
            os << "output time " << g << " outside integration span [" << lo << ", " << hi << "]";
            fail(ErrorCode::domain, os.str());
        }
    std::sort(grid.begin(), grid.end(), [dir](double a, double b) { return dir * a < dir * b; });
    if (std::adjacent_find(grid.begin(), grid.end()) != grid.end())
        fail(ErrorCode::invalid_argument, "output grid contains duplicate times");

    const double limit = 1e3 * tol;
    double max_drift = init_residual;
    std::size_t steps = 0;
    std::vector<ModeSample> samples;
    samples.reserve(grid.size());

    ModeRhs rhs{&spec};
    detail::Dop853<4> stepper(tol, tol);
    const double span = std::abs(t_end - t0);
    const double scale = std::sqrt(std::max(1.0, std::abs(spec.frequency_sq(t0))));
    stepper.initialize(rhs, t0, pack(start), dir * std::min(span > 0 ? span : 1.0, 1e-2 / scale));

    auto drift_failure = [&](double t, double r) {
        std::ostringstream os;
        os << "Wronskian drift " << r << " at t = " << t << " exceeds " << limit;
        fail(ErrorCode::integration_failure, os.str());
    };

    for (double g : grid) {
        if (g == t0) {
            samples.push_back(start);
            continue;
        }
        while (dir * (stepper.time() - g) < 0.0) {
            if (!stepper.step(rhs, t_end)) {
                std::ostringstream os;
                os << "step size underflow at t = " << stepper.time();
                fail(ErrorCode::integration_failure, os.str());
            }
            if (++steps > kMaxSteps)
                fail(ErrorCode::integration_failure, "step budget exhausted");
            const double t_new = stepper.time();
            const double r = wronskian_residual(unpack(stepper.state(), t_new, spec.mass(t_new)));
            max_drift = std::max(max_drift, r);
            if (!(r <= limit)) drift_failure(t_new, r);
        }
        ModeSample s = unpack(stepper.interpolate(rhs, g), g, spec.mass(g));
        const double r = wronskian_residual(s);
        max_drift = std::max(max_drift, r);
        if (!(r <= limit)) drift_failure(g, r);
        samples.push_back(s);
    }

    if (dir < 0.0)
        std::reverse(samples.begin(), samples.end());
    return ModeTrajectory(spec, std::move(samples), tol, max_drift, steps);
}

ModeTrajectory trajectory_from_samples(OscillatorSpec spec, std::vector<ModeSample> samples) {
    double drift = 0.0;
    for (const ModeSample& s : samples) drift = std::max(drift, wronskian_residual(s));
    return ModeTrajectory(std::move(spec), std::move(samples), 0.0, drift, 0);
}

std::vector<double> uniform_grid(double a, double b, std::size_t n) {
    if (n < 2)
        fail(ErrorCode::invalid_argument, "uniform grid needs at least 2 points");
    std::vector<double> g(n);
    const double h = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = a + h * static_cast<double>(i);
    g.back() = b;
    return g;
}

}  // namespace tdho
