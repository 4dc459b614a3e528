#include "tdho/squeeze.hpp"

#include "tdho/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace tdho {

namespace {

constexpr double kNormTol = 1e-12;

// eps slightly below omega/2 from round-off is treated as the ground state.
double excess_ratio(double epsilon, double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        fail(ErrorCode::invalid_argument, "omega must be positive");
    if (!std::isfinite(epsilon))
        fail(ErrorCode::invalid_argument, "energy must be finite");
    const double ratio = epsilon / omega;
    if (ratio < 0.5 * (1.0 - 1e-12)) {
        std::ostringstream os;
        os << "energy " << epsilon << " is below the ground state omega/2 = " << 0.5 * omega;
        fail(ErrorCode::below_ground_state, os.str());
    }
    return std::max(ratio, 0.5);
}

}  // namespace

double SqueezeParams::normalization_error() const noexcept {
    return std::abs(std::norm(mu) - std::norm(nu) - 1.0);
}

SqueezeParams SqueezeParams::from_bogoliubov(cplx mu, cplx nu) {
    SqueezeParams p;
    p.mu = mu;
    p.nu = nu;
    p.r = std::asinh(std::abs(nu));
    if (nu == cplx{0.0, 0.0}) {
        p.delta = 0.0;
    } else {
        double d = std::arg(nu);
        if (d < 0.0) d += 2.0 * std::numbers::pi;
        p.delta = d >= 2.0 * std::numbers::pi ? 0.0 : d;
    }
    validate(p);
    return p;
}

void validate(const SqueezeParams& params) {
    const double scale = std::max(1.0, std::norm(params.mu));
    if (!(params.normalization_error() <= kNormTol * scale)) {
        std::ostringstream os;
        os << "|mu|^2 - |nu|^2 = " << std::norm(params.mu) - std::norm(params.nu) << " != 1";
        fail(ErrorCode::invalid_params, os.str());
    }
}

SqueezeParams polar_to_bogoliubov(double r, double delta) {
    if (!(r >= 0.0) || !std::isfinite(r))
        fail(ErrorCode::invalid_argument, "squeeze magnitude r must be >= 0");
    if (!std::isfinite(delta))
        fail(ErrorCode::invalid_argument, "squeeze phase must be finite");
    SqueezeParams p;
    p.mu = std::cosh(r);
    p.r = r;
    if (r == 0.0) {
        p.nu = 0.0;
        p.delta = 0.0;
        return p;
    }
    double d = std::fmod(delta, 2.0 * std::numbers::pi);
    if (d < 0.0) d += 2.0 * std::numbers::pi;
    p.delta = d;
    p.nu = std::polar(std::sinh(r), delta);
    return p;
}

ModeSample mix_mode(const ModeSample& base, const SqueezeParams& params) {
    validate(params);
    const cplx nu_c = std::conj(params.nu);
    ModeSample out = base;
    out.u = params.mu * base.u + nu_c * std::conj(base.u);
    out.du = params.mu * base.du + nu_c * std::conj(base.du);
    return out;
}

std::pair<cplx, cplx> ladder_bogoliubov(const SqueezeParams& params) {
    return {params.mu_tilde(), params.nu_tilde()};
}

double closed_form_xi_sq(double epsilon, double omega, double t) {
    const double ratio = excess_ratio(epsilon, omega);
    const double amplitude = std::sqrt(std::max(0.0, 1.0 - 0.25 / (ratio * ratio)));
    return 2.0 * ratio / omega * (1.0 + amplitude * std::cos(2.0 * omega * t));
}

SqueezeParams squeeze_from_energy(double epsilon, double omega) {
    const double ratio = excess_ratio(epsilon, omega);
    const double mu = std::sqrt(ratio + 0.5);
    const double nu = std::sqrt(ratio - 0.5);
    SqueezeParams p;
    p.mu = mu;
    p.nu = nu;
    p.r = std::asinh(nu);
    p.delta = 0.0;
    return p;
}

std::pair<double, double> uncertainty_extrema(const SqueezeParams& params) {
    validate(params);
    return {0.5, 0.5 * (std::norm(params.mu) + std::norm(params.nu))};
}

}  // namespace tdho
