#pragma once

// Bogoliubov mixing u_nu = mu u + conj(nu) conj(u) of a normalized mode, its
// polar squeeze parameterization, and the closed forms of the stationary
// oscillator.

#include "tdho/mode_solver.hpp"

#include <utility>

namespace tdho {

// |mu|^2 - |nu|^2 = 1. r = asinh|nu|, delta = arg(nu) in [0, 2 pi), with
// delta = 0 whenever nu = 0.
struct SqueezeParams {
    cplx mu{1.0, 0.0};
    cplx nu{0.0, 0.0};
    double r = 0.0;
    double delta = 0.0;

    static SqueezeParams from_bogoliubov(cplx mu, cplx nu);

    // Images of mu, nu on the ladder operators: A_nu = mu A + nu_tilde A^dagger.
    cplx mu_tilde() const noexcept { return mu; }
    cplx nu_tilde() const noexcept { return -nu; }

    // | |mu|^2 - |nu|^2 - 1 |
    double normalization_error() const noexcept;
};

SqueezeParams polar_to_bogoliubov(double r, double delta);

void validate(const SqueezeParams& params);

ModeSample mix_mode(const ModeSample& base, const SqueezeParams& params);

std::pair<cplx, cplx> ladder_bogoliubov(const SqueezeParams& params);

// xi^2(t) = (2 eps / omega^2) [1 + sqrt(1 - omega^2 / (4 eps^2)) cos(2 omega t)]
double closed_form_xi_sq(double epsilon, double omega, double t);

// Real branch mu = sqrt(eps/omega + 1/2), nu = sqrt(eps/omega - 1/2).
SqueezeParams squeeze_from_energy(double epsilon, double omega);

// Over-time (min, max) of the uncertainty product of the stationary vacuum
// mixed with params: (1/2, (|mu|^2 + |nu|^2) / 2).
std::pair<double, double> uncertainty_extrema(const SqueezeParams& params);

}  // namespace tdho
