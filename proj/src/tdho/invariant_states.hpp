#pragma once

// Gaussian states annihilated by the first-order invariant
// A = i (conj(u) p - m conj(du) q) and the observables built from them.

#include "tdho/mode_solver.hpp"
#include "tdho/squeeze.hpp"

#include <span>
#include <vector>

namespace tdho {

// u = xi / sqrt(2 m0) e^{-i theta}
struct ErmakovFrame {
    double t = 0.0;
    double xi = 0.0;
    double dxi = 0.0;
    double theta = 0.0;
};

// A = c_p p + c_q q
struct LadderCoefficients {
    cplx c_p;
    cplx c_q;
};

struct UncertaintyReport {
    double var_q = 0.0;
    double var_p = 0.0;
    double cov_qp = 0.0;
    double product = 0.0;
};

struct EnergyReport {
    double epsilon = 0.0;
    double kinetic = 0.0;
    double potential = 0.0;
};

// Psi(q) = norm_coeff exp(exp_coeff q^2)
struct GaussianState {
    ModeSample sample;
    cplx norm_coeff;
    cplx exp_coeff;
};

ErmakovFrame ermakov_frame(const ModeSample& sample, double m0);

// Polar decomposition along a constant-mass trajectory. theta is continued
// sample to sample on the nearest branch; steps with |dtheta| >= pi/2 are
// rejected as aliased.
std::vector<ErmakovFrame> ermakov_frame(const ModeTrajectory& trajectory);

// max over interior samples of |xi''_fd + omega^2 xi - 1/xi^3| on a uniform
// grid of spacing h; omega_sq[i] belongs to frames[i].
double ermakov_residual(std::span<const ErmakovFrame> frames, std::span<const double> omega_sq,
                        double h);
double ermakov_residual(const ModeTrajectory& trajectory);

// (xi'^2 + omega^2 xi^2 + 1/xi^2) / 4
double energy_from_frame(const ErmakovFrame& frame, double omega_sq);

LadderCoefficients ladder_coefficients(const ModeSample& sample);
// [A, A^dagger]; equals 1 exactly when the Wronskian is i.
cplx ladder_commutator(const LadderCoefficients& c);

GaussianState gaussian_state(const ModeSample& sample);
cplx gaussian_wavefunction(const GaussianState& state, double q);
// Integral of |Psi|^2 over +-8 standard deviations by adaptive Simpson.
double gaussian_norm(const GaussianState& state, double tol = 1e-8);

UncertaintyReport moments(const ModeSample& sample);
double uncertainty_product(const ModeSample& sample);
EnergyReport energy_expectation(const ModeSample& sample, const OscillatorSpec& spec);

// <A^dagger A> of the mixed state in the quanta of the base invariant.
double excitation_number(const SqueezeParams& params);
double invariant_expectation(const SqueezeParams& params);

}  // namespace tdho
