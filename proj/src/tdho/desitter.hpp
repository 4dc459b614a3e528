#pragma once

// Per-mode scalar field in an expanding background: the Bunch-Davies mode
// u = sqrt(pi/(4 H0)) e^{-3 H0 t/2} H1_chi(z), z = (k/H0) e^{-H0 t}, its
// early-time asymptotic seed and cross-checks against the integrator.

#include "tdho/mode_solver.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tdho {

enum class Parity { cos, sin };

enum class OrderPolicy {
    real_only,        // refuse m > 3 H0 / 2
    allow_imaginary,  // ODE path; chi_sq < 0 is kept and chi is set to 0
};

struct DeSitterSpec {
    double H0 = 1.0;
    double m = 0.0;        // field mass
    double m_sq = 0.0;
    double k = 1.0;
    double chi_sq = 2.25;  // 9/4 - m^2/H0^2
    double chi = 1.5;
    Parity parity = Parity::cos;  // tag only

    bool real_order() const noexcept { return chi_sq >= 0.0; }
    DeSitterParams params() const noexcept { return {H0, m_sq, k}; }
};

DeSitterSpec derive_spec(double H0, double m, double k,
                         OrderPolicy policy = OrderPolicy::real_only, Parity parity = Parity::cos);
// Same from m^2, which keeps m^2/H0^2 exact for inputs like m^2 = 2.
DeSitterSpec derive_spec_mass_sq(double H0, double m_sq, double k,
                                 OrderPolicy policy = OrderPolicy::real_only,
                                 Parity parity = Parity::cos);

double z_at_time(const DeSitterSpec& spec, double t);
double time_at_z(const DeSitterSpec& spec, double z);

// Oscillator with m0 = 1, mass e^{3 H0 t}, omega^2 = m^2 + k^2 e^{-2 H0 t}.
OscillatorSpec oscillator_for(const DeSitterSpec& spec);

ModeSample bunch_davies_mode(const DeSitterSpec& spec, double t);

// Seed at t(z_start) from the large-z expansion of the Hankel function.
// Valid for any mass; requires z_start >= 50.
ModeSample bd_init_sample(const DeSitterSpec& spec, double z_start);

// max_i |du'_fd + 3 H0 du + omega^2 u| / max|u| over interior samples of a
// uniform grid, with du' from central differences of the sampled du.
double mode_equation_residual(std::span<const ModeSample> samples, const DeSitterSpec& spec);
double mode_equation_residual(const ModeTrajectory& trajectory, const DeSitterSpec& spec);

struct BunchDaviesComparison {
    ModeTrajectory numeric;
    std::vector<ModeSample> analytic;  // empty when the order is imaginary
    double max_rel_dev_u = 0.0;
    double max_rel_dev_du = 0.0;
    double max_wronskian_analytic = 0.0;
    double max_wronskian_numeric = 0.0;
};

// Integrates from bd_init_sample(z_start) down to z_end on `samples` points
// uniform in t and compares with the analytic mode where it exists.
BunchDaviesComparison compare_bunch_davies(const DeSitterSpec& spec, double z_start, double z_end,
                                           std::size_t samples, double tol);

struct KScanRow {
    double k = 0.0;
    double t = 0.0;
    double z = 0.0;
    cplx u;
    double product = 0.0;
    double epsilon = 0.0;
    double wronskian_residual = 0.0;
};

// For each k, the mode sampled at n points uniform in t between t(z_start)
// and t(z_end). Real orders use the analytic mode, imaginary orders the
// integrator seeded at z_start.
std::vector<KScanRow> k_scan(double H0, double m_sq, std::span<const double> ks, double z_start,
                             double z_end, std::size_t n, double tol);

}  // namespace tdho
