#pragma once

#include "tdho/oscillator.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tdho {

using cplx = std::complex<double>;

// One point of a complex solution of d/dt(m u') + m omega^2 u = 0.
struct ModeSample {
    double t = 0.0;
    cplx u;
    cplx du;
    double mass = 1.0;
};

// m (conj(du) u - conj(u) du); equals i for a normalized mode.
cplx wronskian(const ModeSample& s) noexcept;

// |wronskian(s) - i|
double wronskian_residual(const ModeSample& s) noexcept;

// Instantaneous vacuum u = 1/sqrt(2 m omega), du = -i omega u at t0.
ModeSample init_minimum_uncertainty(const OscillatorSpec& spec, double t0);

// Closed-form positive-frequency solution e^{-i omega t} / sqrt(2 m0 omega) of a
// constant oscillator with omega^2 > 0.
ModeSample stationary_vacuum(const OscillatorSpec& spec, double t);

class ModeTrajectory {
public:
    ModeTrajectory(OscillatorSpec spec, std::vector<ModeSample> samples, double tol,
                   double max_wronskian_drift, std::size_t steps);

    const OscillatorSpec& spec() const noexcept { return spec_; }
    std::span<const ModeSample> samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    const ModeSample& operator[](std::size_t i) const { return samples_[i]; }
    double tol() const noexcept { return tol_; }
    double max_wronskian_drift() const noexcept { return max_drift_; }
    std::size_t steps() const noexcept { return steps_; }

private:
    OscillatorSpec spec_;
    std::vector<ModeSample> samples_;
    double tol_;
    double max_drift_;
    std::size_t steps_;
};

// Integrates from init.t toward t_end (either direction) with an adaptive
// Dormand-Prince 8(5,3) pair and samples the dense output at output_grid.
// The samples of the result are sorted by increasing t. The Wronskian is
// monitored at every accepted step and never renormalized; drift above
// 1e3 * tol raises integration_failure.
ModeTrajectory integrate_mode(const OscillatorSpec& spec, const ModeSample& init, double t_end,
                              double tol, std::span<const double> output_grid);

// Wraps externally computed samples (e.g. a closed-form mode); the reported
// drift is the largest Wronskian residual among them.
ModeTrajectory trajectory_from_samples(OscillatorSpec spec, std::vector<ModeSample> samples);

// n equally spaced points from a to b inclusive (n >= 2).
std::vector<double> uniform_grid(double a, double b, std::size_t n);

}  // namespace tdho
