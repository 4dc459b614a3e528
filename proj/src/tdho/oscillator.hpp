#pragma once

// Oscillator profiles H = p^2 / (2 m(t)) + m(t) omega^2(t) q^2 / 2, hbar = 1.

#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace tdho {

enum class OscillatorKind { constant, tabulated, desitter_mode, custom };

const char* kind_name(OscillatorKind kind) noexcept;

struct TimeDomain {
    double t_min = -std::numeric_limits<double>::infinity();
    double t_max = std::numeric_limits<double>::infinity();

    bool contains(double t) const noexcept { return t >= t_min && t <= t_max; }
};

// Per-mode parameters of a minimally coupled scalar of mass^2 = field_mass_sq
// in an expanding background with rate H0.
struct DeSitterParams {
    double H0 = 1.0;
    double field_mass_sq = 0.0;
    double k = 1.0;
};

class OscillatorSpec {
public:
    static OscillatorSpec constant(double m0, double omega_sq, TimeDomain domain = {});

    // Natural cubic spline through (times[i], omega_sq[i]); the domain is the
    // knot span and evaluation outside it is an error.
    static OscillatorSpec tabulated(double m0, std::vector<double> times,
                                    std::vector<double> omega_sq);

    // mass(t) = m0 e^{3 H0 t}, omega^2(t) = m^2 + k^2 e^{-2 H0 t}.
    static OscillatorSpec desitter_mode(const DeSitterParams& params, double m0 = 1.0,
                                        TimeDomain domain = {});

    // Arbitrary smooth omega^2(t) with constant mass. The callable must be pure.
    static OscillatorSpec custom(double m0, std::function<double(double)> omega_sq,
                                 TimeDomain domain = {});

    OscillatorKind kind() const noexcept { return kind_; }
    double m0() const noexcept { return m0_; }
    const TimeDomain& domain() const noexcept { return domain_; }
    bool has_constant_mass() const noexcept { return kind_ != OscillatorKind::desitter_mode; }

    // Only meaningful for the desitter_mode kind.
    const DeSitterParams& desitter() const noexcept { return desitter_; }

    // Knots of a tabulated profile; empty for other kinds.
    std::span<const double> knot_times() const noexcept;
    std::span<const double> knot_values() const noexcept;

    double frequency_sq(double t) const;
    double mass(double t) const;
    // d(ln m)/dt, the damping coefficient of the mode equation.
    double mass_log_derivative(double t) const;

    void check_time(double t) const;

private:
    struct Spline;

    OscillatorKind kind_ = OscillatorKind::constant;
    double m0_ = 1.0;
    double omega_sq_ = 1.0;
    TimeDomain domain_;
    DeSitterParams desitter_;
    std::shared_ptr<const Spline> spline_;
    std::shared_ptr<const std::function<double(double)>> custom_;
};

double eval_frequency_sq(const OscillatorSpec& spec, double t);
double eval_mass(const OscillatorSpec& spec, double t);

// Reads a two-column CSV with header row `t,omega_sq`.
OscillatorSpec load_tabulated_profile(const std::string& path, double m0);

}  // namespace tdho
