#pragma once

// Hankel functions of the second kind H2_chi(z) = J_chi(z) - i Y_chi(z) for
// real order 0 <= chi <= 3/2 and z > 0.

#include <complex>

namespace tdho {

struct HankelValue {
    std::complex<double> value;
    std::complex<double> derivative;  // d/dz
};

HankelValue hankel_h2(double chi, double z);

namespace detail {

// Switch from the ascending series to the asymptotic expansion.
inline constexpr double kHankelAsymptoticFrom = 15.0;
// |chi - n| below this uses the integer-order Y series at n.
inline constexpr double kIntegerOrderBand = 1e-6;

struct BesselJY {
    long double j, dj, y, dy;
};

// Ascending series (reflection or integer-order Y series). Accurate for
// z below roughly 20.
BesselJY bessel_series(double chi, double z);

struct AsymptoticSum {
    std::complex<double> s;   // sum_k (-i)^k a_k z^-k
    std::complex<double> ds;  // d/dz of s
    int terms = 0;
    double last_term = 0.0;   // magnitude of the smallest retained term
};

// Large-z series of H2 with a_k = prod_{j<=k} (four_nu_sq - (2j-1)^2) / (k! 8^k).
// four_nu_sq may be negative (imaginary order).
AsymptoticSum hankel_asymptotic_sum(double four_nu_sq, double z);

// sqrt(2/(pi z)) e^{-i(z - chi pi/2 - pi/4)} times the asymptotic sum.
HankelValue hankel_h2_asymptotic(double chi, double z);

HankelValue hankel_h2_series(double chi, double z);

}  // namespace detail

}  // namespace tdho
