#include "tdho/hankel.hpp"

#include "tdho/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace tdho {

namespace detail {

namespace {

using ld = long double;

constexpr ld kPiL = std::numbers::pi_v<long double>;
constexpr ld kEulerGamma = std::numbers::egamma_v<long double>;
constexpr ld kEpsL = std::numeric_limits<long double>::epsilon();

struct SeriesSum {
    ld value = 0.0L;
    ld derivative = 0.0L;
};

// J_nu(z) = sum_k (-1)^k (z/2)^{2k+nu} / (k! Gamma(k+nu+1)); nu > -1 or
// non-integer negative.
SeriesSum j_series(ld nu, ld z) {
    const ld half = z / 2.0L;
    const ld q = -half * half;
    ld term = std::pow(half, nu) / std::tgamma(nu + 1.0L);
    SeriesSum s;
    for (int k = 0; k < 500; ++k) {
        s.value += term;
        s.derivative += term * (2.0L * k + nu) / z;
        const ld next = term * q / ((k + 1.0L) * (k + 1.0L + nu));
        if (k + 1 > half && std::abs(next) <= kEpsL * std::abs(s.value) * 1e-2L &&
            std::abs(next) <= kEpsL * std::abs(s.derivative) * 1e-2L)
            break;
        term = next;
    }
    return s;
}

// Y_n for n = 0, 1 from the ascending series with digamma coefficients.
ld y_integer(int n, ld z, ld jn) {
    const ld half = z / 2.0L;
    const ld q = -half * half;
    ld finite = 0.0L;
    if (n == 1) finite = 1.0L / half;  // (n-1)!/0! (z/2)^{-1}
    // psi(k+1) + psi(n+k+1)
    ld hk = 0.0L, hnk = 0.0L;
    for (int j = 1; j <= n; ++j) hnk += 1.0L / j;
    ld term = std::pow(half, static_cast<ld>(n)) / std::tgamma(n + 1.0L);
    ld sum = 0.0L;
    for (int k = 0; k < 500; ++k) {
        const ld psi = (hk - kEulerGamma) + (hnk - kEulerGamma);
        const ld add = psi * term;
        sum += add;
        if (k > half && std::abs(add) <= kEpsL * std::abs(sum) * 1e-2L) break;
        term *= q / ((k + 1.0L) * (k + 1.0L + n));
        hk += 1.0L / (k + 1);
        hnk += 1.0L / (n + k + 1);
    }
    return -finite / kPiL + 2.0L / kPiL * std::log(half) * jn - sum / kPiL;
}

BesselJY integer_order(int n, ld z) {
    const SeriesSum j0 = j_series(0.0L, z);
    const SeriesSum j1 = j_series(1.0L, z);
    const ld y0 = y_integer(0, z, j0.value);
    const ld y1 = y_integer(1, z, j1.value);
    if (n == 0) return {j0.value, -j1.value, y0, -y1};
    return {j1.value, j0.value - j1.value / z, y1, y0 - y1 / z};
}

}  // namespace

BesselJY bessel_series(double chi, double z) {
    const ld nu = chi;
    const ld zl = z;
    const double n = std::round(chi);
    if (std::abs(chi - n) < kIntegerOrderBand && (n == 0.0 || n == 1.0))
        return integer_order(static_cast<int>(n), zl);
    const SeriesSum jp = j_series(nu, zl);
    const SeriesSum jm = j_series(-nu, zl);
    const ld c = std::cos(nu * kPiL), s = std::sin(nu * kPiL);
    return {jp.value, jp.derivative, (jp.value * c - jm.value) / s,
            (jp.derivative * c - jm.derivative) / s};
}

HankelValue hankel_h2_series(double chi, double z) {
    const BesselJY b = bessel_series(chi, z);
    return {{static_cast<double>(b.j), -static_cast<double>(b.y)},
            {static_cast<double>(b.dj), -static_cast<double>(b.dy)}};
}

AsymptoticSum hankel_asymptotic_sum(double four_nu_sq, double z) {
    using cplx = std::complex<double>;
    const cplx minus_i{0.0, -1.0};
    AsymptoticSum out;
    out.s = 1.0;
    out.ds = 0.0;
    cplx coeff = 1.0;  // (-i)^k a_k
    double zpow = 1.0;
    double prev = 1.0;
    out.last_term = 1.0;
    out.terms = 1;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        coeff *= minus_i * (four_nu_sq - odd * odd) / (8.0 * k);
        zpow /= z;
        const double mag = std::abs(coeff) * zpow;
        if (mag == 0.0) {
            out.last_term = 0.0;
            break;
        }
        if (mag >= prev) break;
        out.s += coeff * zpow;
        out.ds += -static_cast<double>(k) * coeff * zpow / z;
        out.terms = k + 1;
        out.last_term = mag;
        prev = mag;
        if (mag < 1e-17) break;
    }
    return out;
}

HankelValue hankel_h2_asymptotic(double chi, double z) {
    using cplx = std::complex<double>;
    const AsymptoticSum sum = hankel_asymptotic_sum(4.0 * chi * chi, z);
    const double amp = std::sqrt(2.0 / (std::numbers::pi * z));
    const cplx phase = std::polar(1.0, chi * std::numbers::pi / 2.0 + std::numbers::pi / 4.0);
    const cplx osc = std::polar(1.0, -z);
    const cplx pre = amp * phase * osc;
    const cplx d = pre * ((-0.5 / z - cplx{0.0, 1.0}) * sum.s + sum.ds);
    return {pre * sum.s, d};
}

}  // namespace detail

HankelValue hankel_h2(double chi, double z) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        std::ostringstream os;
        os << "Hankel argument z = " << z << " must be positive";
        fail(ErrorCode::domain, os.str());
    }
    if (!(chi >= 0.0 && chi <= 1.5))
        fail(ErrorCode::invalid_argument, "Hankel order must lie in [0, 3/2]");
    if (z >= detail::kHankelAsymptoticFrom) return detail::hankel_h2_asymptotic(chi, z);
    return detail::hankel_h2_series(chi, z);
}

}  // namespace tdho
