#pragma once

#include "tdho/error.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

namespace test {

template <class F>
tdho::ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const tdho::Error& e) {
        return e.code();
    }
    FAIL("expected a tdho::Error");
    return tdho::ErrorCode::invalid_argument;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

inline double rel(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) / std::abs(b);
}

// Fixed seed so property sweeps are reproducible; override with TDHO_TEST_SEED.
inline std::mt19937_64 rng() {
    unsigned long long seed = 0x7d40a1c3ULL;
    if (const char* s = std::getenv("TDHO_TEST_SEED")) seed = std::strtoull(s, nullptr, 10);
    return std::mt19937_64(seed);
}

}  // namespace test

#define CHECK_CODE(expr, expected) CHECK(test::code_of([&] { (void)(expr); }) == (expected))
