#include "support.hpp"

#include "tdho/oscillator.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace tdho;

TEST_SUITE("oscillator") {

TEST_CASE("constant profile") {
    const auto s = OscillatorSpec::constant(1.0, 4.0);
    CHECK(eval_frequency_sq(s, 0.0) == 4.0);
    CHECK(eval_frequency_sq(s, -123.4) == 4.0);
    CHECK(eval_mass(s, 77.0) == 1.0);
    CHECK(s.mass_log_derivative(3.0) == 0.0);
    CHECK(s.kind() == OscillatorKind::constant);
}

TEST_CASE("de Sitter profile") {
    const auto s = OscillatorSpec::desitter_mode({1.0, 1.0, 1.0});
    CHECK(eval_frequency_sq(s, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(eval_frequency_sq(s, 40.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eval_mass(s, 0.0) == 1.0);
    CHECK(eval_mass(s, std::log(2.0)) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(s.mass_log_derivative(0.7) == doctest::Approx(3.0));
    CHECK_FALSE(s.has_constant_mass());
}

TEST_CASE("domain errors") {
    const auto s = OscillatorSpec::constant(1.0, 1.0, {0.0, 1.0});
    CHECK_CODE(eval_frequency_sq(s, 1.5), ErrorCode::domain);
    CHECK_CODE(eval_mass(s, -0.1), ErrorCode::domain);
    CHECK_CODE(OscillatorSpec::constant(0.0, 1.0), ErrorCode::invalid_argument);
    CHECK_CODE(OscillatorSpec::desitter_mode({0.0, 1.0, 1.0}), ErrorCode::invalid_argument);
    CHECK_CODE(OscillatorSpec::desitter_mode({1.0, 1.0, -1.0}), ErrorCode::invalid_argument);
}

TEST_CASE("tabulated spline reproduces knots and stays inside the span") {
    std::vector<double> t, w;
    for (int i = 0; i <= 40; ++i) {
        t.push_back(0.25 * i);
        w.push_back(1.0 + 0.5 * std::sin(0.3 * t.back()));
    }
    const auto s = OscillatorSpec::tabulated(1.0, t, w);
    for (size_t i = 0; i < t.size(); ++i) CHECK(eval_frequency_sq(s, t[i]) == doctest::Approx(w[i]));
    // cubic spline error for a smooth profile on h = 0.25
    CHECK(eval_frequency_sq(s, 5.125) == doctest::Approx(1.0 + 0.5 * std::sin(0.3 * 5.125)).epsilon(1e-5));
    CHECK_CODE(eval_frequency_sq(s, 10.01), ErrorCode::domain);
    CHECK(s.knot_times().size() == 41);
}

TEST_CASE("tabulated validation") {
    CHECK_CODE(OscillatorSpec::tabulated(1.0, {0, 1}, {1, 1}), ErrorCode::insufficient_data);
    CHECK_CODE(OscillatorSpec::tabulated(1.0, {0, 1, 1}, {1, 1, 1}), ErrorCode::invalid_argument);
    CHECK_CODE(OscillatorSpec::tabulated(1.0, {0, 1, 2}, {1, 1}), ErrorCode::invalid_argument);
}

TEST_CASE("custom profile") {
    const auto s = OscillatorSpec::custom(2.0, [](double t) { return 1.0 + t * t; });
    CHECK(eval_frequency_sq(s, 2.0) == 5.0);
    CHECK(eval_mass(s, 2.0) == 2.0);
}

TEST_CASE("profile loader") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto good = dir / "tdho_unit_profile.csv";
    {
        std::ofstream f(good);
        f << "t,omega_sq\n0,1\n1,2\n2,3\n3,4\n";
    }
    const auto s = load_tabulated_profile(good.string(), 1.0);
    CHECK(eval_frequency_sq(s, 1.5) == doctest::Approx(2.5));

    const auto bad = dir / "tdho_unit_profile_bad.csv";
    {
        std::ofstream f(bad);
        f << "time,w\n0,1\n";
    }
    CHECK_CODE(load_tabulated_profile(bad.string(), 1.0), ErrorCode::io);
    CHECK_CODE(load_tabulated_profile((dir / "no_such_profile.csv").string(), 1.0), ErrorCode::io);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

}
