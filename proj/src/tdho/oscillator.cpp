#include "tdho/oscillator.hpp"

#include "tdho/error.hpp"

#include <gsl/gsl_interp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace tdho {

struct OscillatorSpec::Spline {
    std::vector<double> t;
    std::vector<double> y;
    std::unique_ptr<gsl_interp, decltype(&gsl_interp_free)> interp{nullptr, &gsl_interp_free};

    // A null accelerator makes gsl_interp_eval a pure binary search, so one
    // spline can be shared across threads.
    double value(double x) const { return gsl_interp_eval(interp.get(), t.data(), y.data(), x, nullptr); }
};

const char* kind_name(OscillatorKind kind) noexcept {
    switch (kind) {
    case OscillatorKind::constant: return "constant";
    case OscillatorKind::tabulated: return "tabulated";
    case OscillatorKind::desitter_mode: return "desitter";
    case OscillatorKind::custom: return "custom";
    }
    return "?";
}

namespace {

void require_positive_mass(double m0) {
    if (!(m0 > 0.0) || !std::isfinite(m0))
        fail(ErrorCode::invalid_argument, "mass scale m0 must be positive and finite");
}

void require_domain(const TimeDomain& d) {
    if (std::isnan(d.t_min) || std::isnan(d.t_max) || !(d.t_min <= d.t_max))
        fail(ErrorCode::invalid_argument, "time domain must satisfy t_min <= t_max");
}

}  // namespace

OscillatorSpec OscillatorSpec::constant(double m0, double omega_sq, TimeDomain domain) {
    require_positive_mass(m0);
    require_domain(domain);
    if (!std::isfinite(omega_sq))
        fail(ErrorCode::invalid_argument, "omega^2 must be finite");
    OscillatorSpec s;
    s.kind_ = OscillatorKind::constant;
    s.m0_ = m0;
    s.omega_sq_ = omega_sq;
    s.domain_ = domain;
    return s;
}

OscillatorSpec OscillatorSpec::tabulated(double m0, std::vector<double> times,
                                         std::vector<double> omega_sq) {
    require_positive_mass(m0);
    if (times.size() != omega_sq.size())
        fail(ErrorCode::invalid_argument, "tabulated profile: column lengths differ");
    if (times.size() < 3)
        fail(ErrorCode::insufficient_data, "tabulated profile needs at least 3 knots");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]) || !std::isfinite(omega_sq[i]))
            fail(ErrorCode::invalid_argument, "tabulated profile: non-finite entry");
        if (i > 0 && !(times[i] > times[i - 1]))
            fail(ErrorCode::invalid_argument, "tabulated profile: knot times must be strictly increasing");
    }

    auto spline = std::make_shared<Spline>();
    spline->t = std::move(times);
    spline->y = std::move(omega_sq);
    spline->interp.reset(gsl_interp_alloc(gsl_interp_cspline, spline->t.size()));
    if (!spline->interp || gsl_interp_init(spline->interp.get(), spline->t.data(), spline->y.data(),
                                           spline->t.size()) != 0)
        fail(ErrorCode::invalid_argument, "tabulated profile: spline construction failed");

    OscillatorSpec s;
    s.kind_ = OscillatorKind::tabulated;
    s.m0_ = m0;
    s.domain_ = {spline->t.front(), spline->t.back()};
    s.spline_ = std::move(spline);
    return s;
}

OscillatorSpec OscillatorSpec::desitter_mode(const DeSitterParams& p, double m0, TimeDomain domain) {
    require_positive_mass(m0);
    require_domain(domain);
    if (!(p.H0 > 0.0) || !std::isfinite(p.H0))
        fail(ErrorCode::invalid_argument, "H0 must be positive");
    if (!(p.field_mass_sq >= 0.0) || !std::isfinite(p.field_mass_sq))
        fail(ErrorCode::invalid_argument, "field mass squared must be nonnegative");
    if (!(p.k > 0.0) || !std::isfinite(p.k))
        fail(ErrorCode::invalid_argument, "wavenumber k must be positive");
    OscillatorSpec s;
    s.kind_ = OscillatorKind::desitter_mode;
    s.m0_ = m0;
    s.domain_ = domain;
    s.desitter_ = p;
    return s;
}

OscillatorSpec OscillatorSpec::custom(double m0, std::function<double(double)> omega_sq,
                                      TimeDomain domain) {
    require_positive_mass(m0);
    require_domain(domain);
    if (!omega_sq)
        fail(ErrorCode::invalid_argument, "custom profile: empty callable");
    OscillatorSpec s;
    s.kind_ = OscillatorKind::custom;
    s.m0_ = m0;
    s.domain_ = domain;
    s.custom_ = std::make_shared<const std::function<double(double)>>(std::move(omega_sq));
    return s;
}

std::span<const double> OscillatorSpec::knot_times() const noexcept {
    return spline_ ? std::span<const double>(spline_->t) : std::span<const double>();
}

std::span<const double> OscillatorSpec::knot_values() const noexcept {
    return spline_ ? std::span<const double>(spline_->y) : std::span<const double>();
}

void OscillatorSpec::check_time(double t) const {
    if (!domain_.contains(t)) {
        std::ostringstream os;
        os << "t = " << t << " outside [" << domain_.t_min << ", " << domain_.t_max << "]";
        fail(ErrorCode::domain, os.str());
    }
}

double OscillatorSpec::frequency_sq(double t) const {
    check_time(t);
    switch (kind_) {
    case OscillatorKind::constant: return omega_sq_;
    case OscillatorKind::tabulated: return spline_->value(t);
    case OscillatorKind::desitter_mode:
        return desitter_.field_mass_sq +
               desitter_.k * desitter_.k * std::exp(-2.0 * desitter_.H0 * t);
    case OscillatorKind::custom: return (*custom_)(t);
    }
    return omega_sq_;
}

double OscillatorSpec::mass(double t) const {
    check_time(t);
    if (kind_ == OscillatorKind::desitter_mode)
        return m0_ * std::exp(3.0 * desitter_.H0 * t);
    return m0_;
}

double OscillatorSpec::mass_log_derivative(double t) const {
    check_time(t);
    if (kind_ == OscillatorKind::desitter_mode)
        return 3.0 * desitter_.H0;
    return 0.0;
}

double eval_frequency_sq(const OscillatorSpec& spec, double t) { return spec.frequency_sq(t); }

double eval_mass(const OscillatorSpec& spec, double t) { return spec.mass(t); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_field(std::string_view field, std::size_t line_no) {
    field = trim(field);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        std::ostringstream os;
        os << "profile line " << line_no << ": cannot parse '" << field << "'";
        fail(ErrorCode::io, os.str());
    }
    return value;
}

}  // namespace

OscillatorSpec load_tabulated_profile(const std::string& path, double m0) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::io, "cannot open profile '" + path + "'");

    std::string line;
    if (!std::getline(in, line) || trim(line) != "t,omega_sq")
        fail(ErrorCode::io, "profile '" + path + "': expected header row 't,omega_sq'");

    std::vector<double> times, values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view row = trim(line);
        if (row.empty())
            continue;
        auto comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
            std::ostringstream os;
            os << "profile line " << line_no << ": expected two columns";
            fail(ErrorCode::io, os.str());
        }
        times.push_back(parse_field(row.substr(0, comma), line_no));
        values.push_back(parse_field(row.substr(comma + 1), line_no));
    }
    return OscillatorSpec::tabulated(m0, std::move(times), std::move(values));
}

}  // namespace tdho
