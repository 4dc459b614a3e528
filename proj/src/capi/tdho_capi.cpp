#include "tdho/tdho.h"

#include "tdho/csv.hpp"
#include "tdho/desitter.hpp"
#include "tdho/error.hpp"
#include "tdho/hankel.hpp"
#include "tdho/invariant_states.hpp"
#include "tdho/mode_solver.hpp"
#include "tdho/oscillator.hpp"
#include "tdho/squeeze.hpp"
#include "tdho/suite.hpp"
#include "tdho/vacuum_selection.hpp"

#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

struct tdho_oscillator {
    tdho::OscillatorSpec spec;
};

struct tdho_trajectory {
    tdho::ModeTrajectory traj;
};

struct tdho_selection {
    tdho::SelectionReport report;
};

struct tdho_inequality {
    tdho::InequalityReport report;
};

struct tdho_comparison {
    tdho::BunchDaviesComparison cmp;
    tdho::DeSitterSpec spec;
};

struct tdho_kscan {
    std::vector<tdho::KScanRow> rows;
};

struct tdho_verify_report {
    std::vector<tdho::CheckResult> checks;
};

namespace {

thread_local std::string g_last_error;

tdho_status set_error(tdho_status status, const std::string& msg) {
    g_last_error = msg;
    return status;
}

template <class F>
tdho_status guard(F&& f) {
    try {
        f();
        return TDHO_OK;
    } catch (const tdho::Error& e) {
        return set_error(static_cast<tdho_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(TDHO_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(TDHO_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(TDHO_ERR_INTERNAL, "unknown exception");
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr)
        tdho::fail(tdho::ErrorCode::invalid_argument, std::string(what) + " must not be NULL");
}

tdho::cplx to_cpp(tdho_complex c) { return {c.re, c.im}; }
tdho_complex to_c(tdho::cplx c) { return {c.real(), c.imag()}; }

tdho::ModeSample to_cpp(const tdho_mode_sample& s) {
    return {s.t, to_cpp(s.u), to_cpp(s.du), s.mass};
}
tdho_mode_sample to_c(const tdho::ModeSample& s) {
    return {s.t, to_c(s.u), to_c(s.du), s.mass};
}

tdho::SqueezeParams to_cpp(const tdho_squeeze_params& p) {
    tdho::SqueezeParams q;
    q.mu = to_cpp(p.mu);
    q.nu = to_cpp(p.nu);
    q.r = p.r;
    q.delta = p.delta;
    return q;
}
tdho_squeeze_params to_c(const tdho::SqueezeParams& p) {
    return {to_c(p.mu), to_c(p.nu), p.r, p.delta};
}

tdho_desitter_spec to_c(const tdho::DeSitterSpec& d) {
    return {d.H0, d.m, d.m_sq, d.k, d.chi_sq, d.chi, d.parity == tdho::Parity::sin ? 1 : 0};
}

// Re-derives chi from (H0, m^2, k) so a hand-filled struct cannot carry an
// inconsistent order.
tdho::DeSitterSpec checked_spec(const tdho_desitter_spec* s) {
    require(s, "spec");
    tdho::DeSitterSpec d = tdho::derive_spec_mass_sq(s->H0, s->m_sq, s->k,
                                                     tdho::OrderPolicy::allow_imaginary);
    d.parity = s->parity == 1 ? tdho::Parity::sin : tdho::Parity::cos;
    return d;
}

tdho_status copy_out(const std::string& text, char* buf, size_t cap, size_t* needed) {
    if (needed == nullptr) return set_error(TDHO_ERR_INVALID_ARGUMENT, "needed must not be NULL");
    *needed = text.size() + 1;
    if (buf == nullptr || cap < text.size() + 1)
        return set_error(TDHO_ERR_BUFFER_TOO_SMALL, "buffer too small");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return TDHO_OK;
}

template <class Writer>
tdho_status csv_out(Writer&& w, char* buf, size_t cap, size_t* needed) {
    std::string text;
    const tdho_status st = guard([&] {
        std::ostringstream os;
        w(os);
        text = os.str();
    });
    if (st != TDHO_OK) return st;
    return copy_out(text, buf, cap, needed);
}

}  // namespace

extern "C" {

const char* tdho_last_error(void) { return g_last_error.c_str(); }

const char* tdho_status_name(tdho_status status) {
    switch (status) {
    case TDHO_OK: return "ok";
    case TDHO_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case TDHO_ERR_INTERNAL: return "internal";
    default:
        if (status >= 1 && status <= 13)
            return tdho::error_code_name(static_cast<tdho::ErrorCode>(static_cast<int>(status)));
        return "unknown";
    }
}

const char* tdho_version(void) { return "0.1.0"; }

tdho_status tdho_oscillator_constant(double m0, double omega_sq, tdho_oscillator** out) {
    return guard([&] {
        require(out, "out");
        *out = new tdho_oscillator{tdho::OscillatorSpec::constant(m0, omega_sq)};
    });
}

tdho_status tdho_oscillator_tabulated(double m0, const double* times, const double* omega_sq,
                                      size_t n, tdho_oscillator** out) {
    return guard([&] {
        require(out, "out");
        require(times, "times");
        require(omega_sq, "omega_sq");
        *out = new tdho_oscillator{tdho::OscillatorSpec::tabulated(
            m0, std::vector<double>(times, times + n), std::vector<double>(omega_sq, omega_sq + n))};
    });
}

tdho_status tdho_oscillator_load_profile(const char* path, double m0, tdho_oscillator** out) {
    return guard([&] {
        require(out, "out");
        require(path, "path");
        *out = new tdho_oscillator{tdho::load_tabulated_profile(path, m0)};
    });
}

tdho_status tdho_oscillator_desitter(const tdho_desitter_spec* spec, tdho_oscillator** out) {
    return guard([&] {
        require(out, "out");
        *out = new tdho_oscillator{tdho::oscillator_for(checked_spec(spec))};
    });
}

tdho_status tdho_oscillator_custom(double m0, tdho_omega_sq_fn fn, void* user,
                                   tdho_oscillator** out) {
    return guard([&] {
        require(out, "out");
        if (fn == nullptr)
            tdho::fail(tdho::ErrorCode::invalid_argument, "callback must not be NULL");
        *out = new tdho_oscillator{
            tdho::OscillatorSpec::custom(m0, [fn, user](double t) { return fn(t, user); })};
    });
}

void tdho_oscillator_free(tdho_oscillator* osc) { delete osc; }

tdho_status tdho_frequency_sq(const tdho_oscillator* osc, double t, double* out) {
    return guard([&] {
        require(osc, "oscillator");
        require(out, "out");
        *out = tdho::eval_frequency_sq(osc->spec, t);
    });
}

tdho_status tdho_mass(const tdho_oscillator* osc, double t, double* out) {
    return guard([&] {
        require(osc, "oscillator");
        require(out, "out");
        *out = tdho::eval_mass(osc->spec, t);
    });
}

double tdho_wronskian_residual(const tdho_mode_sample* sample) {
    if (sample == nullptr) return -1.0;
    return tdho::wronskian_residual(to_cpp(*sample));
}

tdho_status tdho_init_minimum_uncertainty(const tdho_oscillator* osc, double t0,
                                          tdho_mode_sample* out) {
    return guard([&] {
        require(osc, "oscillator");
        require(out, "out");
        osc->spec.check_time(t0);
        *out = to_c(tdho::init_minimum_uncertainty(osc->spec, t0));
    });
}

tdho_status tdho_stationary_vacuum(const tdho_oscillator* osc, double t, tdho_mode_sample* out) {
    return guard([&] {
        require(osc, "oscillator");
        require(out, "out");
        *out = to_c(tdho::stationary_vacuum(osc->spec, t));
    });
}

tdho_status tdho_integrate_mode(const tdho_oscillator* osc, const tdho_mode_sample* init,
                                double t_end, double tol, const double* grid, size_t n,
                                tdho_trajectory** out) {
    return guard([&] {
        require(osc, "oscillator");
        require(init, "init");
        require(out, "out");
        if (n > 0) require(grid, "grid");
        const std::vector<double> g(grid, grid + n);
        *out = new tdho_trajectory{tdho::integrate_mode(osc->spec, to_cpp(*init), t_end, tol, g)};
    });
}

tdho_status tdho_trajectory_from_samples(const tdho_oscillator* osc,
                                         const tdho_mode_sample* samples, size_t n,
                                         tdho_trajectory** out) {
    return guard([&] {
        require(osc, "oscillator");
        require(out, "out");
        if (n > 0) require(samples, "samples");
        std::vector<tdho::ModeSample> s;
        s.reserve(n);
        for (size_t i = 0; i < n; ++i) s.push_back(to_cpp(samples[i]));
        *out = new tdho_trajectory{tdho::trajectory_from_samples(osc->spec, std::move(s))};
    });
}

tdho_status tdho_trajectory_mix(const tdho_trajectory* base, const tdho_squeeze_params* params,
                                tdho_trajectory** out) {
    return guard([&] {
        require(base, "base");
        require(params, "params");
        require(out, "out");
        const tdho::SqueezeParams p = to_cpp(*params);
        std::vector<tdho::ModeSample> s;
        s.reserve(base->traj.size());
        for (const tdho::ModeSample& b : base->traj.samples()) s.push_back(tdho::mix_mode(b, p));
        *out = new tdho_trajectory{tdho::trajectory_from_samples(base->traj.spec(), std::move(s))};
    });
}

void tdho_trajectory_free(tdho_trajectory* traj) { delete traj; }

size_t tdho_trajectory_size(const tdho_trajectory* traj) { return traj ? traj->traj.size() : 0; }

double tdho_trajectory_max_drift(const tdho_trajectory* traj) {
    return traj ? traj->traj.max_wronskian_drift() : -1.0;
}

tdho_status tdho_trajectory_sample(const tdho_trajectory* traj, size_t i, tdho_mode_sample* out) {
    return guard([&] {
        require(traj, "trajectory");
        require(out, "out");
        if (i >= traj->traj.size())
            tdho::fail(tdho::ErrorCode::invalid_argument, "sample index out of range");
        *out = to_c(traj->traj[i]);
    });
}

tdho_status tdho_ermakov_frames(const tdho_trajectory* traj, tdho_ermakov_frame* out, size_t cap,
                                size_t* written) {
    std::vector<tdho::ErmakovFrame> frames;
    const tdho_status st = guard([&] {
        require(traj, "trajectory");
        require(written, "written");
        frames = tdho::ermakov_frame(traj->traj);
    });
    if (st != TDHO_OK) return st;
    *written = frames.size();
    if (out == nullptr || cap < frames.size())
        return set_error(TDHO_ERR_BUFFER_TOO_SMALL, "frame buffer too small");
    for (size_t i = 0; i < frames.size(); ++i)
        out[i] = {frames[i].t, frames[i].xi, frames[i].dxi, frames[i].theta};
    return TDHO_OK;
}

tdho_status tdho_ermakov_residual(const tdho_trajectory* traj, double* out) {
    return guard([&] {
        require(traj, "trajectory");
        require(out, "out");
        *out = tdho::ermakov_residual(traj->traj);
    });
}

tdho_status tdho_moments(const tdho_mode_sample* sample, tdho_uncertainty* out) {
    return guard([&] {
        require(sample, "sample");
        require(out, "out");
        const tdho::UncertaintyReport r = tdho::moments(to_cpp(*sample));
        *out = {r.var_q, r.var_p, r.cov_qp, r.product};
    });
}

tdho_status tdho_energy_expectation(const tdho_mode_sample* sample, const tdho_oscillator* osc,
                                    tdho_energy* out) {
    return guard([&] {
        require(sample, "sample");
        require(osc, "oscillator");
        require(out, "out");
        const tdho::EnergyReport e = tdho::energy_expectation(to_cpp(*sample), osc->spec);
        *out = {e.epsilon, e.kinetic, e.potential};
    });
}

tdho_status tdho_gaussian_wavefunction(const tdho_mode_sample* sample, double q,
                                       tdho_complex* out) {
    return guard([&] {
        require(sample, "sample");
        require(out, "out");
        *out = to_c(tdho::gaussian_wavefunction(tdho::gaussian_state(to_cpp(*sample)), q));
    });
}

tdho_status tdho_gaussian_norm(const tdho_mode_sample* sample, double tol, double* out) {
    return guard([&] {
        require(sample, "sample");
        require(out, "out");
        if (!(tol > 0.0)) tdho::fail(tdho::ErrorCode::invalid_argument, "tol must be positive");
        *out = tdho::gaussian_norm(tdho::gaussian_state(to_cpp(*sample)), tol);
    });
}

tdho_status tdho_excitation_number(const tdho_squeeze_params* params, double* out) {
    return guard([&] {
        require(params, "params");
        require(out, "out");
        *out = tdho::excitation_number(to_cpp(*params));
    });
}

tdho_status tdho_polar_to_bogoliubov(double r, double delta, tdho_squeeze_params* out) {
    return guard([&] {
        require(out, "out");
        *out = to_c(tdho::polar_to_bogoliubov(r, delta));
    });
}

tdho_status tdho_params_from_bogoliubov(tdho_complex mu, tdho_complex nu,
                                        tdho_squeeze_params* out) {
    return guard([&] {
        require(out, "out");
        *out = to_c(tdho::SqueezeParams::from_bogoliubov(to_cpp(mu), to_cpp(nu)));
    });
}

tdho_status tdho_mix_mode(const tdho_mode_sample* base, const tdho_squeeze_params* params,
                          tdho_mode_sample* out) {
    return guard([&] {
        require(base, "base");
        require(params, "params");
        require(out, "out");
        *out = to_c(tdho::mix_mode(to_cpp(*base), to_cpp(*params)));
    });
}

tdho_status tdho_closed_form_xi_sq(double epsilon, double omega, double t, double* out) {
    return guard([&] {
        require(out, "out");
        *out = tdho::closed_form_xi_sq(epsilon, omega, t);
    });
}

tdho_status tdho_squeeze_from_energy(double epsilon, double omega, tdho_squeeze_params* out) {
    return guard([&] {
        require(out, "out");
        *out = to_c(tdho::squeeze_from_energy(epsilon, omega));
    });
}

tdho_status tdho_uncertainty_extrema(const tdho_squeeze_params* params, double* min_out,
                                     double* max_out) {
    return guard([&] {
        require(params, "params");
        require(min_out, "min_out");
        require(max_out, "max_out");
        const auto [lo, hi] = tdho::uncertainty_extrema(to_cpp(*params));
        *min_out = lo;
        *max_out = hi;
    });
}

tdho_status tdho_derive_spec(double H0, double m_sq, double k, int allow_imaginary,
                             tdho_desitter_spec* out) {
    return guard([&] {
        require(out, "out");
        *out = to_c(tdho::derive_spec_mass_sq(
            H0, m_sq, k,
            allow_imaginary ? tdho::OrderPolicy::allow_imaginary : tdho::OrderPolicy::real_only));
    });
}

tdho_status tdho_hankel_h2(double chi, double z, tdho_complex* value, tdho_complex* derivative) {
    return guard([&] {
        require(value, "value");
        const tdho::HankelValue h = tdho::hankel_h2(chi, z);
        *value = to_c(h.value);
        if (derivative) *derivative = to_c(h.derivative);
    });
}

tdho_status tdho_z_at_time(const tdho_desitter_spec* spec, double t, double* out) {
    return guard([&] {
        require(out, "out");
        *out = tdho::z_at_time(checked_spec(spec), t);
    });
}

tdho_status tdho_time_at_z(const tdho_desitter_spec* spec, double z, double* out) {
    return guard([&] {
        require(out, "out");
        *out = tdho::time_at_z(checked_spec(spec), z);
    });
}

tdho_status tdho_bunch_davies_mode(const tdho_desitter_spec* spec, double t,
                                   tdho_mode_sample* out) {
    return guard([&] {
        require(out, "out");
        *out = to_c(tdho::bunch_davies_mode(checked_spec(spec), t));
    });
}

tdho_status tdho_bd_init_sample(const tdho_desitter_spec* spec, double z_start,
                                tdho_mode_sample* out) {
    return guard([&] {
        require(out, "out");
        *out = to_c(tdho::bd_init_sample(checked_spec(spec), z_start));
    });
}

tdho_status tdho_mode_equation_residual(const tdho_trajectory* traj,
                                        const tdho_desitter_spec* spec, double* out) {
    return guard([&] {
        require(traj, "trajectory");
        require(out, "out");
        *out = tdho::mode_equation_residual(traj->traj, checked_spec(spec));
    });
}

tdho_status tdho_compare_bunch_davies(const tdho_desitter_spec* spec, double z_start, double z_end,
                                      size_t samples, double tol, tdho_comparison** out) {
    return guard([&] {
        require(out, "out");
        const tdho::DeSitterSpec d = checked_spec(spec);
        *out = new tdho_comparison{tdho::compare_bunch_davies(d, z_start, z_end, samples, tol), d};
    });
}

void tdho_comparison_free(tdho_comparison* cmp) { delete cmp; }

tdho_status tdho_comparison_summary_get(const tdho_comparison* cmp, tdho_comparison_summary* out) {
    return guard([&] {
        require(cmp, "comparison");
        require(out, "out");
        const tdho::BunchDaviesComparison& c = cmp->cmp;
        *out = {c.numeric.size(),          c.max_rel_dev_u,         c.max_rel_dev_du,
                c.max_wronskian_analytic,  c.max_wronskian_numeric, c.analytic.empty() ? 0 : 1};
    });
}

tdho_status tdho_comparison_csv(const tdho_comparison* cmp, char* buf, size_t cap,
                                size_t* needed) {
    return csv_out(
        [&](std::ostream& os) {
            require(cmp, "comparison");
            tdho::write_comparison_csv(os, cmp->cmp, cmp->spec);
        },
        buf, cap, needed);
}

tdho_status tdho_kscan_run(double H0, double m_sq, const double* ks, size_t nk, double z_start,
                           double z_end, size_t n, double tol, tdho_kscan** out) {
    return guard([&] {
        require(out, "out");
        if (nk > 0) require(ks, "ks");
        const std::vector<double> k(ks, ks + nk);
        *out = new tdho_kscan{tdho::k_scan(H0, m_sq, k, z_start, z_end, n, tol)};
    });
}

void tdho_kscan_free(tdho_kscan* scan) { delete scan; }

size_t tdho_kscan_size(const tdho_kscan* scan) { return scan ? scan->rows.size() : 0; }

tdho_status tdho_kscan_csv(const tdho_kscan* scan, char* buf, size_t cap, size_t* needed) {
    return csv_out(
        [&](std::ostream& os) {
            require(scan, "scan");
            tdho::write_kscan_csv(os, scan->rows);
        },
        buf, cap, needed);
}

tdho_status tdho_scan_squeeze_grid(const tdho_trajectory* base, const double* r_grid, size_t nr,
                                   const double* delta_grid, size_t nd,
                                   tdho_functional functional, double t_begin, double t_end,
                                   double t_star, tdho_selection** out) {
    return guard([&] {
        require(base, "base");
        require(out, "out");
        if (nr > 0) require(r_grid, "r_grid");
        if (nd > 0) require(delta_grid, "delta_grid");
        tdho::Functional f;
        switch (functional) {
        case TDHO_FUNCTIONAL_MAX: f = tdho::Functional::max_over_window; break;
        case TDHO_FUNCTIONAL_MEAN: f = tdho::Functional::mean_over_window; break;
        case TDHO_FUNCTIONAL_AT_TIME: f = tdho::Functional::at_time; break;
        default: tdho::fail(tdho::ErrorCode::invalid_argument, "unknown functional");
        }
        const std::vector<double> r(r_grid, r_grid + nr), d(delta_grid, delta_grid + nd);
        *out = new tdho_selection{
            tdho::scan_squeeze_grid(base->traj, r, d, f, {t_begin, t_end}, t_star)};
    });
}

void tdho_selection_free(tdho_selection* sel) { delete sel; }

tdho_status tdho_selection_summary_get(const tdho_selection* sel, tdho_selection_summary* out) {
    return guard([&] {
        require(sel, "selection");
        require(out, "out");
        const tdho::SelectionReport& r = sel->report;
        *out = {r.points.size(), r.argmin_index, r.argmin_r, r.argmin_delta, r.argmin_value,
                r.margin};
    });
}

tdho_status tdho_selection_point(const tdho_selection* sel, size_t i, double* r, double* delta,
                                 double* value) {
    return guard([&] {
        require(sel, "selection");
        if (i >= sel->report.points.size())
            tdho::fail(tdho::ErrorCode::invalid_argument, "point index out of range");
        const tdho::SelectionPoint& p = sel->report.points[i];
        if (r) *r = p.r;
        if (delta) *delta = p.delta;
        if (value) *value = p.value;
    });
}

tdho_status tdho_selection_csv(const tdho_selection* sel, char* buf, size_t cap, size_t* needed) {
    return csv_out(
        [&](std::ostream& os) {
            require(sel, "selection");
            tdho::write_selection_csv(os, sel->report);
        },
        buf, cap, needed);
}

tdho_status tdho_verify_inequalities(const tdho_trajectory* base,
                                     const tdho_squeeze_params* params, const double* t_grid,
                                     size_t n, tdho_inequality** out) {
    return guard([&] {
        require(base, "base");
        require(params, "params");
        require(out, "out");
        if (n > 0) require(t_grid, "t_grid");
        const std::vector<double> g(t_grid, t_grid + n);
        *out = new tdho_inequality{tdho::verify_inequalities(base->traj, to_cpp(*params), g)};
    });
}

void tdho_inequality_free(tdho_inequality* report) { delete report; }

tdho_status tdho_inequality_summary_get(const tdho_inequality* report,
                                        tdho_inequality_summary* out) {
    return guard([&] {
        require(report, "report");
        require(out, "out");
        const tdho::InequalityReport& r = report->report;
        *out = {r.rows.size(),     r.worst_product_a, r.worst_energy_a, r.worst_product_b,
                r.worst_energy_b,  r.pass_a ? 1 : 0,  r.pass_b ? 1 : 0};
    });
}

tdho_status tdho_inequality_row_get(const tdho_inequality* report, size_t i,
                                    tdho_inequality_row* out) {
    return guard([&] {
        require(report, "report");
        require(out, "out");
        if (i >= report->report.rows.size())
            tdho::fail(tdho::ErrorCode::invalid_argument, "row index out of range");
        const tdho::InequalityRow& r = report->report.rows[i];
        *out = {r.t, r.product_margin_a, r.product_margin_b, r.energy_margin_a, r.energy_margin_b};
    });
}

tdho_status tdho_inequality_csv(const tdho_inequality* report, char* buf, size_t cap,
                                size_t* needed) {
    return csv_out(
        [&](std::ostream& os) {
            require(report, "report");
            tdho::write_inequality_csv(os, report->report);
        },
        buf, cap, needed);
}

tdho_status tdho_trajectory_csv(const tdho_trajectory* traj, char* buf, size_t cap,
                                size_t* needed) {
    return csv_out(
        [&](std::ostream& os) {
            require(traj, "trajectory");
            tdho::write_trajectory_csv(os, traj->traj);
        },
        buf, cap, needed);
}

tdho_status tdho_reports_csv(const tdho_trajectory* traj, char* buf, size_t cap, size_t* needed) {
    return csv_out(
        [&](std::ostream& os) {
            require(traj, "trajectory");
            tdho::write_reports_csv(os, traj->traj);
        },
        buf, cap, needed);
}

tdho_status tdho_params_csv(const tdho_squeeze_params* params, size_t n, char* buf, size_t cap,
                            size_t* needed) {
    return csv_out(
        [&](std::ostream& os) {
            if (n > 0) require(params, "params");
            std::vector<tdho::SqueezeParams> p;
            for (size_t i = 0; i < n; ++i) p.push_back(to_cpp(params[i]));
            tdho::write_params_csv(os, p);
        },
        buf, cap, needed);
}

tdho_status tdho_format_double(double v, char* buf, size_t cap, size_t* needed) {
    return copy_out(tdho::format_double(v), buf, cap, needed);
}

tdho_status tdho_run_invariant_suite(double tol, tdho_verify_report** out) {
    return guard([&] {
        require(out, "out");
        if (!(tol > 0.0)) tdho::fail(tdho::ErrorCode::invalid_argument, "tol must be positive");
        tdho::SuiteOptions opt;
        opt.tol = tol;
        *out = new tdho_verify_report{tdho::run_invariant_suite(opt)};
    });
}

void tdho_verify_report_free(tdho_verify_report* report) { delete report; }

size_t tdho_verify_report_size(const tdho_verify_report* report) {
    return report ? report->checks.size() : 0;
}

tdho_status tdho_verify_report_check(const tdho_verify_report* report, size_t i, tdho_check* out) {
    return guard([&] {
        require(report, "report");
        require(out, "out");
        if (i >= report->checks.size())
            tdho::fail(tdho::ErrorCode::invalid_argument, "check index out of range");
        const tdho::CheckResult& c = report->checks[i];
        *out = {c.name.c_str(), c.measured, c.bound, c.upper ? 1 : 0, c.passed ? 1 : 0,
                c.gating ? 1 : 0};
    });
}

int tdho_verify_report_passed(const tdho_verify_report* report) {
    return report && tdho::suite_passed(report->checks) ? 1 : 0;
}

}  // extern "C"
