#ifndef TDHO_H
#define TDHO_H

/* C interface to the time-dependent oscillator library.
 *
 * Every fallible call returns a tdho_status; on failure the message is
 * available from tdho_last_error() on the same thread until the next call
 * fails. Handles are opaque and owned by the caller, who releases them with
 * the matching *_free function (passing NULL is allowed).
 *
 * CSV functions write into a caller buffer. *needed receives the size
 * including the terminating NUL. If buf is NULL or cap is too small the
 * call returns TDHO_ERR_BUFFER_TOO_SMALL and writes nothing. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(TDHO_BUILDING)
#    define TDHO_API __declspec(dllexport)
#  else
#    define TDHO_API __declspec(dllimport)
#  endif
#else
#  define TDHO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tdho_status {
    TDHO_OK = 0,
    TDHO_ERR_INVALID_ARGUMENT = 1,
    TDHO_ERR_DOMAIN = 2,
    TDHO_ERR_INTEGRATION_FAILURE = 3,
    TDHO_ERR_NO_INSTANTANEOUS_VACUUM = 4,
    TDHO_ERR_DECOMPOSITION = 5,
    TDHO_ERR_UNSUPPORTED_KIND = 6,
    TDHO_ERR_INSUFFICIENT_DATA = 7,
    TDHO_ERR_INVALID_PARAMS = 8,
    TDHO_ERR_BELOW_GROUND_STATE = 9,
    TDHO_ERR_IMAGINARY_ORDER = 10,
    TDHO_ERR_ASYMPTOTIC_REGIME = 11,
    TDHO_ERR_PHASE_ALIASING = 12,
    TDHO_ERR_IO = 13,
    TDHO_ERR_BUFFER_TOO_SMALL = 14,
    TDHO_ERR_INTERNAL = 99
} tdho_status;

typedef struct tdho_complex {
    double re;
    double im;
} tdho_complex;

typedef struct tdho_mode_sample {
    double t;
    tdho_complex u;
    tdho_complex du;
    double mass;
} tdho_mode_sample;

typedef struct tdho_squeeze_params {
    tdho_complex mu;
    tdho_complex nu;
    double r;
    double delta;
} tdho_squeeze_params;

typedef struct tdho_ermakov_frame {
    double t;
    double xi;
    double dxi;
    double theta;
} tdho_ermakov_frame;

typedef struct tdho_uncertainty {
    double var_q;
    double var_p;
    double cov_qp;
    double product;
} tdho_uncertainty;

typedef struct tdho_energy {
    double epsilon;
    double kinetic;
    double potential;
} tdho_energy;

typedef struct tdho_desitter_spec {
    double H0;
    double m;
    double m_sq;
    double k;
    double chi_sq; /* negative for imaginary order */
    double chi;
    int parity; /* 0 = cos, 1 = sin; metadata only */
} tdho_desitter_spec;

typedef enum tdho_functional {
    TDHO_FUNCTIONAL_MAX = 0,
    TDHO_FUNCTIONAL_MEAN = 1,
    TDHO_FUNCTIONAL_AT_TIME = 2
} tdho_functional;

typedef struct tdho_selection_summary {
    size_t points;
    size_t argmin_index;
    double argmin_r;
    double argmin_delta;
    double argmin_value;
    double margin;
} tdho_selection_summary;

typedef struct tdho_inequality_row {
    double t;
    double product_margin_a;
    double product_margin_b;
    double energy_margin_a;
    double energy_margin_b;
} tdho_inequality_row;

typedef struct tdho_inequality_summary {
    size_t rows;
    double worst_product_a;
    double worst_energy_a;
    double worst_product_b;
    double worst_energy_b;
    int pass_a;
    int pass_b;
} tdho_inequality_summary;

typedef struct tdho_comparison_summary {
    size_t samples;
    double max_rel_dev_u;
    double max_rel_dev_du;
    double max_wronskian_analytic;
    double max_wronskian_numeric;
    int has_analytic;
} tdho_comparison_summary;

typedef struct tdho_check {
    const char* name; /* owned by the report */
    double measured;
    double bound;
    int upper; /* 1: measured <= bound, 0: measured >= bound */
    int passed;
    int gating;
} tdho_check;

typedef struct tdho_oscillator tdho_oscillator;
typedef struct tdho_trajectory tdho_trajectory;
typedef struct tdho_selection tdho_selection;
typedef struct tdho_inequality tdho_inequality;
typedef struct tdho_comparison tdho_comparison;
typedef struct tdho_kscan tdho_kscan;
typedef struct tdho_verify_report tdho_verify_report;

/* Must be pure and safe to call concurrently. */
typedef double (*tdho_omega_sq_fn)(double t, void* user);

TDHO_API const char* tdho_last_error(void);
TDHO_API const char* tdho_status_name(tdho_status status);
TDHO_API const char* tdho_version(void);

/* oscillators */
TDHO_API tdho_status tdho_oscillator_constant(double m0, double omega_sq, tdho_oscillator** out);
TDHO_API tdho_status tdho_oscillator_tabulated(double m0, const double* times,
                                               const double* omega_sq, size_t n,
                                               tdho_oscillator** out);
TDHO_API tdho_status tdho_oscillator_load_profile(const char* path, double m0,
                                                  tdho_oscillator** out);
TDHO_API tdho_status tdho_oscillator_desitter(const tdho_desitter_spec* spec,
                                              tdho_oscillator** out);
TDHO_API tdho_status tdho_oscillator_custom(double m0, tdho_omega_sq_fn fn, void* user,
                                            tdho_oscillator** out);
TDHO_API void tdho_oscillator_free(tdho_oscillator* osc);
TDHO_API tdho_status tdho_frequency_sq(const tdho_oscillator* osc, double t, double* out);
TDHO_API tdho_status tdho_mass(const tdho_oscillator* osc, double t, double* out);

/* modes */
TDHO_API double tdho_wronskian_residual(const tdho_mode_sample* sample);
TDHO_API tdho_status tdho_init_minimum_uncertainty(const tdho_oscillator* osc, double t0,
                                                   tdho_mode_sample* out);
TDHO_API tdho_status tdho_stationary_vacuum(const tdho_oscillator* osc, double t,
                                            tdho_mode_sample* out);
TDHO_API tdho_status tdho_integrate_mode(const tdho_oscillator* osc, const tdho_mode_sample* init,
                                         double t_end, double tol, const double* grid, size_t n,
                                         tdho_trajectory** out);
TDHO_API tdho_status tdho_trajectory_from_samples(const tdho_oscillator* osc,
                                                  const tdho_mode_sample* samples, size_t n,
                                                  tdho_trajectory** out);
TDHO_API tdho_status tdho_trajectory_mix(const tdho_trajectory* base,
                                         const tdho_squeeze_params* params,
                                         tdho_trajectory** out);
TDHO_API void tdho_trajectory_free(tdho_trajectory* traj);
TDHO_API size_t tdho_trajectory_size(const tdho_trajectory* traj);
TDHO_API double tdho_trajectory_max_drift(const tdho_trajectory* traj);
TDHO_API tdho_status tdho_trajectory_sample(const tdho_trajectory* traj, size_t i,
                                            tdho_mode_sample* out);

/* invariant states */
TDHO_API tdho_status tdho_ermakov_frames(const tdho_trajectory* traj, tdho_ermakov_frame* out,
                                         size_t cap, size_t* written);
TDHO_API tdho_status tdho_ermakov_residual(const tdho_trajectory* traj, double* out);
TDHO_API tdho_status tdho_moments(const tdho_mode_sample* sample, tdho_uncertainty* out);
TDHO_API tdho_status tdho_energy_expectation(const tdho_mode_sample* sample,
                                             const tdho_oscillator* osc, tdho_energy* out);
TDHO_API tdho_status tdho_gaussian_wavefunction(const tdho_mode_sample* sample, double q,
                                                tdho_complex* out);
TDHO_API tdho_status tdho_gaussian_norm(const tdho_mode_sample* sample, double tol, double* out);
TDHO_API tdho_status tdho_excitation_number(const tdho_squeeze_params* params, double* out);

/* squeezing */
TDHO_API tdho_status tdho_polar_to_bogoliubov(double r, double delta, tdho_squeeze_params* out);
TDHO_API tdho_status tdho_params_from_bogoliubov(tdho_complex mu, tdho_complex nu,
                                                 tdho_squeeze_params* out);
TDHO_API tdho_status tdho_mix_mode(const tdho_mode_sample* base, const tdho_squeeze_params* params,
                                   tdho_mode_sample* out);
TDHO_API tdho_status tdho_closed_form_xi_sq(double epsilon, double omega, double t, double* out);
TDHO_API tdho_status tdho_squeeze_from_energy(double epsilon, double omega,
                                              tdho_squeeze_params* out);
TDHO_API tdho_status tdho_uncertainty_extrema(const tdho_squeeze_params* params, double* min_out,
                                              double* max_out);

/* de Sitter modes */
TDHO_API tdho_status tdho_derive_spec(double H0, double m_sq, double k, int allow_imaginary,
                                      tdho_desitter_spec* out);
TDHO_API tdho_status tdho_hankel_h2(double chi, double z, tdho_complex* value,
                                    tdho_complex* derivative);
TDHO_API tdho_status tdho_z_at_time(const tdho_desitter_spec* spec, double t, double* out);
TDHO_API tdho_status tdho_time_at_z(const tdho_desitter_spec* spec, double z, double* out);
TDHO_API tdho_status tdho_bunch_davies_mode(const tdho_desitter_spec* spec, double t,
                                            tdho_mode_sample* out);
TDHO_API tdho_status tdho_bd_init_sample(const tdho_desitter_spec* spec, double z_start,
                                         tdho_mode_sample* out);
TDHO_API tdho_status tdho_mode_equation_residual(const tdho_trajectory* traj,
                                                 const tdho_desitter_spec* spec, double* out);
TDHO_API tdho_status tdho_compare_bunch_davies(const tdho_desitter_spec* spec, double z_start,
                                               double z_end, size_t samples, double tol,
                                               tdho_comparison** out);
TDHO_API void tdho_comparison_free(tdho_comparison* cmp);
TDHO_API tdho_status tdho_comparison_summary_get(const tdho_comparison* cmp,
                                                 tdho_comparison_summary* out);
TDHO_API tdho_status tdho_comparison_csv(const tdho_comparison* cmp, char* buf, size_t cap,
                                         size_t* needed);
TDHO_API tdho_status tdho_kscan_run(double H0, double m_sq, const double* ks, size_t nk,
                                    double z_start, double z_end, size_t n, double tol,
                                    tdho_kscan** out);
TDHO_API void tdho_kscan_free(tdho_kscan* scan);
TDHO_API size_t tdho_kscan_size(const tdho_kscan* scan);
TDHO_API tdho_status tdho_kscan_csv(const tdho_kscan* scan, char* buf, size_t cap,
                                    size_t* needed);

/* vacuum selection */
TDHO_API tdho_status tdho_scan_squeeze_grid(const tdho_trajectory* base, const double* r_grid,
                                            size_t nr, const double* delta_grid, size_t nd,
                                            tdho_functional functional, double t_begin,
                                            double t_end, double t_star, tdho_selection** out);
TDHO_API void tdho_selection_free(tdho_selection* sel);
TDHO_API tdho_status tdho_selection_summary_get(const tdho_selection* sel,
                                                tdho_selection_summary* out);
TDHO_API tdho_status tdho_selection_point(const tdho_selection* sel, size_t i, double* r,
                                          double* delta, double* value);
TDHO_API tdho_status tdho_selection_csv(const tdho_selection* sel, char* buf, size_t cap,
                                        size_t* needed);

TDHO_API tdho_status tdho_verify_inequalities(const tdho_trajectory* base,
                                              const tdho_squeeze_params* params,
                                              const double* t_grid, size_t n,
                                              tdho_inequality** out);
TDHO_API void tdho_inequality_free(tdho_inequality* report);
TDHO_API tdho_status tdho_inequality_summary_get(const tdho_inequality* report,
                                                 tdho_inequality_summary* out);
TDHO_API tdho_status tdho_inequality_row_get(const tdho_inequality* report, size_t i,
                                             tdho_inequality_row* out);
TDHO_API tdho_status tdho_inequality_csv(const tdho_inequality* report, char* buf, size_t cap,
                                         size_t* needed);

/* serialization of trajectories and per-sample reports */
TDHO_API tdho_status tdho_trajectory_csv(const tdho_trajectory* traj, char* buf, size_t cap,
                                         size_t* needed);
TDHO_API tdho_status tdho_reports_csv(const tdho_trajectory* traj, char* buf, size_t cap,
                                      size_t* needed);
TDHO_API tdho_status tdho_params_csv(const tdho_squeeze_params* params, size_t n, char* buf,
                                     size_t cap, size_t* needed);
TDHO_API tdho_status tdho_format_double(double v, char* buf, size_t cap, size_t* needed);

/* invariant suite */
TDHO_API tdho_status tdho_run_invariant_suite(double tol, tdho_verify_report** out);
TDHO_API void tdho_verify_report_free(tdho_verify_report* report);
TDHO_API size_t tdho_verify_report_size(const tdho_verify_report* report);
TDHO_API tdho_status tdho_verify_report_check(const tdho_verify_report* report, size_t i,
                                              tdho_check* out);
TDHO_API int tdho_verify_report_passed(const tdho_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif
