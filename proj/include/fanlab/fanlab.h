/* C interface to the fanlab library. Every function returns a status code;
 * on failure the message is available from fanlab_last_error() on the same
 * thread. Strings returned through char** are owned by the caller and must be
 * released with fanlab_string_free. */
#ifndef FANLAB_FANLAB_H
#define FANLAB_FANLAB_H

#include <stddef.h>

#if defined(FANLAB_BUILDING_LIBRARY)
#define FANLAB_API __attribute__((visibility("default")))
#else
#define FANLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fanlab_status {
  FANLAB_OK = 0,
  FANLAB_ERR_INVALID_ARGUMENT = 1,
  FANLAB_ERR_NON_POSITIVE_DENSITY = 2,
  FANLAB_ERR_DOMAIN = 3,
  FANLAB_ERR_NO_TWO_SHOCK = 4,
  FANLAB_ERR_NO_CONVERGENCE = 5,
  FANLAB_ERR_NO_SUBSOLUTION = 6,
  FANLAB_ERR_EMPTY_INTERVAL = 7,
  FANLAB_ERR_WINDOW_TOO_SMALL = 8,
  FANLAB_ERR_UNSUPPORTED_ORDER = 9,
  FANLAB_ERR_TIE_UNRESOLVED = 10,
  FANLAB_ERR_QUADRATURE_FAILURE = 11,
  FANLAB_ERR_INTERNAL = 100
} fanlab_status;

typedef enum fanlab_verdict {
  FANLAB_REJECTED = 0,
  FANLAB_ADMISSIBLE = 1,
  FANLAB_STRICTLY_ADMISSIBLE = 2
} fanlab_verdict;

typedef struct fanlab_case {
  double rho_minus;
  double rho_plus;
  double v_minus;
  double v_plus;
} fanlab_case;

typedef struct fanlab_data {
  double gamma;
  int allow_isothermal; /* nonzero permits gamma = 1 */
  fanlab_case states;
} fanlab_data;

typedef struct fanlab_two_shock {
  double rho_m;
  double v_m;
  double nu_minus;
  double nu_plus;
} fanlab_two_shock;

typedef struct fanlab_two_shock_check {
  double residual_left;  /* jump-condition residual norms */
  double residual_right;
  double production_left; /* nu [E] - [G], >= 0 when dissipative */
  double production_right;
} fanlab_two_shock_check;

typedef struct fanlab_subsolution {
  double rho1;
  double eps2;
  double nu_minus;
  double nu_plus;
  double alpha;
  double beta;
  double u11;
  double u12;
  double eps1;
  double C;
  double effective_pressure;
} fanlab_subsolution;

typedef struct fanlab_subsolution_check {
  double residual_norm;
  double production_left;
  double production_right;
  int admissible;
} fanlab_subsolution_check;

typedef struct fanlab_scan_options {
  int threads;
  double t_max;
  double padding;
  double half_period; /* L3 */
  double tol;
} fanlab_scan_options;

typedef struct fanlab_scan_record {
  double gamma;
  fanlab_case states;
  double rho_m;
  double rho1;
  double eps2;
  int status; /* 0 ok, 1 no sub-solution, 2 no convergence */
  int admissible;
  double nu_minus;
  double nu_plus;
  double beta;
  double eps1;
  double kappa;
  double rate_diff;
  int sarac_two_shock;
  int laap0_two_shock;
  int arac_two_shock;
  int dafermos_two_shock;
} fanlab_scan_record;

typedef struct fanlab_comparison fanlab_comparison;
typedef struct fanlab_grid fanlab_grid;
typedef struct fanlab_scan fanlab_scan;

FANLAB_API const char* fanlab_version(void);
FANLAB_API const char* fanlab_last_error(void);
FANLAB_API const char* fanlab_status_string(fanlab_status status);
FANLAB_API void fanlab_string_free(char* s);

FANLAB_API fanlab_scan_options fanlab_scan_options_default(void);

/* 2-shock solver */
FANLAB_API fanlab_status fanlab_two_shock_exists(const fanlab_data* data, int* exists,
                                                 double* discriminant);
FANLAB_API fanlab_status fanlab_solve_two_shock(const fanlab_data* data, double tol,
                                                fanlab_two_shock* out);
FANLAB_API fanlab_status fanlab_check_two_shock(const fanlab_data* data,
                                                const fanlab_two_shock* shock,
                                                fanlab_two_shock_check* out);

/* Fan sub-solutions */
FANLAB_API fanlab_status fanlab_solve_subsolution(const fanlab_data* data, double rho1,
                                                  double eps2, double tol,
                                                  fanlab_subsolution* out);
FANLAB_API fanlab_status fanlab_check_subsolution(const fanlab_data* data,
                                                  const fanlab_subsolution* sub,
                                                  fanlab_subsolution_check* out);
FANLAB_API fanlab_status fanlab_find_rho_star(const fanlab_data* data, double eps2, double tol,
                                              double* rho_star, double* rho_m);

/* Comparison of the 2-shock against the wild solutions of one sub-solution.
 * rho1 equal to rho_m (bitwise) selects the embedded 2-shock. */
FANLAB_API fanlab_status fanlab_compare(const fanlab_data* data, double rho1, double eps2,
                                        const fanlab_scan_options* options,
                                        fanlab_comparison** out);
FANLAB_API void fanlab_comparison_free(fanlab_comparison* c);
FANLAB_API fanlab_status fanlab_comparison_summary(const fanlab_comparison* c, double* kappa,
                                                   double* rate_diff, int* admissible);
/* criterion: "LAAP", "LAAP0", "ARAC", "sARAC" or "Dafermos"; label "2-shock"
 * or "wild". */
FANLAB_API fanlab_status fanlab_comparison_verdict(const fanlab_comparison* c,
                                                   const char* criterion, const char* label,
                                                   fanlab_verdict* out);
/* Full report: states, gap coefficients, rates, verdicts with witnesses and
 * 21 samples of D(t) on [0, t_max]. */
FANLAB_API fanlab_status fanlab_comparison_json(const fanlab_comparison* c, char** out);
/* CSV schema_version,t,action_two_shock,action_wild,gap over [0, t_max]. */
FANLAB_API fanlab_status fanlab_comparison_curve_csv(const fanlab_comparison* c, int samples,
                                                     char** out);
/* CSV of both fields at time t: schema_version,field,t,x2,rho,v2,E,L. */
FANLAB_API fanlab_status fanlab_comparison_field_csv(const fanlab_comparison* c, double t,
                                                     int samples, char** out);

/* Parameter grids */
/* Setters check their own axis and leave the grid unchanged on error. The
 * 2-shock existence of every (gamma, case) pair and the isothermal flag are
 * checked when a scan or summary runs. */
FANLAB_API fanlab_status fanlab_grid_default(fanlab_grid** out);
FANLAB_API fanlab_status fanlab_grid_counterexample_default(fanlab_grid** out);
FANLAB_API void fanlab_grid_free(fanlab_grid* g);
FANLAB_API fanlab_status fanlab_grid_set_rho1_fractions(fanlab_grid* g, const double* values,
                                                        size_t n);
FANLAB_API fanlab_status fanlab_grid_set_eps2(fanlab_grid* g, const double* values, size_t n);
FANLAB_API fanlab_status fanlab_grid_set_gammas(fanlab_grid* g, const double* values, size_t n);
FANLAB_API fanlab_status fanlab_grid_set_cases(fanlab_grid* g, const fanlab_case* cases,
                                               size_t n);
FANLAB_API fanlab_status fanlab_grid_set_allow_isothermal(fanlab_grid* g, int allow);
FANLAB_API fanlab_status fanlab_grid_json(const fanlab_grid* g, char** out);

/* Scans */
FANLAB_API fanlab_status fanlab_scan_run(const fanlab_grid* g, const fanlab_scan_options* options,
                                         fanlab_scan** out);
FANLAB_API void fanlab_scan_free(fanlab_scan* s);
FANLAB_API size_t fanlab_scan_size(const fanlab_scan* s);
FANLAB_API fanlab_status fanlab_scan_record_at(const fanlab_scan* s, size_t i,
                                               fanlab_scan_record* out);
FANLAB_API fanlab_status fanlab_scan_csv(const fanlab_scan* s, char** out);
FANLAB_API fanlab_status fanlab_scan_json(const fanlab_scan* s, char** out);

/* Summaries as JSON documents */
FANLAB_API fanlab_status fanlab_verify_global_selection(const fanlab_grid* g,
                                                        const fanlab_scan_options* options,
                                                        size_t* violations, char** out);
FANLAB_API fanlab_status fanlab_gamma_sweep(const fanlab_grid* g,
                                            const fanlab_scan_options* options, char** out);
FANLAB_API fanlab_status fanlab_find_counterexample(const fanlab_grid* g,
                                                    const fanlab_scan_options* options,
                                                    int* found, char** out);
/* Weak-form residuals of the 2-shock field and, when rho1 > 0, of the
 * sub-solution field under `levels` doublings of the quadrature resolution. */
FANLAB_API fanlab_status fanlab_verify_fields(const fanlab_data* data, double rho1, double eps2,
                                              double width, int resolution, int levels,
                                              double tol, int* decreasing, char** out);

#ifdef __cplusplus
}
#endif

#endif
