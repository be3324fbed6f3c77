#ifndef DELANGE_DELANGE_H
#define DELANGE_DELANGE_H

/* C interface to the short-interval toolkit. Every call returns a dl_status;
   on failure dl_last_error_message() describes the error for the calling
   thread. Handles are opaque and released with the matching _free call. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DL_BUILDING_LIBRARY)
#define DL_API __declspec(dllexport)
#else
#define DL_API __declspec(dllimport)
#endif
#else
#define DL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dl_status {
  DL_OK = 0,
  DL_ERR_POLE_AT_ONE = 1,
  DL_ERR_OUT_OF_VALIDATED_RANGE,
  DL_ERR_ORDER_TOO_HIGH,
  DL_ERR_ZERO_BASE,
  DL_ERR_TRUNCATION_MISMATCH,
  DL_ERR_LOG_OF_ZERO_CONSTANT_TERM,
  DL_ERR_UNKNOWN_FAMILY,
  DL_ERR_PARAMETER_OUT_OF_RANGE,
  DL_ERR_NONCONVERGENT_PRODUCT,
  DL_ERR_DUPLICATE_PRIME,
  DL_ERR_WINDOW_TOO_LARGE,
  DL_ERR_INVALID_WINDOW,
  DL_ERR_ORDER_EXCEEDS_COEFFICIENTS,
  DL_ERR_LINDELOF_REQUIRES_DELTA_ABOVE_ONE,
  DL_ERR_PARSE_ERROR,
  DL_ERR_BETA_OUT_OF_RANGE,
  DL_ERR_NO_ADMISSIBLE_CL,
  DL_ERR_DEGENERATE_BLOCK,
  DL_ERR_NO_CLOSED_FORM,
  DL_ERR_QUADRATURE_NOT_CONVERGED,
  DL_ERR_IO_ERROR,
  DL_ERR_INVALID_ARGUMENT = 64,
  DL_ERR_INTERNAL = 65
} dl_status;

typedef struct dl_complex {
  double re;
  double im;
} dl_complex;

typedef struct dl_family dl_family;
typedef struct dl_coeffs dl_coeffs;
typedef struct dl_zeroset dl_zeroset;
typedef struct dl_contour dl_contour;

DL_API const char* dl_version(void);
DL_API const char* dl_status_name(dl_status status);
/* Message of the last failed call on this thread; "" after a success. */
DL_API const char* dl_last_error_message(void);

/* zeta and gamma */
DL_API dl_status dl_zeta(dl_complex s, dl_complex* out);
DL_API dl_status dl_log_zeta(dl_complex s, dl_complex* out);
DL_API dl_status dl_stieltjes(int n, double* out);
DL_API dl_status dl_recip_gamma(dl_complex z, dl_complex* out);

/* families: "one", "divisor[:k]", "omega:z", "sqfree[:z]" */
DL_API dl_status dl_family_parse(const char* spec, dl_family** out);
DL_API void dl_family_free(dl_family* family);
/* Canonical spec, valid while the handle lives. */
DL_API const char* dl_family_spec(const dl_family* family);
DL_API dl_status dl_family_kappa(const dl_family* family, double* kappa, dl_complex* w);
DL_API dl_status dl_family_value(const dl_family* family, uint64_t n, dl_complex* out);
DL_API dl_status dl_family_closed_form(const dl_family* family, dl_complex s, dl_complex* out);

/* expansion coefficients */
typedef enum dl_coeff_kind { DL_COEFF_GAMMA = 0, DL_COEFF_G = 1, DL_COEFF_LAMBDA = 2 } dl_coeff_kind;

DL_API dl_status dl_coeffs_compute(const dl_family* family, int order, dl_coeffs** out);
DL_API void dl_coeffs_free(dl_coeffs* coeffs);
DL_API int dl_coeffs_order(const dl_coeffs* coeffs);
DL_API dl_status dl_coeffs_get(const dl_coeffs* coeffs, dl_coeff_kind kind, int index, dl_complex* out);

/* windows (x, x + y] */
DL_API dl_status dl_exact_sum(const dl_family* family, uint64_t x, uint64_t y, unsigned workers, dl_complex* out);
/* Writes up to capacity prime powers; *count receives the total needed. */
DL_API dl_status dl_trial_division(uint64_t n, uint64_t* primes, int* exponents, size_t capacity, size_t* count);
DL_API dl_status dl_window_length(uint64_t x, double exponent, uint64_t* out);

/* admissible exponents */
typedef enum dl_theta_branch { DL_THETA_CASE1 = 0, DL_THETA_CASE2 = 1, DL_THETA_LINDELOF = 2 } dl_theta_branch;

typedef struct dl_theta_result {
  double value;
  dl_theta_branch branch;
  double kappa_split;
} dl_theta_result;

/* regime: "unconditional", "zdh" or "lindelof" (long names accepted) */
DL_API dl_status dl_theta(double kappa, double delta, const char* regime, double eta1, double epsilon, double bound,
                          dl_theta_result* out);
DL_API dl_status dl_prior_theta_bound(double kappa, double delta, double* out);
DL_API const char* dl_theta_branch_name(dl_theta_branch branch);

typedef struct dl_remainder_params {
  double a1;
  double a2;
  double M;
} dl_remainder_params;

DL_API dl_remainder_params dl_remainder_defaults(void);
DL_API dl_status dl_predict(const dl_coeffs* coeffs, uint64_t x, uint64_t y, int N, dl_complex* out);
/* params may be NULL for the defaults */
DL_API dl_status dl_remainder_bound(const dl_coeffs* coeffs, uint64_t x, uint64_t y, int N,
                                    const dl_remainder_params* params, double* out);

typedef struct dl_experiment_record {
  uint64_t x;
  uint64_t y;
  int N;
  dl_complex exact;
  dl_complex predicted;
  double remainder_bound;
  double rel_error;
} dl_experiment_record;

/* out must hold count records */
DL_API dl_status dl_run_experiment(const dl_family* family, const uint64_t* x_grid, size_t count, double theta_exponent,
                                   int N, int order, const dl_remainder_params* params, unsigned workers,
                                   dl_experiment_record* out);

/* zeros */
DL_API dl_status dl_zeroset_load(const char* path, double T, dl_zeroset** out);
DL_API dl_status dl_zeroset_parse(const char* text, double T, dl_zeroset** out);
DL_API dl_status dl_zeroset_synthetic(uint64_t seed, double T, double alpha, dl_zeroset** out);
DL_API void dl_zeroset_free(dl_zeroset* zeros);
DL_API size_t dl_zeroset_size(const dl_zeroset* zeros);
DL_API dl_status dl_zeroset_get(const dl_zeroset* zeros, size_t index, double* beta, double* gamma);

typedef struct dl_density_report {
  double sigma;
  double T;
  int64_t count;
  double huxley_bound;
  double ratio;
  double sigma_exceptional;
  int64_t exceptional_count;
  double t_eps;
  double exceptional_ratio;
} dl_density_report;

DL_API dl_status dl_zero_density(const dl_zeroset* zeros, double sigma, double T, double C_star, double epsilon,
                                 dl_density_report* out);

/* contour */
enum { DL_VCASE_COUNT = 5 };

typedef struct dl_contour_report {
  int symmetric;
  int connected;
  int axis_parallel;
  int clearance;
  size_t offending;
  int64_t v_tally[DL_VCASE_COUNT];
  int64_t h_tally[DL_VCASE_COUNT];
} dl_contour_report;

/* corner_eps = 0 uses H/100 per block */
DL_API dl_status dl_contour_build(const dl_zeroset* zeros, double T, double alpha, double eta, double C_star,
                                  double logx, double corner_eps, dl_contour** out);
DL_API void dl_contour_free(dl_contour* contour);
DL_API size_t dl_contour_piece_count(const dl_contour* contour);
DL_API dl_status dl_contour_piece(const dl_contour* contour, size_t index, dl_complex* a, dl_complex* b,
                                  const char** label);
DL_API dl_status dl_contour_validate(const dl_contour* contour, const dl_zeroset* zeros, double alpha,
                                     dl_contour_report* out);
DL_API const char* dl_vcase_name(int vcase);

/* quadrature checks */
typedef enum dl_quadrature_scheme { DL_QUAD_TRAPEZOID = 0, DL_QUAD_GAUSS_SEGMENT = 1 } dl_quadrature_scheme;

typedef struct dl_quadrature {
  int nodes_per_unit;
  dl_quadrature_scheme scheme;
  double abs_tol;
} dl_quadrature;

DL_API dl_quadrature dl_quadrature_defaults(void);

typedef struct dl_perron_report {
  dl_complex value;
  double T;
  int nudged;
  double b;
  double step_change;
  int64_t nodes;
} dl_perron_report;

/* ordinates may be NULL; b = 1 + b_shift/log x */
DL_API dl_status dl_perron_line_sum(const dl_family* family, uint64_t x, uint64_t y, double T,
                                    const dl_quadrature* quad, double b_shift, const dl_zeroset* ordinates,
                                    dl_perron_report* out);

typedef struct dl_loop_report {
  dl_complex value;
  double reference;
  double rel_dev;
  double step_change;
  int64_t nodes;
} dl_loop_report;

DL_API dl_status dl_hankel_main_term(double u, double kappa, int l, double r, const dl_quadrature* quad, double eta,
                                     dl_loop_report* out);
DL_API dl_status dl_ml_integral_check(double kappa, int l, uint64_t x, uint64_t y, const dl_quadrature* quad,
                                      double eta, dl_loop_report* out);

#ifdef __cplusplus
}
#endif

#endif
