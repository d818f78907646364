#ifndef SPIRALLOG_H
#define SPIRALLOG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SPIRALLOG_BUILDING_LIBRARY)
#define SL_API __attribute__((visibility("default")))
#else
#define SL_API
#endif

typedef enum sl_status {
    SL_OK = 0,
    SL_INVALID_ARGUMENT = 1,
    SL_NEAR_ZERO_LEADING_COEFFICIENT = 2,
    SL_NOT_UNIT_CONSTANT_TERM = 3,
    SL_NONZERO_CONSTANT_TERM = 4,
    SL_NONZERO_INNER_CONSTANT = 5,
    SL_OUTSIDE_DISK = 6,
    SL_DIVISION_BY_SMALL_COEFFICIENT = 7,
    SL_UNKNOWN_FAMILY = 8,
    SL_MISSING_ARTIFACTS = 9,
    SL_IO = 10,
    SL_INTERNAL = 11
} sl_status;

typedef struct sl_complex {
    double re;
    double im;
} sl_complex;

/* Opaque handles; release with the matching *_free. */
typedef struct sl_series sl_series;
typedef struct sl_function sl_function;

SL_API const char *sl_version(void);
SL_API const char *sl_status_name(sl_status status);
/* Message of the last failed call on this thread; empty after success. */
SL_API const char *sl_last_error_message(void);
/* Frees strings returned through char** out-parameters. */
SL_API void sl_string_free(char *s);

/* ---- truncated series ---- */

SL_API sl_status sl_series_create(const sl_complex *coeffs, size_t count, sl_series **out);
SL_API void sl_series_free(sl_series *s);
SL_API int sl_series_order(const sl_series *s);
/* Copies min(capacity, order + 1) coefficients; *written gets the count. */
SL_API sl_status sl_series_coefficients(const sl_series *s, sl_complex *out, size_t capacity, size_t *written);

SL_API sl_status sl_series_mul(const sl_series *a, const sl_series *b, sl_series **out);
SL_API sl_status sl_series_div(const sl_series *a, const sl_series *b, sl_series **out);
SL_API sl_status sl_series_log1(const sl_series *a, sl_series **out);
SL_API sl_status sl_series_exp0(const sl_series *a, sl_series **out);
SL_API sl_status sl_series_pow_real(const sl_series *a, double lam, sl_series **out);
SL_API sl_status sl_series_derivative(const sl_series *a, sl_series **out);
SL_API sl_status sl_series_integrate_quotient(const sl_series *g, sl_series **out);
SL_API sl_status sl_series_compose(const sl_series *outer, const sl_series *inner, sl_series **out);
SL_API sl_status sl_series_evaluate(const sl_series *a, sl_complex z, sl_complex *out);

/* ---- normalized functions ---- */

SL_API void sl_function_free(sl_function *f);
SL_API sl_status sl_function_from_series(const sl_series *s, const char *label, sl_function **out);
SL_API sl_status sl_function_series(const sl_function *f, sl_series **out);
SL_API sl_status sl_function_extremal_F(double lam, int m, int n, int order, sl_function **out);
SL_API sl_status sl_function_closed_form_G_F(double lam, int order, sl_function **out);
SL_API sl_status sl_function_koebe(double theta, int order, sl_function **out);
/* Seeded member of ST_SS, G or N; degree 0 draws the degree from the seed. */
SL_API sl_status sl_function_member(const char *family, double lam, uint64_t seed, int degree, int order,
                                    sl_function **out);
SL_API sl_status sl_function_transform_G(const sl_function *f, sl_function **out);
SL_API sl_status sl_function_transform_N(const sl_function *f, sl_function **out);
/* gamma_1..gamma_count into out[0..count-1]. */
SL_API sl_status sl_function_log_coefficients(const sl_function *f, int count, sl_complex *out);
SL_API sl_status sl_function_to_json(const sl_function *f, char **json);

/* ---- spiral domain ---- */

SL_API sl_status sl_q_eval(double lam, sl_complex z, sl_complex *out);
SL_API sl_status sl_spiral_contains(double lam, sl_complex w, double tol, int *inside);

/* ---- checks ----
 * check: gamma_st_ss, gamma_conjecture_G, gamma_sums_G, coefficients_G,
 * coefficients_N, hankel, fekete_szego, inverse_functional, growth_G,
 * growth_N, subordination, verify_ST_SS, verify_G, verify_N, verify_CONVEX,
 * verify_STARLIKE. delta is used by the two Fekete-Szego checks only.
 * Grid checks use the default grid. *report_json is a BoundReport document.
 */
SL_API sl_status sl_check(const sl_function *f, const char *check, double lam, double delta, char **report_json,
                          int *pass);

SL_API sl_status sl_li2(double x, double *out);

/* Runs a CLI command described by a JSON config. *output receives the JSON
 * or CSV text, *exit_code 0 (all pass) or 1 (a bound failed). Config and
 * I/O problems are returned as a status instead. */
SL_API sl_status sl_run_command(const char *config_json, char **output, int *exit_code);

#ifdef __cplusplus
}
#endif

#endif
