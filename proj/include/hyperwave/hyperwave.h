/* hyperwave: pseudospherical functions on the one-sheet hyperboloid.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed here; every call returns a status code and writes results
 * through out-parameters. hw_last_error() describes the most recent failure
 * on the calling thread.
 */
#ifndef HYPERWAVE_H
#define HYPERWAVE_H

#include <stddef.h>

#if defined(_WIN32)
#  define HW_API __declspec(dllexport)
#else
#  define HW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hw_status {
    HW_OK = 0,
    HW_ERR_DOMAIN = 1,          /* invalid parameters / outside admissible range */
    HW_ERR_POLE = 2,            /* Gamma pole or degenerate parameter */
    HW_ERR_NO_CONVERGENCE = 3,  /* series or quadrature tail bound not met */
    HW_ERR_UNKNOWN_NAME = 4,    /* unknown relation or suite name */
    HW_ERR_INVALID_ARGUMENT = 5 /* null pointer, bad enum value, ... */
} hw_status;

typedef struct hw_options hw_options; /* numerical policy */
typedef struct hw_series hw_series;   /* validated series/weight label */

HW_API const char* hw_version(void);

/* Thread-local message of the last failed call (empty string if none). */
HW_API const char* hw_last_error(void);

/* ---- options ----------------------------------------------------------- */

HW_API hw_status hw_options_create(hw_options** out);
HW_API void hw_options_destroy(hw_options* opts);

/* Keys: series-tol, transform-threshold, fd-step, quad-tol, quad-cutoff. */
HW_API hw_status hw_options_set(hw_options* opts, const char* key, double value);
HW_API hw_status hw_options_get(const hw_options* opts, const char* key, double* out);

/* ---- series construction ------------------------------------------------ */

/* Discrete series D+ (m >= k+1) and D- (m <= -(k+1)); k in {-1/2,0,1/2,1,...}. */
HW_API hw_status hw_series_dplus(double k, double m, hw_series** out);
HW_API hw_status hw_series_dminus(double k, double m, hw_series** out);

/* Principal series, ladder sequence 1 or 2; m integer or half-integer, any
 * sign (2m integral); lambda > 0. */
HW_API hw_status hw_series_principal_seq(int seq, double m, double lambda, hw_series** out);

/* Principal series raw even/odd function (parity 0 = even, 1 = odd). */
HW_API hw_status hw_series_principal_raw(int parity, double m, double lambda, hw_series** out);

/* Supplementary series, 0 < gamma < 1/2, integer m, parity as above.
 * Functions are returned unnormalized (constant 1). */
HW_API hw_status hw_series_supplementary(int parity, long m, double gamma, hw_series** out);

/* The m = +/-k family: integer k >= 0, free constants alpha/beta,
 * sign +1 selects weight +k, -1 selects -k. */
HW_API hw_status hw_series_newclass(int k, double alpha, double beta, int sign,
                                    hw_series** out);

HW_API void hw_series_destroy(hw_series* s);

/* Stable one-line description, e.g. "dplus k=1 m=2". */
HW_API hw_status hw_series_describe(const hw_series* s, char* buf, size_t buflen);

/* ---- evaluation ---------------------------------------------------------- */

HW_API hw_status hw_series_eval(const hw_series* s, const hw_options* opts, double tau,
                                double phi, double* re, double* im);

/* ---- verification --------------------------------------------------------
 * Runs the named relation catalog (all|numerics|discrete|continuous|newclass).
 * `tol_overrides` is NULL or "prefix=value,prefix=value" (e.g. "eigen=1e-3").
 * On success *json_out (free with hw_string_free) holds the full report and
 * the pass/fail counters are filled. Returns HW_OK even when checks fail;
 * inspect *fail_count.
 */
HW_API hw_status hw_verify_suite(const char* suite, const hw_options* opts,
                                 const char* tol_overrides, char** json_out,
                                 int* pass_count, int* fail_count);

HW_API void hw_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HYPERWAVE_H */
