/*
 * C interface to the threefield theta series library.
 *
 * The library computes the weight-1 theta series
 *     Theta = q rho(q^24) + q^5 rho*(q^24)
 * attached to the quadratic fields Q(sqrt(-6)), Q(i), Q(sqrt(6)) by five
 * independent routes (three congruence lattice sums, an eta quotient, a
 * signed colored-partition product), verifies their exact coefficient-wise
 * agreement, and evaluates the modularity side conditions (eta-quotient
 * criteria, cusp orders, Sturm bound). It also computes the classical
 * sigma / sigma* companion series for Q(sqrt(6)).
 *
 * All series handles are opaque and immutable; every function is safe to
 * call from multiple threads as long as each handle is used from one thread
 * at a time. Strings returned through char** out-parameters are owned by
 * the caller and released with tf_string_free.
 */

#ifndef THREEFIELD_H
#define THREEFIELD_H

#include <stdint.h>

#if defined(_WIN32)
#define TF_API __declspec(dllexport)
#else
#define TF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tf_series tf_series;

typedef enum tf_status {
    TF_OK = 0,
    TF_ERR_INVALID = 1,   /* bad argument, unknown name, precondition violation */
    TF_ERR_OVERFLOW = 2,  /* a coefficient left the 64-bit range */
    TF_ERR_SUPPORT = 3,   /* a series violated its mod-24 support law */
    TF_ERR_DATA = 4,      /* embedded table data failed a consistency check */
    TF_ERR_INTERNAL = 5,
} tf_status;

TF_API const char* tf_version(void);

/* Human-readable detail for the most recent failure on this thread. */
TF_API const char* tf_last_error(void);

/*
 * Compute a series to q^terms.
 *   series: "theta" | "rho" | "rhostar" | "sigma" | "sigmastar"
 *   route:  "k1" | "k2" | "k3" | "eta" | "partitions" | "bqf" | "hyper"
 * Valid combinations: theta with k1/k2/k3; rho with k1/k2/k3/eta/partitions;
 * rhostar with k1/k2/k3; sigma with bqf/hyper; sigmastar with bqf.
 */
TF_API tf_status tf_series_compute(const char* series, const char* route, int64_t terms,
                                   tf_series** out);

TF_API void tf_series_free(tf_series* s);

/*
 * The q-hypergeometric sigma sum under an explicit exponent convention,
 * "triangular" (n(n+1)/2) or "binomial" (n(n-1)/2). The lattice route
 * adjudicates between them; "hyper" in tf_series_compute is the triangular
 * convention, which is the one that matches.
 */
TF_API tf_status tf_sigma_hypergeometric(int64_t terms, const char* convention, tf_series** out);

TF_API int64_t tf_series_offset(const tf_series* s);
TF_API int64_t tf_series_truncation(const tf_series* s);

/* Coefficient of q^n; fails with TF_ERR_INVALID above the truncation. */
TF_API tf_status tf_series_coeff(const tf_series* s, int64_t n, int64_t* out);

/* {"name":..., "offset":..., "truncation":..., "coeffs":[...]} */
TF_API tf_status tf_series_to_json(const tf_series* s, const char* name, char** out);

/* "n,c" lines; nonzero_only skips zero coefficients. */
TF_API tf_status tf_series_to_csv(const tf_series* s, int nonzero_only, char** out);

TF_API void tf_string_free(char* s);

/*
 * Exact comparison of two routes for the same series through q^terms.
 * *equal is 1 or 0; the JSON report carries the first mismatch, if any.
 */
TF_API tf_status tf_verify(const char* series, const char* lhs_route, const char* rhs_route,
                           int64_t terms, int* equal, char** report_json);

/* q^2 sigma(q^24) + sigma*(q^24) against the combined lattice series. */
TF_API tf_status tf_sigma_identity_check(int64_t terms, int* equal, char** report_json);

/*
 * The eta quotient against the imaginary-field lattice route at the Theta
 * exponent scale through q^theta_terms. The weight-1 level-2304 Sturm bound
 * is 294912; passing that value reproduces the full modular-equality proof
 * obligation.
 */
TF_API tf_status tf_sturm_scale_check(int64_t theta_terms, int* equal, char** report_json);

/* (level^2/12) prod_{p|level} (1 - 1/p^2), exact; reported as a rational
 * with an integrality flag. */
TF_API tf_status tf_sturm_bound(int64_t level, char** report_json);

/*
 * Modularity checks for an eta quotient given as "delta:r,delta:r,...",
 * e.g. "24:-3,48:8,96:-3" at level 2304: weight, the two mod-24 sums,
 * cusp orders for every divisor of the level, and the Sturm bound.
 */
TF_API tf_status tf_eta_check(const char* quotient, int64_t level, char** report_json);

/* Embedded ray-class table rows ("k1" | "k2" | "k3" | "all"), one JSON
 * object per line. */
TF_API tf_status tf_tables(const char* field, char** jsonl);

/* Signed colored-partition counts r_e(n), r_o(n), r(n) as JSON. */
TF_API tf_status tf_partition_counts(int64_t n, char** json);

#ifdef __cplusplus
}
#endif

#endif /* THREEFIELD_H */
