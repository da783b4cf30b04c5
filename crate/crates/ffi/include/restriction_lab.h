#ifndef RESTRICTION_LAB_H
#define RESTRICTION_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of every fallible call.
 */
typedef enum RlStatus {
  RL_STATUS_OK = 0,
  RL_STATUS_NULL_POINTER = 1,
  RL_STATUS_PARSE = 2,
  RL_STATUS_DOMAIN = 3,
  RL_STATUS_NUMERICAL = 4,
  RL_STATUS_CONFIG = 5,
  RL_STATUS_INTERNAL = 6,
  RL_STATUS_PANIC = 7,
} RlStatus;

/**
 * Interpolation certificate for either weight family.
 */
typedef struct RlCertificate RlCertificate;

/**
 * Extrema `z_j` of `J0` with the values `J0(z_j)`.
 */
typedef struct RlExtrema RlExtrema;

/**
 * Boundedness verdict of a classifier.
 */
typedef struct RlVerdict RlVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Classifies the separable weight `(1+|x|)^-alpha (1+|y|)^-beta`.
 *
 * # Safety
 * String arguments are null or valid C strings; `out` is null or writable.
 */
enum RlStatus rl_classify_separable(const char *alpha,
                                    const char *beta,
                                    const char *r,
                                    const char *q,
                                    struct RlVerdict **out);

/**
 * Classifies the radial weight `(1+|x|+|y|)^-gamma`.
 *
 * # Safety
 * String arguments are null or valid C strings; `out` is null or writable.
 */
enum RlStatus rl_classify_radial(const char *gamma,
                                 const char *r,
                                 const char *q,
                                 struct RlVerdict **out);

/**
 * 1 if bounded, 0 if unbounded, -1 for a null handle.
 *
 * # Safety
 * `v` is null or a live handle.
 */
int rl_verdict_is_bounded(const struct RlVerdict *v);

/**
 * Text form, e.g. `BOUNDED case=iv`. Release with [`rl_string_free`].
 *
 * # Safety
 * `v` is null or a live handle.
 */
char *rl_verdict_describe(const struct RlVerdict *v);

/**
 * # Safety
 * `v` is null or a handle from a classify call, not yet freed.
 */
void rl_verdict_free(struct RlVerdict *v);

/**
 * Separable interpolation certificate. `*out` is null when infeasible.
 *
 * # Safety
 * String arguments are null or valid C strings; `out` is null or writable.
 */
enum RlStatus rl_solve_separable(const char *alpha,
                                 const char *beta,
                                 const char *r,
                                 const char *q,
                                 struct RlCertificate **out);

/**
 * Radial interpolation certificate. `*out` is null when infeasible.
 *
 * # Safety
 * String arguments are null or valid C strings; `out` is null or writable.
 */
enum RlStatus rl_solve_radial(const char *gamma,
                              const char *r,
                              const char *q,
                              struct RlCertificate **out);

/**
 * Text form with exact rationals, e.g. `theta=1/2 q0=... r1=...`.
 * Release with [`rl_string_free`].
 *
 * # Safety
 * `c` is null or a live handle.
 */
char *rl_certificate_describe(const struct RlCertificate *c);

/**
 * # Safety
 * `c` is null or a handle from a solve call, not yet freed.
 */
void rl_certificate_free(struct RlCertificate *c);

/**
 * `J0(x)`.
 */
double rl_bessel_j0(double x);

/**
 * First `n` positive extrema of `J0`.
 *
 * # Safety
 * `out` is null or writable.
 */
enum RlStatus rl_j0_extrema(size_t n, struct RlExtrema **out);

/**
 * Number of extrema, 0 for a null handle.
 *
 * # Safety
 * `t` is null or a live handle.
 */
size_t rl_extrema_len(const struct RlExtrema *t);

/**
 * Writes `z_j` and `J0(z_j)` for the zero-based index `i`.
 *
 * # Safety
 * `t` is null or a live handle; `z` and `value` are null or writable.
 */
enum RlStatus rl_extrema_get(const struct RlExtrema *t, size_t i, double *z, double *value);

/**
 * `min_j j^{1/2} |J0(z_j)|` over the table, NaN for a null handle.
 *
 * # Safety
 * `t` is null or a live handle.
 */
double rl_extrema_envelope(const struct RlExtrema *t);

/**
 * # Safety
 * `t` is null or a handle from [`rl_j0_extrema`], not yet freed.
 */
void rl_extrema_free(struct RlExtrema *t);

/**
 * Releases a string returned by a `*_describe` function.
 *
 * # Safety
 * `s` is null or a string from this library, not yet freed.
 */
void rl_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library on the same thread.
 */
const char *rl_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RESTRICTION_LAB_H */
