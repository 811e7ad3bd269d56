/* C interface to the yendo library. Generated by cbindgen; do not edit. */

#ifndef YENDO_H
#define YENDO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every fallible call.
 */
typedef enum {
  YENDO_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  YENDO_STATUS_NULL_ARGUMENT = 1,
  /**
   * Arguments outside the supported domain (bad partition, g out of
   * range, dimension bounds, model bounds).
   */
  YENDO_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The requested `(m, g)` does not index a summand: `C(m+2g, g)` is even.
   */
  YENDO_STATUS_NOT_A_SUMMAND = 3,
  /**
   * An internal invariant failed; this is a bug, not a usage error.
   */
  YENDO_STATUS_INTERNAL = 4,
} YendoStatus;

/**
 * Opaque handle to the algebra of one two-part partition.
 */
typedef struct YendoContext YendoContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates the algebra for `m = lambda1 - lambda2` and `lambda2`.
 * On success stores the handle in `*out`.
 *
 * # Safety
 * `out` must be a valid pointer to writable memory.
 */
YendoStatus yendo_context_new(uint64_t m, uint64_t lambda2, YendoContext **out);

/**
 * Creates the algebra for the partition `(lambda1, lambda2)`.
 *
 * # Safety
 * `out` must be a valid pointer to writable memory.
 */
YendoStatus yendo_context_for_lambda(uint64_t lambda1, uint64_t lambda2, YendoContext **out);

/**
 * Releases a handle created by the constructors. Null is a no-op.
 *
 * # Safety
 * `ctx` must be null or a pointer previously returned by a constructor,
 * and must not be used afterwards.
 */
void yendo_context_free(YendoContext *ctx);

/**
 * Vector-space dimension `lambda2 + 1` of the algebra; 0 for null.
 *
 * # Safety
 * `ctx` must be null or a valid handle.
 */
uint64_t yendo_context_dimension(const YendoContext *ctx);

/**
 * Multiplication table of the algebra as a JSON document.
 *
 * # Safety
 * `ctx` must be a valid handle; `out` must point to writable memory.
 */
YendoStatus yendo_mult_table_json(const YendoContext *ctx, char **out);

/**
 * Summand criterion for every `g` as a JSON document.
 *
 * # Safety
 * `ctx` must be a valid handle; `out` must point to writable memory.
 */
YendoStatus yendo_decompose_json(const YendoContext *ctx, char **out);

/**
 * The idempotent family as a JSON document.
 *
 * # Safety
 * `ctx` must be a valid handle; `out` must point to writable memory.
 */
YendoStatus yendo_idempotents_json(const YendoContext *ctx, char **out);

/**
 * Basis, generators and presentation of the summand selected by `g`,
 * as a JSON document.
 *
 * # Safety
 * `ctx` must be a valid handle; `out` must point to writable memory.
 */
YendoStatus yendo_endo_json(const YendoContext *ctx, uint64_t g, char **out);

/**
 * Canonical presentation of dimension `dim` as a JSON document.
 *
 * # Safety
 * `out` must point to writable memory.
 */
YendoStatus yendo_presentation_json(uint64_t dim, char **out);

/**
 * Canonical presentation of dimension `dim` as a one-line string such
 * as `K[x1,x2]/<x1^2,x2^2,x1x2>`.
 *
 * # Safety
 * `out` must point to writable memory.
 */
YendoStatus yendo_presentation_text(uint64_t dim, char **out);

/**
 * Runs the verification battery. `*out_pass` reports the verdict; the
 * JSON document in `*out` carries the per-check detail.
 *
 * # Safety
 * `ctx` must be a valid handle; `out` and `out_pass` must point to
 * writable memory.
 */
YendoStatus yendo_verify_json(const YendoContext *ctx, char **out, bool *out_pass);

/**
 * Compares the algebra against the independently built subset model.
 * Fails with `INVALID_ARGUMENT` when `r` exceeds the model bound.
 *
 * # Safety
 * `ctx` must be a valid handle; `out` and `out_pass` must point to
 * writable memory.
 */
YendoStatus yendo_oracle_check_json(const YendoContext *ctx, char **out, bool *out_pass);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by this library,
 * and must not be used afterwards.
 */
void yendo_string_free(char *s);

/**
 * Static name of a status code, e.g. `"YENDO_STATUS_OK"`.
 */
const char *yendo_status_name(YendoStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* YENDO_H */
