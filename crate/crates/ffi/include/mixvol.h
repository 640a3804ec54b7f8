#ifndef MIXVOL_H
#define MIXVOL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; the nonzero values below 6 match the CLI exit codes.
 */
typedef enum MvStatus {
  MV_STATUS_OK = 0,
  MV_STATUS_PARSE = 2,
  MV_STATUS_CONTAINMENT = 3,
  MV_STATUS_CONFIG = 4,
  MV_STATUS_INTERNAL = 5,
  MV_STATUS_NULL_ARGUMENT = 6,
  MV_STATUS_PANIC = 7,
} MvStatus;

/**
 * Opaque handle to an exact polytope in dimension 2 or 3.
 */
typedef struct MvPolytope MvPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *mv_last_error(void);

/**
 * Parses polytope JSON (`{"dim": n, "vertices": [["p/q", ...], ...]}`).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum MvStatus mv_polytope_from_json(const char *json, struct MvPolytope **out);

/**
 * Convex hull of `count` points given as row-major numerator and
 * denominator arrays of length `count * dim`.
 *
 * # Safety
 * `num` and `den` must point to `count * dim` readable values; `out` must be
 * writable.
 */
enum MvStatus mv_polytope_from_points(size_t dim,
                                      size_t count,
                                      const int64_t *num,
                                      const int64_t *den,
                                      struct MvPolytope **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `p` must come from this library and not be used afterwards.
 */
void mv_polytope_free(struct MvPolytope *p);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void mv_string_free(char *s);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum MvStatus mv_polytope_to_json(const struct MvPolytope *p, char **out);

/**
 * # Safety
 * `p` must be a live handle; `dim` and `vertices` must be writable or null.
 */
enum MvStatus mv_polytope_shape(const struct MvPolytope *p, size_t *dim, size_t *vertices);

/**
 * # Safety
 * `p` must be a live handle; `exact` must be writable; `approx` may be null.
 */
enum MvStatus mv_polytope_volume(const struct MvPolytope *p, char **exact, double *approx);

/**
 * Exact `d_G(K, L)`; fails with `MV_STATUS_CONTAINMENT` unless `K, L ⊆ G`.
 *
 * # Safety
 * Handles must be live; `exact` must be writable; `approx` may be null.
 */
enum MvStatus mv_d_g(const struct MvPolytope *g,
                     const struct MvPolytope *k,
                     const struct MvPolytope *l,
                     char **exact,
                     double *approx);

/**
 * Exact `ρ_G(K, L)`.
 *
 * # Safety
 * Handles must be live; `exact` must be writable; `approx` may be null.
 */
enum MvStatus mv_rho_g(const struct MvPolytope *g,
                       const struct MvPolytope *k,
                       const struct MvPolytope *l,
                       char **exact,
                       double *approx);

/**
 * Squared Hausdorff distance, exact, and the distance as a double.
 *
 * # Safety
 * Handles must be live; `exact_sq` must be writable; `approx` may be null.
 */
enum MvStatus mv_hausdorff(const struct MvPolytope *k,
                           const struct MvPolytope *l,
                           char **exact_sq,
                           double *approx);

/**
 * Full report as a JSON object with exact strings and bound flags.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum MvStatus mv_report_json(const struct MvPolytope *g,
                             const struct MvPolytope *k,
                             const struct MvPolytope *l,
                             char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MIXVOL_H */
