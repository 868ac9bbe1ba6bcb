#ifndef ROOTPOLY_H
#define ROOTPOLY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum RpStatus {
  RP_STATUS_OK = 0,
  RP_STATUS_NULL_POINTER = 1,
  RP_STATUS_INVALID_ARGUMENT = 2,
  RP_STATUS_UNSUPPORTED = 3,
  RP_STATUS_OUT_OF_RANGE = 4,
  RP_STATUS_BUFFER_TOO_SMALL = 5,
  RP_STATUS_INTERNAL = 6,
  RP_STATUS_PANIC = 7,
} RpStatus;

/**
 * Opaque root system handle.
 */
typedef struct RpRootSystem RpRootSystem;

/**
 * Opaque triangulation handle.
 */
typedef struct RpTriangulation RpTriangulation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *rp_last_error(void);

/**
 * Build a root system. `family` is one of 'A', 'B', 'C', 'D'.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum RpStatus rp_root_system_new(char family, size_t rank, struct RpRootSystem **out);

/**
 * # Safety
 * `rs` must be null or a handle from [`rp_root_system_new`] not yet freed.
 */
void rp_root_system_free(struct RpRootSystem *rs);

/**
 * # Safety
 * `rs` must be a live handle and `out` writable.
 */
enum RpStatus rp_rank(const struct RpRootSystem *rs, size_t *out);

/**
 * # Safety
 * `rs` must be a live handle and `out` writable.
 */
enum RpStatus rp_positive_root_count(const struct RpRootSystem *rs, size_t *out);

/**
 * Simple-root coordinates of positive root `index` (0-based, by height).
 *
 * # Safety
 * `coords` must point to `len` writable integers.
 */
enum RpStatus rp_positive_root(const struct RpRootSystem *rs,
                               size_t index,
                               int64_t *coords,
                               size_t len);

/**
 * Number of abelian ideals of the Borel subalgebra.
 *
 * # Safety
 * `rs` must be a live handle and `out` writable.
 */
enum RpStatus rp_abelian_ideal_count(const struct RpRootSystem *rs, size_t *out);

/**
 * Triangulation of the root polytope, or of its positive part. Types A and C.
 *
 * # Safety
 * `rs` must be a live handle and `out` writable.
 */
enum RpStatus rp_triangulation_new(const struct RpRootSystem *rs,
                                   bool positive,
                                   struct RpTriangulation **out);

/**
 * # Safety
 * `t` must be a live handle and `out` writable.
 */
enum RpStatus rp_triangulation_len(const struct RpTriangulation *t, size_t *out);

/**
 * Vertices of simplex `index` as a row-major `rank × rank` matrix, one root per row.
 * The origin is the implicit extra vertex.
 *
 * # Safety
 * `coords` must point to `len` writable integers.
 */
enum RpStatus rp_triangulation_simplex(const struct RpTriangulation *t,
                                       size_t index,
                                       int64_t *coords,
                                       size_t len);

/**
 * # Safety
 * `t` must be null or a handle from [`rp_triangulation_new`] not yet freed.
 */
void rp_triangulation_free(struct RpTriangulation *t);

/**
 * The `report` command's JSON as a NUL-terminated string; release with [`rp_string_free`].
 *
 * # Safety
 * `rs` must be a live handle and `out` writable.
 */
enum RpStatus rp_report_json(const struct RpRootSystem *rs, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void rp_string_free(char *s);

/**
 * Coefficients of the characteristic polynomial of the codimension-2 arrangement,
 * constant term first. `rank + 1` entries are written.
 *
 * # Safety
 * `coeffs` must point to `len` writable integers.
 */
enum RpStatus rp_characteristic_polynomial(const struct RpRootSystem *rs,
                                           int64_t *coeffs,
                                           size_t len,
                                           uint64_t *regions);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ROOTPOLY_H */
