#ifndef SKEWDET_H
#define SKEWDET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SkewdetStatus {
  SKEWDET_STATUS_OK = 0,
  SKEWDET_STATUS_NULL_POINTER = 1,
  SKEWDET_STATUS_INVALID_ARGUMENT = 2,
  SKEWDET_STATUS_PARSE = 3,
  SKEWDET_STATUS_SHAPE = 4,
  SKEWDET_STATUS_DECOMPOSITION = 5,
  SKEWDET_STATUS_INTERNAL = 6,
  SKEWDET_STATUS_PANIC = 7,
} SkewdetStatus;

/**
 * How [`skewdet_decompose`] peels a shape.
 */
typedef enum SkewdetStrategy {
  /**
   * Repeatedly remove the outer rim, giving plain strips.
   */
  SKEWDET_STRATEGY_RIM = 0,
  /**
   * Repeatedly remove the thickest outer strip.
   */
  SKEWDET_STRATEGY_THICK_RIM = 1,
} SkewdetStrategy;

/**
 * An ordered decomposition of a skew shape into thickened strips.
 */
typedef struct SkewdetDecomposition SkewdetDecomposition;

/**
 * A skew shape `lambda / mu`.
 */
typedef struct SkewdetShape SkewdetShape;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or an empty string. Never null.
 */
const char *skewdet_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *skewdet_version(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void skewdet_string_free(char *s);

/**
 * Build `lambda / mu` from weakly decreasing positive parts.
 *
 * # Safety
 * `lambda` and `mu` must point to `lambda_len` and `mu_len` readable values
 * (either may be null when its length is 0); `out` must be writable.
 */
enum SkewdetStatus skewdet_shape_new(const uint32_t *lambda,
                                     size_t lambda_len,
                                     const uint32_t *mu,
                                     size_t mu_len,
                                     struct SkewdetShape **out);

/**
 * Parse a shape from `{"lambda":[..],"mu":[..]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum SkewdetStatus skewdet_shape_from_json(const char *json, struct SkewdetShape **out);

/**
 * # Safety
 * `shape` must come from this library and not have been freed. Null is ignored.
 */
void skewdet_shape_free(struct SkewdetShape *shape);

/**
 * Number of boxes.
 *
 * # Safety
 * `shape` must be a live handle; `out` must be writable.
 */
enum SkewdetStatus skewdet_shape_size(const struct SkewdetShape *shape, size_t *out);

/**
 * Number of standard tableaux, as a decimal string.
 *
 * # Safety
 * `shape` must be a live handle; `out` must be writable.
 */
enum SkewdetStatus skewdet_count_syt(const struct SkewdetShape *shape, char **out);

/**
 * Schur polynomial in `nvars` variables as JSON:
 * `[{"exps":[..],"coef":"decimal"},..]`.
 *
 * # Safety
 * `shape` must be a live handle; `out` must be writable.
 */
enum SkewdetStatus skewdet_schur_json(const struct SkewdetShape *shape, size_t nvars, char **out);

/**
 * Peel a shape into an outside nested decomposition. `strategy` is a
 * [`SkewdetStrategy`] value.
 *
 * # Safety
 * `shape` must be a live handle; `out` must be writable.
 */
enum SkewdetStatus skewdet_decompose(const struct SkewdetShape *shape,
                                     uint32_t strategy,
                                     struct SkewdetDecomposition **out);

/**
 * Parse a decomposition from the JSON the CLI reads and writes.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum SkewdetStatus skewdet_decomposition_from_json(const char *json,
                                                   struct SkewdetDecomposition **out);

/**
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum SkewdetStatus skewdet_decomposition_to_json(const struct SkewdetDecomposition *d, char **out);

/**
 * # Safety
 * `d` must come from this library and not have been freed. Null is ignored.
 */
void skewdet_decomposition_free(struct SkewdetDecomposition *d);

/**
 * Number of strips and number of shared cells.
 *
 * # Safety
 * `d` must be a live handle; `strips` and `shared` must be writable.
 */
enum SkewdetStatus skewdet_decomposition_counts(const struct SkewdetDecomposition *d,
                                                size_t *strips,
                                                size_t *shared);

/**
 * Check the decomposition. `valid` is false when a rule is broken, and the
 * last error message then names the rule; `nested` is true only for valid
 * nested decompositions.
 *
 * # Safety
 * `d` must be a live handle; `valid` and `nested` must be writable.
 */
enum SkewdetStatus skewdet_decomposition_validate(const struct SkewdetDecomposition *d,
                                                  bool *valid,
                                                  bool *nested);

/**
 * Compare both sides of the Schur determinant identity in `nvars` variables.
 *
 * # Safety
 * `d` must be a live handle; `equal` must be writable.
 */
enum SkewdetStatus skewdet_verify_identity(const struct SkewdetDecomposition *d,
                                           size_t nvars,
                                           bool *equal);

/**
 * Standard tableau count from the determinant over the strips of a nested
 * decomposition, as a decimal string.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum SkewdetStatus skewdet_decomposition_count(const struct SkewdetDecomposition *d, char **out);

/**
 * Standard tableau count of the m-strip diagram with `n` body columns and
 * the given head and tail partitions, as a decimal string.
 *
 * # Safety
 * `head` and `tail` must point to `head_len` and `tail_len` readable values
 * (either may be null when its length is 0); `out` must be writable.
 */
enum SkewdetStatus skewdet_mstrip_count(uint32_t m,
                                        uint32_t n,
                                        const uint32_t *head,
                                        size_t head_len,
                                        const uint32_t *tail,
                                        size_t tail_len,
                                        char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SKEWDET_H */
