#ifndef NKDETECT_H
#define NKDETECT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum NkStatus {
  NK_STATUS_OK = 0,
  NK_STATUS_NULL_ARGUMENT = 1,
  NK_STATUS_INVALID_UTF8 = 2,
  NK_STATUS_PARSE = 3,
  NK_STATUS_CONFIG = 4,
  NK_STATUS_GUARD_EXHAUSTED = 5,
  NK_STATUS_INTERNAL = 6,
  NK_STATUS_OUT_OF_RANGE = 7,
  NK_STATUS_PANIC = 8,
} NkStatus;

typedef enum NkMethod {
  NK_METHOD_SUPER_POLAR = 0,
  NK_METHOD_ITERATED_POLAR = 1,
  NK_METHOD_BOTH = 2,
} NkMethod;

/**
 * Detection settings; starts from the command-line defaults.
 */
typedef struct NkConfig NkConfig;

/**
 * Parsed polynomial over the rationals.
 */
typedef struct NkPolynomial NkPolynomial;

/**
 * Detection result of one or two methods.
 */
typedef struct NkReport NkReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *nk_last_error(void);

/**
 * Parses `text` into `*out`. `vars` is a comma-separated variable list or
 * null to take the names in order of appearance.
 *
 * # Safety
 * `text` and `vars` are null or NUL-terminated; `out` is null or writable.
 */
enum NkStatus nk_polynomial_parse(const char *text, const char *vars, struct NkPolynomial **out);

/**
 * Releases a polynomial handle; null is ignored.
 *
 * # Safety
 * `p` is null or a handle from [`nk_polynomial_parse`] not freed before.
 */
void nk_polynomial_free(struct NkPolynomial *p);

/**
 * New configuration with the defaults: super-polar, seed 0, 3 runs.
 */
struct NkConfig *nk_config_new(void);

/**
 * Releases a config handle; null is ignored.
 *
 * # Safety
 * `c` is null or a handle from [`nk_config_new`] not freed before.
 */
void nk_config_free(struct NkConfig *c);

/**
 * # Safety
 * `c` is null or a live config handle.
 */
enum NkStatus nk_config_set_seed(struct NkConfig *c, uint64_t seed);

/**
 * # Safety
 * `c` is null or a live config handle.
 */
enum NkStatus nk_config_set_runs(struct NkConfig *c, size_t runs);

/**
 * # Safety
 * `c` is null or a live config handle.
 */
enum NkStatus nk_config_set_coeff_bound(struct NkConfig *c, uint32_t bound);

/**
 * # Safety
 * `c` is null or a live config handle.
 */
enum NkStatus nk_config_set_force_general(struct NkConfig *c, bool on);

/**
 * # Safety
 * `c` is null or a live config handle.
 */
enum NkStatus nk_config_set_method(struct NkConfig *c, enum NkMethod method);

/**
 * Runs detection on `f` and stores the result in `*out`.
 *
 * # Safety
 * `f` and `config` are null or live handles; `out` is null or writable.
 */
enum NkStatus nk_detect(const struct NkPolynomial *f,
                        const struct NkConfig *config,
                        struct NkReport **out);

/**
 * JSON document (schema 1) of the report, or null for a null handle.
 *
 * # Safety
 * `r` is null or a live report handle.
 */
const char *nk_report_json(const struct NkReport *r);

/**
 * Human-readable report, or null for a null handle.
 *
 * # Safety
 * `r` is null or a live report handle.
 */
const char *nk_report_text(const struct NkReport *r);

/**
 * Number of method reports (2 for `NK_METHOD_BOTH`), 0 for null.
 *
 * # Safety
 * `r` is null or a live report handle.
 */
size_t nk_report_count(const struct NkReport *r);

/**
 * Polynomial in `z` whose roots are the detected values of report `index`.
 *
 * # Safety
 * `r` is null or a live report handle; `out` is null or writable.
 */
enum NkStatus nk_report_s_final(const struct NkReport *r, size_t index, const char **out);

/**
 * Number of detected values (degree of the polynomial in `z`).
 *
 * # Safety
 * `r` is null or a live report handle; `out` is null or writable.
 */
enum NkStatus nk_report_s_final_degree(const struct NkReport *r, size_t index, size_t *out);

/**
 * Releases a report handle; null is ignored.
 *
 * # Safety
 * `r` is null or a handle from [`nk_detect`] not freed before.
 */
void nk_report_free(struct NkReport *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NKDETECT_H */
