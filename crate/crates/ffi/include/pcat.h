#ifndef PCAT_H
#define PCAT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum pcat_status {
  PCAT_STATUS_OK = 0,
  /**
   * The input is well formed but the checked property does not hold.
   */
  PCAT_STATUS_CHECK_FAILED = 1,
  PCAT_STATUS_NULL_ARGUMENT = 2,
  PCAT_STATUS_INVALID_UTF8 = 3,
  PCAT_STATUS_PARSE = 4,
  /**
   * Group, element, subgroup, G-set, modulus or normalization error.
   */
  PCAT_STATUS_INVALID_INPUT = 5,
  PCAT_STATUS_PRECONDITION = 6,
  PCAT_STATUS_BOUND_EXCEEDED = 7,
  PCAT_STATUS_PANIC = 8,
} pcat_status;

/**
 * Pointed fusion category with a validated associator.
 */
typedef struct pcat_category pcat_category;

/**
 * Quadratic form on a finite abelian group.
 */
typedef struct pcat_form pcat_form;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static string.
 */
const char *pcat_version(void);

/**
 * Message for the last error on this thread, or NULL. Owned by the
 * library.
 */
const char *pcat_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, freed once.
 */
void pcat_string_free(char *s);

/**
 * Runs one command-line invocation. `argv_json` is a JSON array of the
 * arguments after the program name, e.g. `["witt", "reduce", "{...}"]`.
 * The result document is stored in `*out_json` (free with
 * `pcat_string_free`); the status is `Ok`, `CheckFailed`, or an error.
 *
 * # Safety
 * `argv_json` must be a NUL-terminated string; `out_json` must be a valid
 * pointer.
 */
enum pcat_status pcat_run(const char *argv_json, char **out_json);

/**
 * Pentagon check of an associator document (a category or a bare
 * 3-cochain). `Ok` when it holds, `CheckFailed` otherwise; when
 * `out_witness` is not NULL it receives the check as JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out_witness` NULL or valid.
 */
enum pcat_status pcat_pentagon_check(const char *json, char **out_witness);

/**
 * Hexagon check of a braided document `{"category", "braiding"}`.
 *
 * # Safety
 * As for `pcat_pentagon_check`.
 */
enum pcat_status pcat_hexagon_check(const char *json, char **out_witness);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` a valid pointer.
 */
enum pcat_status pcat_category_from_json(const char *json, struct pcat_category **out);

/**
 * # Safety
 * `c` must be NULL or a handle from `pcat_category_from_json`, freed once.
 */
void pcat_category_free(struct pcat_category *c);

/**
 * Number of simple objects, or 0 for a NULL handle.
 *
 * # Safety
 * `c` must be NULL or a live handle.
 */
size_t pcat_category_rank(const struct pcat_category *c);

/**
 * # Safety
 * `c` must be NULL or a live handle.
 */
uint32_t pcat_category_modulus(const struct pcat_category *c);

/**
 * # Safety
 * `c` must be a live handle; `out` a valid pointer.
 */
enum pcat_status pcat_category_to_json(const struct pcat_category *c, char **out);

/**
 * Parses a form `{"group", "modulus", "values"}` and checks both
 * quadratic axioms.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` a valid pointer.
 */
enum pcat_status pcat_form_from_json(const char *json, struct pcat_form **out);

/**
 * # Safety
 * `q` must be NULL or a handle from `pcat_form_from_json`, freed once.
 */
void pcat_form_free(struct pcat_form *q);

/**
 * # Safety
 * `q` must be a live handle; `out` a valid pointer.
 */
enum pcat_status pcat_form_to_json(const struct pcat_form *q, char **out);

/**
 * # Safety
 * `q` must be a live handle; `out` a valid pointer.
 */
enum pcat_status pcat_form_is_nondegenerate(const struct pcat_form *q, bool *out);

/**
 * Anisotropic kernel of a nondegenerate form, with the reduction trace,
 * as JSON. `bound` caps the group orders searched.
 *
 * # Safety
 * `q` must be a live handle; `out_json` a valid pointer.
 */
enum pcat_status pcat_form_anisotropic_kernel(const struct pcat_form *q,
                                              size_t bound,
                                              char **out_json);

/**
 * Whether two nondegenerate forms have the same Witt class.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` a valid pointer.
 */
enum pcat_status pcat_witt_equal(const struct pcat_form *a,
                                 const struct pcat_form *b,
                                 size_t bound,
                                 bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PCAT_H */
