#ifndef HVB_H
#define HVB_H

/* Generated by cbindgen. Do not edit. */

#include <stddef.h>
#include <stdint.h>

typedef enum HvbStatus {
  HVB_STATUS_OK = 0,
  HVB_STATUS_PARSE_ERROR = 1,
  HVB_STATUS_SHAPE_ERROR = 2,
  HVB_STATUS_DOMAIN_ERROR = 3,
  HVB_STATUS_RELATIONS_VIOLATED = 4,
  HVB_STATUS_INTERNAL_ERROR = 5,
  HVB_STATUS_NULL_POINTER = 6,
  HVB_STATUS_INVALID_UTF8 = 7,
  HVB_STATUS_PANIC = 8,
} HvbStatus;

/**
 * Opaque representation handle.
 */
typedef struct HvbRep HvbRep;

/**
 * Opaque space handle.
 */
typedef struct HvbSpace HvbSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until
 * the next call into the library on the same thread.
 */
const char *hvb_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hvb_string_free(char *s);

/**
 * Parses `p:n` or `gr:k,n`.
 *
 * # Safety
 * `text` is a nul-terminated string; `out` is writable.
 */
enum HvbStatus hvb_space_parse(const char *text, struct HvbSpace **out);

/**
 * # Safety
 * `s` comes from [`hvb_space_parse`] and is not used afterwards.
 */
void hvb_space_free(struct HvbSpace *s);

/**
 * Number of fundamental-weight coordinates of the space.
 *
 * # Safety
 * `s` is a live handle.
 */
size_t hvb_space_rank(const struct HvbSpace *s);

/**
 * Bott's algorithm. On success `*singular` is 1 for vanishing cohomology;
 * otherwise `*degree` and `nu[0..len]` hold the nonzero H^degree.
 *
 * # Safety
 * `weight` and `nu` point to `len` integers; the other outputs are
 * writable.
 */
enum HvbStatus hvb_bott(const struct HvbSpace *s,
                        const int64_t *weight,
                        size_t len,
                        int32_t *singular,
                        size_t *degree,
                        int64_t *nu);

/**
 * |det| of the Cartan matrix: the number of quiver components.
 *
 * # Safety
 * `kind` is a nul-terminated type letter; `out` is writable.
 */
enum HvbStatus hvb_components(const char *kind, size_t rank, uint64_t *out);

/**
 * Parses and validates representation JSON.
 *
 * # Safety
 * `json` is a nul-terminated string; `out` is writable.
 */
enum HvbStatus hvb_rep_from_json(const char *json, struct HvbRep **out);

/**
 * # Safety
 * `r` comes from [`hvb_rep_from_json`] and is not used afterwards.
 */
void hvb_rep_free(struct HvbRep *r);

/**
 * Canonical JSON of a representation.
 *
 * # Safety
 * `r` is a live handle; `out` is writable.
 */
enum HvbStatus hvb_rep_to_json(const struct HvbRep *r, char **out);

/**
 * Counts violated relation equations; 0 means the representation is valid.
 *
 * # Safety
 * `r` is a live handle; `violations` is writable.
 */
enum HvbStatus hvb_rep_check(const struct HvbRep *r, size_t *violations);

/**
 * H^*(E) as JSON: `{"rows":[{degree, nu, multiplicity, dim}]}`.
 *
 * # Safety
 * `r` is a live handle; `out` is writable.
 */
enum HvbStatus hvb_cohomology_json(const struct HvbRep *r, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HVB_H */
