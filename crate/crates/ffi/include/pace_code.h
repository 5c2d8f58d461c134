/* C interface to the pace-code library. */

#pragma once

/* Generated by cbindgen from the pace-code-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of an FFI call.
typedef enum PaceStatus {
  // The call succeeded.
  PACE_STATUS_OK = 0,
  // A required pointer argument was null.
  PACE_STATUS_NULL_POINTER = 1,
  // An argument was outside its documented domain.
  PACE_STATUS_INVALID_ARGUMENT = 2,
  // The computation itself failed; see `pace_last_error`.
  PACE_STATUS_COMPUTE_ERROR = 3,
} PaceStatus;

// A generator matrix over GF(3). Opaque; query it through the
// `pace_matrix_*` accessors.
typedef struct PaceMatrix PaceMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null if the
// last call succeeded. Valid until the next FFI call on this thread.
const char *pace_last_error(void);

// Crate version as a static NUL-terminated string; do not free.
const char *pace_version(void);

// Writes the 6×12 ternary Golay generator (I|P) to `out`.
// # Safety
//
// `out`, if non-null, must be valid for a pointer write.
enum PaceStatus pace_golay_generator(struct PaceMatrix **out);

// Writes the 10×66 generator built from the block-vector orbit in the
// 10-dimensional GF(3) module to `out`.
// # Safety
//
// `out`, if non-null, must be valid for a pointer write.
enum PaceStatus pace_module_form_generator(struct PaceMatrix **out);

// Writes the incidence-construction generator to `out`: columns are the
// blocks disjoint from A, rows the points outside A ∪ B. A and B are
// disjoint point lists (labels 1..=12); empty lists are allowed and may
// pass a null pointer with length 0.
// # Safety
//
// `a_points`/`b_points` must point to `a_len`/`b_len` readable
// bytes (or be null when the length is 0), and `out`, if non-null, must
// be valid for a pointer write.
enum PaceStatus pace_design_form_generator(const uint8_t *a_points,
                                           size_t a_len,
                                           const uint8_t *b_points,
                                           size_t b_len,
                                           struct PaceMatrix **out);

// Parses the plain-text matrix format ("rows cols" header, then one
// space-separated row per line).
// # Safety
//
// `text`, if non-null, must point to a NUL-terminated string, and
// `out`, if non-null, must be valid for a pointer write.
enum PaceStatus pace_matrix_parse_text(const char *text, struct PaceMatrix **out);

// Number of rows, or 0 if `matrix` is null.
// # Safety
//
// `matrix` must be null or a live pointer from this library.
size_t pace_matrix_rows(const struct PaceMatrix *matrix);

// Number of columns, or 0 if `matrix` is null.
// # Safety
//
// `matrix` must be null or a live pointer from this library.
size_t pace_matrix_cols(const struct PaceMatrix *matrix);

// Writes the entry at (`row`, `col`) — a value in {0,1,2} — to `out`.
// # Safety
//
// `matrix` must be null or a live pointer from this library, and
// `out`, if non-null, must be valid for a write.
enum PaceStatus pace_matrix_entry(const struct PaceMatrix *matrix,
                                  size_t row,
                                  size_t col,
                                  uint8_t *out);

// Writes the GF(3) rank of the matrix to `out`.
// # Safety
//
// `matrix` must be null or a live pointer from this library, and
// `out`, if non-null, must be valid for a write.
enum PaceStatus pace_matrix_rank(const struct PaceMatrix *matrix, size_t *out);

// Writes the exact minimum distance of the row-space code to `out`,
// computed by full enumeration (dimension capped at 20).
// # Safety
//
// `matrix` must be null or a live pointer from this library, and
// `out`, if non-null, must be valid for a write.
enum PaceStatus pace_matrix_min_distance(const struct PaceMatrix *matrix, size_t *out);

// Writes the full weight distribution of the row-space code to `out`
// as a JSON object mapping weight to count.
// # Safety
//
// `matrix` must be null or a live pointer from this library, and
// `out`, if non-null, must be valid for a pointer write.
enum PaceStatus pace_matrix_weight_distribution_json(const struct PaceMatrix *matrix, char **out);

// Writes the plain-text rendering of the matrix to `out`.
// # Safety
//
// `matrix` must be null or a live pointer from this library, and
// `out`, if non-null, must be valid for a pointer write.
enum PaceStatus pace_matrix_to_text(const struct PaceMatrix *matrix, char **out);

// Releases a matrix returned by this library. Null is a no-op.
// # Safety
//
// `matrix` must be null or an owned pointer returned by this
// library that has not already been freed.
void pace_matrix_free(struct PaceMatrix *matrix);

// Writes the 132 blocks of S(5,6,12), sorted, as a JSON array of
// six-element point arrays.
// # Safety
//
// `out`, if non-null, must be valid for a pointer write.
enum PaceStatus pace_blocks_json(char **out);

// Runs a verification suite. `scope` is one of "all", "group",
// "lemmas", "cases", or "theorem". Writes a JSON object with
// `schema_version`, `reports`, and `all_pass` to `out_json` and the
// overall outcome to `out_all_pass`; both output pointers may
// independently be null if that result is not wanted.
// # Safety
//
// `scope`, if non-null, must point to a NUL-terminated string;
// `out_json` and `out_all_pass`, where non-null, must be valid for
// writes.
enum PaceStatus pace_verify(const char *scope, char **out_json, bool *out_all_pass);

// Releases a string returned by this library. Null is a no-op.
// # Safety
//
// `s` must be null or an owned string returned by this library
// that has not already been freed.
void pace_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
