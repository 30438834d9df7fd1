#ifndef DOMDIST_H
#define DOMDIST_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum DdStatus {
  DD_STATUS_OK = 0,
  DD_STATUS_NULL_POINTER = 1,
  DD_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed graph6 or edge-list text.
   */
  DD_STATUS_PARSE = 3,
  DD_STATUS_DISCONNECTED = 4,
  /**
   * Fewer than 2 or more than 62 vertices.
   */
  DD_STATUS_ORDER_OUT_OF_RANGE = 5,
  DD_STATUS_VERTEX_OUT_OF_RANGE = 6,
  /**
   * The output buffer was too short; required sizes are still written.
   */
  DD_STATUS_BUFFER_TOO_SMALL = 7,
  /**
   * The vertex set is not a minimum dominating set.
   */
  DD_STATUS_NOT_A_GAMMA_SET = 8,
  /**
   * A lift failed its own verification.
   */
  DD_STATUS_VERIFICATION_FAILED = 9,
  DD_STATUS_INTERNAL = 10,
} DdStatus;

/**
 * Opaque graph handle.
 */
typedef struct DdGraph DdGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses one graph6 string (short form, at most 62 vertices).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a writable pointer.
 */
enum DdStatus dd_graph_from_graph6(const char *text, struct DdGraph **out);

/**
 * Parses an edge list: an `n <count>` line, then one `u v` pair per line.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a writable pointer.
 */
enum DdStatus dd_graph_from_edgelist(const char *text, struct DdGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from a `dd_graph_from_*` call and not be freed twice.
 */
void dd_graph_free(struct DdGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum DdStatus dd_graph_order(const struct DdGraph *g, size_t *out);

/**
 * Number of edges.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum DdStatus dd_graph_size(const struct DdGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum DdStatus dd_graph_diameter(const struct DdGraph *g, uint32_t *out);

/**
 * Sum of distances over unordered vertex pairs.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum DdStatus dd_graph_wiener(const struct DdGraph *g, uint64_t *out);

/**
 * Distance between `u` and `v`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum DdStatus dd_graph_distance(const struct DdGraph *g, size_t u, size_t v, uint32_t *out);

/**
 * Domination number. The solver's minimum dominating set, sorted, is
 * copied to `witness` when `witness_len >= gamma`; otherwise
 * `BufferTooSmall` is returned with `gamma` still written. `witness` may
 * be null when `witness_len` is 0.
 *
 * # Safety
 * `g` must be a live handle, `gamma` writable, and `witness` valid for
 * `witness_len` writes.
 */
enum DdStatus dd_graph_gamma(const struct DdGraph *g,
                             size_t *gamma,
                             size_t *witness,
                             size_t witness_len);

/**
 * # Safety
 * `g` must be a live handle, `set` valid for `len` reads, `out` writable.
 */
enum DdStatus dd_graph_is_dominating(const struct DdGraph *g,
                                     const size_t *set,
                                     size_t len,
                                     bool *out);

/**
 * Full bound report as a JSON object (r-subset sizes 3, 4 and 5).
 * Release with `dd_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum DdStatus dd_graph_report_json(const struct DdGraph *g, char **out);

/**
 * Spanning tree built around the minimum dominating set `set`, verified,
 * as a JSON object. Release with `dd_string_free`.
 *
 * # Safety
 * `g` must be a live handle, `set` valid for `len` reads, `out` writable.
 */
enum DdStatus dd_graph_lift_json(const struct DdGraph *g,
                                 const size_t *set,
                                 size_t len,
                                 char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void dd_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call into the library on this thread.
 */
const char *dd_last_error_message(void);

/**
 * Static name of a status code.
 */
const char *dd_status_name(enum DdStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DOMDIST_H */
