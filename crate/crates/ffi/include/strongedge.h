#ifndef STRONGEDGE_H
#define STRONGEDGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum {
  SE_STATUS_OK = 0,
  SE_STATUS_NULL_POINTER = 1,
  SE_STATUS_INVALID_ARGUMENT = 2,
  SE_STATUS_PARSE = 3,
  SE_STATUS_NOT_DEGENERATE = 4,
  SE_STATUS_OUT_OF_RANGE = 5,
  SE_STATUS_NO_VALUE = 6,
  SE_STATUS_PANIC = 7,
} SeStatus;

/**
 * Opaque handle holding a coloring and its pipeline report.
 */
typedef struct SeColoring SeColoring;

/**
 * Opaque multigraph handle.
 */
typedef struct SeGraph SeGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or null. The pointer is
 * valid until the next call into the library from this thread.
 */
const char *se_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void se_string_free(char *s);

/**
 * Builds a graph on `n` vertices from `m` endpoint pairs `(us[i], vs[i])`.
 *
 * # Safety
 * `us` and `vs` must point to `m` readable values each (may be null when
 * `m == 0`); `out` must be writable.
 */
SeStatus se_graph_from_edges(size_t n,
                             const uint32_t *us,
                             const uint32_t *vs,
                             size_t m,
                             SeGraph **out);

/**
 * Parses canonical or DIMACS-like edge-list text.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
SeStatus se_graph_parse(const char *text, SeGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library that has not been freed.
 */
void se_graph_free(SeGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t se_graph_vertex_count(const SeGraph *g);

/**
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t se_graph_edge_count(const SeGraph *g);

/**
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t se_graph_max_degree(const SeGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle and `out_k` writable.
 */
SeStatus se_degeneracy(const SeGraph *g, size_t *out_k);

/**
 * `(4k-2)·delta - k(2k-1) + 1`.
 */
int64_t se_bound(size_t k, size_t delta);

/**
 * Runs the full pipeline. A negative `k` means "use the degeneracy".
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
SeStatus se_color(const SeGraph *g, int64_t k, SeColoring **out);

/**
 * # Safety
 * `c` must be null or a handle from this library that has not been freed.
 */
void se_coloring_free(SeColoring *c);

/**
 * # Safety
 * `c` must be null or a live coloring handle.
 */
size_t se_coloring_colors_used(const SeColoring *c);

/**
 * # Safety
 * `c` must be null or a live coloring handle.
 */
size_t se_coloring_edge_count(const SeColoring *c);

/**
 * Whether the coloring passed strong-coloring verification.
 *
 * # Safety
 * `c` must be null or a live coloring handle.
 */
bool se_coloring_valid(const SeColoring *c);

/**
 * The `k` the ordering was built with.
 *
 * # Safety
 * `c` must be null or a live coloring handle.
 */
size_t se_coloring_k(const SeColoring *c);

/**
 * Writes the color bound; `SE_STATUS_NO_VALUE` for edgeless graphs or `k = 0`.
 *
 * # Safety
 * `c` must be a live coloring handle and `out` writable.
 */
SeStatus se_coloring_bound(const SeColoring *c, int64_t *out);

/**
 * # Safety
 * `c` must be a live coloring handle and `out` writable.
 */
SeStatus se_coloring_color(const SeColoring *c, size_t edge, uint32_t *out);

/**
 * Copies up to `len` colors (by edge id) into `buf`; returns the number
 * written through `written`.
 *
 * # Safety
 * `buf` must have room for `len` values; `written` must be writable.
 */
SeStatus se_coloring_copy(const SeColoring *c, uint32_t *buf, size_t len, size_t *written);

/**
 * The coloring report as JSON. Free with [`se_string_free`].
 *
 * # Safety
 * `c` must be a live coloring handle and `out` writable.
 */
SeStatus se_coloring_to_json(const SeColoring *c, char **out);

/**
 * Checks an externally produced coloring (`colors[e]` for each edge `e`).
 *
 * # Safety
 * `colors` must point to `m` readable values; `out_valid` must be writable.
 */
SeStatus se_verify_coloring(const SeGraph *g, const uint32_t *colors, size_t m, bool *out_valid);

/**
 * Exact strong chromatic index within a node budget. When `out_timed_out`
 * is set, `out_chi` holds an upper bound.
 *
 * # Safety
 * `g` must be a live graph handle; both outputs must be writable.
 */
SeStatus se_exact(const SeGraph *g, uint64_t budget, size_t *out_chi, bool *out_timed_out);

/**
 * Builds the ordering for `k` (negative: degeneracy) and audits it; writes
 * whether every check passed on every position.
 *
 * # Safety
 * `g` must be a live graph handle and `out_pass` writable.
 */
SeStatus se_audit(const SeGraph *g, int64_t k, bool *out_pass);

/**
 * Library version as a static NUL-terminated string.
 */
const char *se_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRONGEDGE_H */
