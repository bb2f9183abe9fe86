#ifndef PAIRDOM_H
#define PAIRDOM_H

/* Generated by cbindgen from pairdom-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status of a C-API call. Values match the CLI exit-code contract where one
 * exists.
 */
typedef enum {
  PAIRDOM_STATUS_OK = 0,
  /**
   * Malformed input text.
   */
  PAIRDOM_STATUS_PARSE_ERROR = 2,
  /**
   * Instance outside the class the operation accepts.
   */
  PAIRDOM_STATUS_CLASS_ERROR = 3,
  /**
   * Oracle or size budget exceeded.
   */
  PAIRDOM_STATUS_BUDGET_ERROR = 4,
  /**
   * A solution failed verification.
   */
  PAIRDOM_STATUS_VERIFY_FAILED = 5,
  /**
   * Invalid argument (null pointer, bad id, non-UTF-8 text).
   */
  PAIRDOM_STATUS_ARGUMENT_ERROR = 6,
  /**
   * Internal invariant failure; indicates a bug.
   */
  PAIRDOM_STATUS_INTERNAL_ERROR = 7,
} PairdomStatus;

/**
 * Opaque instance handle: a graph, possibly carrying the interval ordering
 * it was built from.
 */
typedef struct PairdomGraph PairdomGraph;

/**
 * Opaque solution handle.
 */
typedef struct PairdomSolution PairdomSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message for this thread; valid until the next failing call.
 * Never null.
 */
const char *pairdom_last_error(void);

/**
 * Parses the `n m` edge-list format into a new graph handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
PairdomStatus pairdom_graph_parse(const char *text, PairdomGraph **out);

/**
 * Parses the interval format, builds the intersection graph, and keeps the
 * left-endpoint ordering so the handle can be solved as an interval graph.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
PairdomStatus pairdom_intervals_parse(const char *text, PairdomGraph **out);

/**
 * # Safety
 * `g` must be a live handle from a `pairdom_*_parse` call.
 */
uint32_t pairdom_graph_vertex_count(const PairdomGraph *g);

/**
 * # Safety
 * `g` must be a live handle from a `pairdom_*_parse` call.
 */
uint64_t pairdom_graph_edge_count(const PairdomGraph *g);

/**
 * Minimum paired-dominating set of a tree.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
PairdomStatus pairdom_solve_tree(const PairdomGraph *g, PairdomSolution **out);

/**
 * Minimum paired-dominating set of a connected block graph.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
PairdomStatus pairdom_solve_block(const PairdomGraph *g, PairdomSolution **out);

/**
 * Minimum paired-dominating set of a connected interval graph; the handle
 * must come from `pairdom_intervals_parse`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
PairdomStatus pairdom_solve_interval(const PairdomGraph *g, PairdomSolution **out);

/**
 * Tries tree, then block graph, then interval (when the handle has an
 * interval representation).
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
PairdomStatus pairdom_solve_auto(const PairdomGraph *g, PairdomSolution **out);

/**
 * Exact minimum by brute force. Pass 0 for either budget field to use the
 * default (16 vertices, 50 million subsets).
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
PairdomStatus pairdom_oracle_gamma_p(const PairdomGraph *g,
                                     uint32_t max_vertices,
                                     uint64_t max_subsets,
                                     PairdomSolution **out);

/**
 * Checks a solution against a graph: `Ok` when it is a paired-dominating
 * set, `VerifyFailed` (with the reason in `pairdom_last_error`) otherwise.
 *
 * # Safety
 * Both handles must be live.
 */
PairdomStatus pairdom_verify(const PairdomGraph *g, const PairdomSolution *sol);

/**
 * Number of vertices in the solution.
 *
 * # Safety
 * `sol` must be a live handle.
 */
size_t pairdom_solution_size(const PairdomSolution *sol);

/**
 * Copies up to `cap` vertex ids (ascending) into `buf`; returns the total
 * count, so calling with `cap == 0` sizes the buffer.
 *
 * # Safety
 * `sol` must be live; `buf` must point to at least `cap` writable u32 slots.
 */
size_t pairdom_solution_vertices(const PairdomSolution *sol, uint32_t *buf, size_t cap);

/**
 * Number of pairs in the solution (half the vertex count).
 *
 * # Safety
 * `sol` must be a live handle.
 */
size_t pairdom_solution_pair_count(const PairdomSolution *sol);

/**
 * Copies up to `cap` u32 values of flattened pairs `(a0,b0,a1,b1,...)` into
 * `buf`; returns the total value count (twice the pair count).
 *
 * # Safety
 * `sol` must be live; `buf` must point to at least `cap` writable u32 slots.
 */
size_t pairdom_solution_pairs(const PairdomSolution *sol, uint32_t *buf, size_t cap);

/**
 * Serializes the solution as JSON. Free the returned string with
 * `pairdom_string_free`.
 *
 * # Safety
 * `sol` must be a live handle.
 */
char *pairdom_solution_to_json(const PairdomSolution *sol);

/**
 * # Safety
 * `s` must come from `pairdom_solution_to_json` and not be freed twice.
 */
void pairdom_string_free(char *s);

/**
 * # Safety
 * `g` must come from a `pairdom_*_parse` call and not be freed twice.
 */
void pairdom_graph_free(PairdomGraph *g);

/**
 * # Safety
 * `sol` must come from a solve call and not be freed twice.
 */
void pairdom_solution_free(PairdomSolution *sol);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PAIRDOM_H */
