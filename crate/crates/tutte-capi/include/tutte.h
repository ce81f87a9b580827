/* C interface of the exact Tutte polynomial engine. Generated by cbindgen; do not edit. */

#ifndef TUTTE_H
#define TUTTE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Default edge limit of `tutte_compute_subset`, matching the library.
 */
#define TUTTE_SUBSET_DEFAULT_EDGE_LIMIT 22

/**
 * Status code returned by every fallible entry point.
 */
typedef enum TutteStatus {
  TUTTE_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  TUTTE_STATUS_NULL_ARGUMENT = 1,
  /**
   * Unparsable text, invalid graph, or an unsupported family/index.
   */
  TUTTE_STATUS_INVALID_INPUT = 2,
  /**
   * The request is valid but too large for the chosen method.
   */
  TUTTE_STATUS_INFEASIBLE = 3,
  /**
   * An internal panic was caught at the boundary.
   */
  TUTTE_STATUS_PANIC = 4,
} TutteStatus;

/**
 * Opaque multigraph handle.
 */
typedef struct TutteGraph TutteGraph;

/**
 * Opaque polynomial handle.
 */
typedef struct TuttePoly TuttePoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph from its text form: a `vertices N` header line, then one
 * `u v` line per edge. `#` starts a comment line.
 */
enum TutteStatus tutte_graph_from_text(const char *text, struct TutteGraph **out);

/**
 * Builds a graph from an endpoint array laid out as `u0, v0, u1, v1, ...`
 * (`2 * edge_count` entries). `endpoints` may be NULL when `edge_count` is 0.
 */
enum TutteStatus tutte_graph_from_edges(uint32_t vertex_count,
                                        const uint32_t *endpoints,
                                        size_t edge_count,
                                        struct TutteGraph **out);

/**
 * Vertex count, or 0 for a NULL handle.
 */
uint32_t tutte_graph_vertex_count(const struct TutteGraph *g);

/**
 * Edge count, or 0 for a NULL handle.
 */
size_t tutte_graph_edge_count(const struct TutteGraph *g);

/**
 * Releases a graph handle. NULL is ignored.
 */
void tutte_graph_free(struct TutteGraph *g);

/**
 * Tutte polynomial by deletion-contraction with block factorization and
 * memoization. The graph must be connected.
 */
enum TutteStatus tutte_compute_delcon(const struct TutteGraph *g, struct TuttePoly **out);

/**
 * Tutte polynomial by rank-nullity subset expansion; rejected with
 * `Infeasible` when the graph has more than `edge_limit` edges.
 */
enum TutteStatus tutte_compute_subset(const struct TutteGraph *g,
                                      size_t edge_limit,
                                      struct TuttePoly **out);

/**
 * Spanning-tree count by the matrix-tree theorem, written as a decimal
 * string.
 */
enum TutteStatus tutte_spanning_trees(const struct TutteGraph *g, char **out);

/**
 * Closed-form Tutte polynomial of a chain family member. `family` is
 * "linear", "pyrene", or "triphenylene"; `n >= 1`.
 */
enum TutteStatus tutte_chain_polynomial(const char *family, size_t n, struct TuttePoly **out);

/**
 * Spanning-tree count of a chain family member by the integer recurrence,
 * written as a decimal string.
 */
enum TutteStatus tutte_chain_spanning_trees(const char *family, size_t n, char **out);

/**
 * Parses a polynomial from text such as `x^2 + 2*xy - 3`.
 */
enum TutteStatus tutte_poly_parse(const char *text, struct TuttePoly **out);

/**
 * Canonical one-line text form.
 */
enum TutteStatus tutte_poly_to_text(const struct TuttePoly *p, char **out);

/**
 * JSON form `[[x_exp, y_exp, "coefficient"], ...]` in canonical term order.
 */
enum TutteStatus tutte_poly_to_json(const struct TuttePoly *p, char **out);

/**
 * Exact evaluation at integer (x, y), written as a decimal string.
 */
enum TutteStatus tutte_poly_eval(const struct TuttePoly *p, int64_t x, int64_t y, char **out);

/**
 * Exact equality. NULL handles compare equal only to NULL.
 */
bool tutte_poly_equal(const struct TuttePoly *a, const struct TuttePoly *b);

/**
 * Releases a polynomial handle. NULL is ignored.
 */
void tutte_poly_free(struct TuttePoly *p);

/**
 * Releases a string produced by this library. NULL is ignored.
 */
void tutte_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TUTTE_H */
