/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef PVCLAB_H
#define PVCLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result of every fallible call.
 */
typedef enum PvcStatus {
  PVC_STATUS_OK = 0,
  PVC_STATUS_NULL_POINTER = 1,
  PVC_STATUS_INVALID_ARGUMENT = 2,
  PVC_STATUS_PARSE = 3,
  PVC_STATUS_DISCONNECTED = 4,
  PVC_STATUS_CAP_EXCEEDED = 5,
  PVC_STATUS_BUDGET_EXCEEDED = 6,
  PVC_STATUS_NO_FORMULA = 7,
  PVC_STATUS_INTERNAL = 8,
} PvcStatus;

typedef enum PvcProductKind {
  PVC_PRODUCT_KIND_JOIN = 0,
  PVC_PRODUCT_KIND_CARTESIAN = 1,
  PVC_PRODUCT_KIND_LEXICOGRAPHIC = 2,
  PVC_PRODUCT_KIND_STRONG = 3,
  PVC_PRODUCT_KIND_DIRECT = 4,
} PvcProductKind;

/*
 Opaque vertex coloring with colors starting at 1.
 */
typedef struct PvcColoring PvcColoring;

/*
 Opaque simple graph.
 */
typedef struct PvcGraph PvcGraph;

/*
 Closed-form value of a parameter: `lo == hi` for an exact value.
 */
typedef struct PvcPrediction {
  uint32_t lo;
  uint32_t hi;
  /*
   The constructed coloring passed the exact verifiers.
   */
  bool verified;
} PvcPrediction;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or null. The pointer stays
 valid until the next failing call on the same thread.
 */
const char *pvc_last_error_message(void);

/*
 Parses a NUL-terminated graph6 string.

 # Safety
 `text` is a NUL-terminated string; `out` is writable.
 */
enum PvcStatus pvc_graph_from_graph6(const char *text, struct PvcGraph **out);

/*
 Builds a graph on `order` vertices from `edge_count` pairs stored flat in
 `endpoints` (`2 * edge_count` entries).

 # Safety
 `endpoints` is readable for `2 * edge_count` entries (or null when
 `edge_count` is 0); `out` is writable.
 */
enum PvcStatus pvc_graph_from_edges(size_t order,
                                    const size_t *endpoints,
                                    size_t edge_count,
                                    struct PvcGraph **out);

/*
 # Safety
 `graph` is null or a handle from this library that has not been freed.
 */
void pvc_graph_free(struct PvcGraph *graph);

/*
 Number of vertices, 0 for a null handle.

 # Safety
 `graph` is null or a live handle.
 */
size_t pvc_graph_order(const struct PvcGraph *graph);

/*
 Number of edges, 0 for a null handle.

 # Safety
 `graph` is null or a live handle.
 */
size_t pvc_graph_edge_count(const struct PvcGraph *graph);

/*
 graph6 encoding; free the string with [`pvc_string_free`].

 # Safety
 `graph` is a live handle; `out` is writable.
 */
enum PvcStatus pvc_graph_to_graph6(const struct PvcGraph *graph, char **out);

/*
 # Safety
 `text` is null or a string returned by this library that has not been freed.
 */
void pvc_string_free(char *text);

/*
 The join or product of two graphs; vertex `(g, h)` of a product has index
 `g * order(right) + h`, and a join lists the left graph first.

 # Safety
 `left` and `right` are live handles; `out` is writable.
 */
enum PvcStatus pvc_product(enum PvcProductKind kind,
                           const struct PvcGraph *left,
                           const struct PvcGraph *right,
                           struct PvcGraph **out);

/*
 Diameter; [`PvcStatus::Disconnected`] when it is infinite.

 # Safety
 `graph` is a live handle; `out` is writable.
 */
enum PvcStatus pvc_graph_diameter(const struct PvcGraph *graph, uint32_t *out);

/*
 Vertex connectivity (order - 1 for complete graphs).

 # Safety
 `graph` is a live handle; `out` is writable.
 */
enum PvcStatus pvc_graph_connectivity(const struct PvcGraph *graph, size_t *out);

/*
 A coloring from `len` colors, each at least 1.

 # Safety
 `colors` is readable for `len` entries; `out` is writable.
 */
enum PvcStatus pvc_coloring_new(const uint32_t *colors, size_t len, struct PvcColoring **out);

/*
 Copies up to `capacity` colors into `colors` and returns the coloring's
 length (0 for a null handle).

 # Safety
 `coloring` is null or a live handle; `colors` is writable for `capacity`
 entries or null.
 */
size_t pvc_coloring_colors(const struct PvcColoring *coloring, uint32_t *colors, size_t capacity);

/*
 # Safety
 `coloring` is null or a live handle.
 */
void pvc_coloring_free(struct PvcColoring *coloring);

/*
 Whether every vertex pair is joined by `k` internally disjoint proper paths.

 # Safety
 `graph` and `coloring` are live handles; `out` is writable.
 */
enum PvcStatus pvc_verify_pvck(const struct PvcGraph *graph,
                               const struct PvcColoring *coloring,
                               size_t k,
                               bool *out);

/*
 Whether every vertex pair is joined by a proper shortest path.

 # Safety
 `graph` and `coloring` are live handles; `out` is writable.
 */
enum PvcStatus pvc_verify_spvc(const struct PvcGraph *graph,
                               const struct PvcColoring *coloring,
                               bool *out);

/*
 Exact pvc_k by exhaustive search. `max_order` 0 keeps the default order cap.
 `optimal` may be null; otherwise it receives an optimal coloring, or null
 when the value is 0.

 # Safety
 `graph` is a live handle; `value` is writable; `optimal` is null or writable.
 */
enum PvcStatus pvc_oracle_pvck(const struct PvcGraph *graph,
                               size_t k,
                               size_t max_order,
                               uint32_t *value,
                               struct PvcColoring **optimal);

/*
 Exact spvc by exhaustive search; arguments as for [`pvc_oracle_pvck`].

 # Safety
 `graph` is a live handle; `value` is writable; `optimal` is null or writable.
 */
enum PvcStatus pvc_oracle_spvc(const struct PvcGraph *graph,
                               size_t max_order,
                               uint32_t *value,
                               struct PvcColoring **optimal);

/*
 Closed-form value for the `kind` product of `left` and `right`. `k` selects
 pvc_k; `k = 0` selects spvc. [`PvcStatus::NoFormula`] when no statement
 covers the pair.

 # Safety
 `left` and `right` are live handles; `out` is writable.
 */
enum PvcStatus pvc_theorem_value(enum PvcProductKind kind,
                                 const struct PvcGraph *left,
                                 const struct PvcGraph *right,
                                 size_t k,
                                 struct PvcPrediction *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PVCLAB_H */
