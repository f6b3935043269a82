#ifndef IK_SIEVE_H
#define IK_SIEVE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IkOutcome {
  IK_OUTCOME_ELIMINATED = 0,
  IK_OUTCOME_IK_BY_MINOR = 1,
  IK_OUTCOME_UNDETERMINED = 2,
  IK_OUTCOME_NOT_IK_COMPONENT_BOUND = 3,
} IkOutcome;

typedef enum IkProp21 {
  IK_PROP21_PLANAR = 0,
  IK_PROP21_K33 = 1,
  IK_PROP21_K5 = 2,
  IK_PROP21_K33E1 = 3,
  IK_PROP21_K33E2 = 4,
  IK_PROP21_GENERAL_NONPLANAR = 5,
} IkProp21;

typedef enum IkStatus {
  IK_STATUS_OK = 0,
  IK_STATUS_NULL_POINTER = 1,
  IK_STATUS_PARSE = 2,
  IK_STATUS_INVALID_ARGUMENT = 3,
  IK_STATUS_NOT_FOUND = 4,
  IK_STATUS_BUFFER_TOO_SMALL = 5,
  IK_STATUS_PANIC = 6,
} IkStatus;

/**
 * Opaque graph handle.
 */
typedef struct IkGraph IkGraph;

/**
 * Count-equation fields of one `Ĝ_{a,b}` computation.
 */
typedef struct IkReductionTrace {
  uint32_t ne;
  uint32_t nv3;
  uint32_t nv4;
  uint32_t nvy;
  int64_t predicted_edges;
  uint32_t actual_edges;
} IkReductionTrace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a graph from `edge_count` vertex pairs stored flat in `edges`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be null when
 * `edge_count` is 0); `out` must be writable.
 */
enum IkStatus ik_graph_new(uint32_t vertex_count,
                           const uint32_t *edges,
                           size_t edge_count,
                           struct IkGraph **out);

/**
 * Parses a NUL-terminated graph6 string.
 *
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
enum IkStatus ik_graph_from_graph6(const char *text, struct IkGraph **out);

/**
 * Builds a named catalog graph (K7, K5, K33, K55, K3311, HEAWOOD, COUSIN110).
 *
 * # Safety
 * `name` must be a valid C string; `out` must be writable.
 */
enum IkStatus ik_catalog(const char *name, struct IkGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be freed twice.
 */
void ik_graph_free(struct IkGraph *g);

/**
 * Vertex count, or 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint32_t ik_graph_vertex_count(const struct IkGraph *g);

/**
 * Edge count with multiplicity, or 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint32_t ik_graph_edge_count(const struct IkGraph *g);

/**
 * Writes the graph6 text plus a NUL into `buf`. `needed` receives the
 * required size including the NUL, also when the buffer is too small.
 *
 * # Safety
 * `buf` must have `len` writable bytes (may be null when `len` is 0).
 */
enum IkStatus ik_graph_to_graph6(const struct IkGraph *g, char *buf, size_t len, size_t *needed);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum IkStatus ik_graph_is_planar(const struct IkGraph *g, bool *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum IkStatus ik_graph_is_bipartite(const struct IkGraph *g, bool *out);

/**
 * # Safety
 * `g` and `h` must be live handles; `out` must be writable.
 */
enum IkStatus ik_graph_are_isomorphic(const struct IkGraph *g, const struct IkGraph *h, bool *out);

/**
 * Computes `Ĝ_{a,b}`. Either output pointer may be null.
 *
 * # Safety
 * `g` must be a live handle; non-null outputs must be writable.
 */
enum IkStatus ik_hat(const struct IkGraph *g,
                     uint32_t a,
                     uint32_t b,
                     struct IkGraph **out_graph,
                     struct IkReductionTrace *out_trace);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum IkStatus ik_prop21_classify(const struct IkGraph *g, enum IkProp21 *out);

/**
 * First pair with a planar `Ĝ_{a,b}`; `IK_STATUS_NOT_FOUND` when none.
 *
 * # Safety
 * `g` must be a live handle; `a` and `b` must be writable.
 */
enum IkStatus ik_two_apex_witness(const struct IkGraph *g, uint32_t *a, uint32_t *b);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum IkStatus ik_sieve_graph(const struct IkGraph *g, enum IkOutcome *out);

/**
 * # Safety
 * `g` and `h` must be live handles; `out` must be writable.
 */
enum IkStatus ik_has_minor(const struct IkGraph *g, const struct IkGraph *h, bool *out);

/**
 * Copies the calling thread's last error message (NUL-terminated, truncated
 * to fit) and returns its full length without the NUL.
 *
 * # Safety
 * `buf` must have `len` writable bytes (may be null when `len` is 0).
 */
size_t ik_last_error_message(char *buf, size_t len);

/**
 * Library version as a static C string.
 */
const char *ik_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IK_SIEVE_H */
