#ifndef SURFDENS_H
#define SURFDENS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SdStatus {
  SD_STATUS_OK = 0,
  SD_STATUS_NULL_POINTER = 1,
  SD_STATUS_INVALID_UTF8 = 2,
  SD_STATUS_PARSE = 3,
  SD_STATUS_VERTEX_OUT_OF_RANGE = 4,
  SD_STATUS_NOT_AN_EDGE = 5,
  SD_STATUS_SIZE_CAP = 6,
  SD_STATUS_WORK_CAP = 7,
  SD_STATUS_DISCONNECTED = 8,
  SD_STATUS_NOT_A_TREE = 9,
  SD_STATUS_NOT_A_TRIANGULATION = 10,
  SD_STATUS_PRECONDITION = 11,
  SD_STATUS_PANIC = 12,
} SdStatus;

/**
 * Opaque embedded-graph handle.
 */
typedef struct SdEmbedding SdEmbedding;

/**
 * Opaque graph handle.
 */
typedef struct SdGraph SdGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call on the same thread.
 */
const char *sd_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void sd_string_free(char *s);

/**
 * Parses the edge-list format (`n m` header, one `u v` per line).
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum SdStatus sd_graph_parse(const char *text, struct SdGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from `sd_graph_parse`, not yet freed.
 */
void sd_graph_free(struct SdGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_graph_serialize(const struct SdGraph *g, char **out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_graph_order(const struct SdGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_graph_size(const struct SdGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_flap_number(const struct SdGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_is_planar(const struct SdGraph *g, bool *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_is_strongly_non_planar(const struct SdGraph *g, bool *out);

/**
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_tree_beta(const struct SdGraph *t, size_t *out);

/**
 * Copies of `h` in `g`, as a decimal string.
 *
 * # Safety
 * `h` and `g` must be live handles; `out` must be writable.
 */
enum SdStatus sd_count_copies(const struct SdGraph *h, const struct SdGraph *g, char **out);

/**
 * Copies of `K_s` in `g`, as a decimal string.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_count_cliques(const struct SdGraph *g, size_t s, char **out);

/**
 * Parses the rotation-system format (`n`, then `v: u1 u2- ...`).
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum SdStatus sd_embedding_parse(const char *text, struct SdEmbedding **out);

/**
 * # Safety
 * `e` must be null or a handle from `sd_embedding_parse`, not yet freed.
 */
void sd_embedding_free(struct SdEmbedding *e);

/**
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_embedding_genus(const struct SdEmbedding *e, size_t *out);

/**
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_embedding_face_count(const struct SdEmbedding *e, size_t *out);

/**
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_embedding_is_triangulation(const struct SdEmbedding *e, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SURFDENS_H */
