#ifndef RADPOLY_H
#define RADPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum RadpolyStatus {
  RADPOLY_STATUS_OK = 0,
  RADPOLY_STATUS_NULL_POINTER = 1,
  RADPOLY_STATUS_INVALID_ARGUMENT = 2,
  RADPOLY_STATUS_INVALID_GRAPH6 = 3,
  RADPOLY_STATUS_OUT_OF_RANGE = 4,
  RADPOLY_STATUS_BUFFER_TOO_SMALL = 5,
  RADPOLY_STATUS_INTERNAL = 6,
} RadpolyStatus;

/*
 Opaque catalog handle; release with [`radpoly_catalog_free`].
 */
typedef struct RadpolyCatalog RadpolyCatalog;

/*
 Static description of a status code.
 */
const char *radpoly_status_string(enum RadpolyStatus status);

/*
 Message for the last failure on this thread; valid until the next call
 that fails on the same thread.
 */
const char *radpoly_last_error_message(void);

/*
 All polytopes with at most `max_edges` edges.

 # Safety
 `out` must be a valid pointer to writable storage for one handle.
 */
enum RadpolyStatus radpoly_catalog_by_edges(uint32_t max_edges, struct RadpolyCatalog **out);

/*
 All polytopes with at most `max_order` vertices.

 # Safety
 `out` must be a valid pointer to writable storage for one handle.
 */
enum RadpolyStatus radpoly_catalog_by_order(uint32_t max_order, struct RadpolyCatalog **out);

/*
 Releases a handle; null is ignored.

 # Safety
 `cat` must be null or a handle from this library not yet freed.
 */
void radpoly_catalog_free(struct RadpolyCatalog *cat);

/*
 Number of records in the catalog.

 # Safety
 `cat` must be a live handle and `out` writable.
 */
enum RadpolyStatus radpoly_catalog_len(const struct RadpolyCatalog *cat, size_t *out);

/*
 Number of records with `p` vertices and `q` edges.

 # Safety
 `cat` must be a live handle and `out` writable.
 */
enum RadpolyStatus radpoly_catalog_cell_count(const struct RadpolyCatalog *cat,
                                              uint32_t p,
                                              uint32_t q,
                                              size_t *out);

/*
 graph6 of record `index` (records ordered by order, size, then code).

 # Safety
 `cat` must be a live handle, `buf` writable for `buf_len` bytes (or null),
 and `out_len` writable.
 */
enum RadpolyStatus radpoly_catalog_record_graph6(const struct RadpolyCatalog *cat,
                                                 size_t index,
                                                 char *buf,
                                                 size_t buf_len,
                                                 size_t *out_len);

/*
 Whether the graph6 graph is a 3-polytope of radius 1.

 # Safety
 `graph6` must be a NUL-terminated string and `out` writable.
 */
enum RadpolyStatus radpoly_is_radius_one_polytope(const char *graph6, bool *out);

/*
 graph6 of the canonical form: equal outputs iff isomorphic inputs.

 # Safety
 `graph6` must be a NUL-terminated string, `buf` writable for `buf_len`
 bytes (or null), and `out_len` writable.
 */
enum RadpolyStatus radpoly_canonical_graph6(const char *graph6,
                                            char *buf,
                                            size_t buf_len,
                                            size_t *out_len);

/*
 Family classes of a comma-separated degree sequence, one per line
 (`A1 p=7`), or `None`.

 # Safety
 `sequence` must be a NUL-terminated string, `buf` writable for `buf_len`
 bytes (or null), and `out_len` writable.
 */
enum RadpolyStatus radpoly_classify(const char *sequence,
                                    char *buf,
                                    size_t buf_len,
                                    size_t *out_len);

#endif  /* RADPOLY_H */
