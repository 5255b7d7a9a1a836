/*
 * C interface to the cube-to-brick dissection library.
 *
 * Objects are opaque handles created by *_create and released by *_destroy.
 * Every fallible function returns a cb_status; on failure a message for the
 * calling thread is available from cb_last_error(). Vectors are caller-owned
 * arrays of the brick dimension unless stated otherwise.
 *
 * Axis conventions: a brick is created from side lengths in the caller's
 * order ("user axes"). Internally the lengths are sorted ascending ("sorted
 * axes"). Cube points, realization points and lattice labels use sorted
 * axes; canonical brick points use user axes. cb_brick_to_sorted_axes and
 * cb_brick_to_user_axes convert between the two.
 */
#ifndef CUBEBRICK_H
#define CUBEBRICK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CUBEBRICK_BUILDING)
#    define CB_API __declspec(dllexport)
#  else
#    define CB_API __declspec(dllimport)
#  endif
#else
#  define CB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cb_status {
  CB_OK = 0,
  CB_ERR_INVALID_ARGUMENT = 1,
  CB_ERR_NON_POSITIVE_LENGTH = 2,
  CB_ERR_VOLUME_NOT_UNIT = 3,
  CB_ERR_OUT_OF_DOMAIN = 4,
  CB_ERR_DIMENSION_MISMATCH = 5,
  CB_ERR_INVALID_ASPECT = 6,
  CB_ERR_PRECISION_EXCEEDED = 7,
  CB_ERR_NOT_FOUND = 8,
  CB_ERR_SINGULAR_MATRIX = 9,
  CB_ERR_INTERNAL = 100
} cb_status;

typedef enum cb_svg_mode {
  CB_SVG_RECTANGLE = 0,
  CB_SVG_SQUARE = 1,
  CB_SVG_TILING = 2,
  CB_SVG_SIDE_BY_SIDE = 3
} cb_svg_mode;

typedef struct cb_brick cb_brick;
typedef struct cb_pieces cb_pieces;
typedef struct cb_verify_report cb_verify_report;

/* Errors */
CB_API const char* cb_status_name(cb_status status);
/* Message of the last failure on this thread; "" if none. */
CB_API const char* cb_last_error(void);

/* Bricks */
CB_API cb_status cb_normalize_volume(const double* lengths, size_t n, double* out);
CB_API cb_status cb_brick_create(const double* lengths, size_t n, cb_brick** out);
CB_API void cb_brick_destroy(cb_brick* brick);
CB_API size_t cb_brick_dim(const cb_brick* brick);
CB_API cb_status cb_brick_sorted_lengths(const cb_brick* brick, double* out);
/* out[i] is the user axis of sorted axis i. */
CB_API cb_status cb_brick_perm(const cb_brick* brick, size_t* out);
CB_API cb_status cb_brick_to_sorted_axes(const cb_brick* brick, const double* user, double* sorted);
CB_API cb_status cb_brick_to_user_axes(const cb_brick* brick, const double* sorted, double* user);
/* n-1 subdiagonal entries of the lattice generator B. */
CB_API cb_status cb_brick_generator(const cb_brick* brick, double* sub);
/* n-1 superdiagonal entries of the Gram-Schmidt coefficient matrix A. */
CB_API cb_status cb_brick_gs_coefficients(const cb_brick* brick, double* sup);
/* Dense n*n row-major realization R (O(n^2)). */
CB_API cb_status cb_brick_realization(const cb_brick* brick, double* rows);

/* Maps */
/* x: cube point (sorted axes). Outputs y, u, alpha (sorted axes) and c (user
 * axes); any output pointer may be NULL. */
CB_API cb_status cb_cube_to_brick(const cb_brick* brick, const double* x, double* y, int64_t* u,
                                  double* alpha, double* c);
/* c: canonical brick point (user axes). x (sorted axes) and u may be NULL. */
CB_API cb_status cb_brick_to_cube(const cb_brick* brick, const double* c, double* x, int64_t* u);
CB_API cb_status cb_brick_to_brick(const cb_brick* src, const cb_brick* dst, const double* c,
                                   double* out);
CB_API cb_status cb_canonical_from_realization(const cb_brick* brick, const double* y,
                                               double* alpha);

/* Planar dissection, aspect a >= 1 */
CB_API cb_status cb_montucla_beta(double a, double* beta);
CB_API cb_status cb_piece_count_bound(double a, size_t* bound, size_t* loose_bound);
CB_API cb_status cb_pieces_create(double a, cb_pieces** out);
CB_API void cb_pieces_destroy(cb_pieces* pieces);
CB_API size_t cb_pieces_count(const cb_pieces* pieces);
CB_API cb_status cb_pieces_label(const cb_pieces* pieces, size_t index, int64_t* u);
CB_API size_t cb_pieces_vertex_count(const cb_pieces* pieces, size_t index);
/* xy receives 2*vertex_count doubles; in_square selects the square side. */
CB_API cb_status cb_pieces_vertices(const cb_pieces* pieces, size_t index, int in_square,
                                    double* xy);

/* SVG; *out is a NUL-terminated string released with cb_string_free. */
CB_API cb_status cb_render_svg(double a, cb_svg_mode mode, char** out);
CB_API void cb_string_free(char* s);

/* Self-verification */
CB_API cb_status cb_verify_run(size_t n, size_t trials, uint64_t seed, int inject_fault,
                               cb_verify_report** out);
CB_API void cb_verify_destroy(cb_verify_report* report);
CB_API size_t cb_verify_suite_count(const cb_verify_report* report);
CB_API const char* cb_verify_suite_name(const cb_verify_report* report, size_t index);
CB_API int cb_verify_suite_passed(const cb_verify_report* report, size_t index);
CB_API const char* cb_verify_suite_detail(const cb_verify_report* report, size_t index);

/* Sampling helpers (deterministic for a seed) */
CB_API cb_status cb_random_unit_lengths(size_t n, double log_mass, uint64_t seed, double* out);

#ifdef __cplusplus
}
#endif

#endif /* CUBEBRICK_H */
