/* C interface to the ghrv library: rank varieties of periodic complexes over
 * generic hypersurfaces.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every function returning ghrv_status sets a thread-local message readable
 * with ghrv_last_error() on failure. Strings returned through char** are
 * owned by the caller and released with ghrv_string_free(). */
#ifndef GHRV_H
#define GHRV_H

#include <stddef.h>
#include <stdint.h>

#if defined(GHRV_BUILDING_LIBRARY)
#define GHRV_API __attribute__((visibility("default")))
#else
#define GHRV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ghrv_status {
  GHRV_OK = 0,
  GHRV_ERR_SYNTAX,
  GHRV_ERR_UNKNOWN_VARIABLE,
  GHRV_ERR_NOT_SQUARE,
  GHRV_ERR_BOUND_EXCEEDED,
  GHRV_ERR_PRECONDITION,
  GHRV_ERR_BAD_ARITY,
  GHRV_ERR_NOT_IN_MAXIMAL_IDEAL,
  GHRV_ERR_NOT_REGULAR_SEQUENCE,
  GHRV_ERR_VARIABLE_LEAK,
  GHRV_ERR_NOT_STABILIZED,
  GHRV_ERR_CERTIFICATION_FAILED,
  GHRV_ERR_NOT_A_COMPLEX,
  GHRV_ERR_NOT_HOMOGENEOUS,
  GHRV_ERR_NOT_HOMOGENEOUS_SCALAR,
  GHRV_ERR_RING_MISMATCH,
  GHRV_ERR_INVALID_COMPLEX,
  GHRV_ERR_UNSUPPORTED_FIELD,
  GHRV_ERR_NOT_CONTRACTIBLE,
  GHRV_ERR_TOO_LARGE,
  GHRV_ERR_IO,
  GHRV_ERR_FORMAT,
  GHRV_ERR_INVALID_ARGUMENT,
  GHRV_ERR_INTERNAL
} ghrv_status;

typedef struct ghrv_ring ghrv_ring;
typedef struct ghrv_complex ghrv_complex;
typedef struct ghrv_variety ghrv_variety;
typedef struct ghrv_trace ghrv_trace;

GHRV_API const char* ghrv_last_error(void);
GHRV_API const char* ghrv_status_name(ghrv_status status);
GHRV_API void ghrv_string_free(char* s);
/* Caps worker threads; 0 means hardware concurrency. */
GHRV_API void ghrv_set_jobs(unsigned jobs);

/* Rings */
GHRV_API ghrv_status ghrv_ring_load(const char* path, ghrv_ring** out);
GHRV_API ghrv_status ghrv_ring_from_json(const char* json, ghrv_ring** out);
/* Same variables and f over another prime field or QQ. */
GHRV_API ghrv_status ghrv_ring_with_field(const ghrv_ring* ring, const char* field, ghrv_ring** out);
GHRV_API ghrv_status ghrv_ring_c(const ghrv_ring* ring, size_t* out);
GHRV_API ghrv_status ghrv_ring_to_json(const ghrv_ring* ring, char** out);
GHRV_API void ghrv_ring_free(ghrv_ring* ring);

/* Complexes. fixture may be NULL; otherwise path names a ring file. */
GHRV_API ghrv_status ghrv_complex_load(const char* path, const char* fixture, ghrv_complex** out);
GHRV_API ghrv_status ghrv_complex_fixture(const ghrv_ring* ring, const char* name, ghrv_complex** out);
/* Validation report for a complex file; *ok is 1 when there are no findings. */
GHRV_API ghrv_status ghrv_complex_check(const char* path, int* ok, char** report);
GHRV_API ghrv_status ghrv_complex_ring(const ghrv_complex* c, ghrv_ring** out);
GHRV_API ghrv_status ghrv_complex_size(const ghrv_complex* c, size_t* out);
GHRV_API ghrv_status ghrv_complex_describe(const ghrv_complex* c, char** out);
GHRV_API ghrv_status ghrv_complex_to_json(const ghrv_complex* c, char** out);
/* which is 'A' or 'B'. */
GHRV_API ghrv_status ghrv_complex_rank(const ghrv_complex* c, char which, size_t* rank, int* certified);
/* Generators of the image in k[x] of the ideal of r x r minors, r = rank;
 * returned as a JSON array of strings. */
GHRV_API ghrv_status ghrv_complex_ideal(const ghrv_complex* c, char which, char** out);
GHRV_API ghrv_status ghrv_complex_cone(const ghrv_complex* c, const char* p, ghrv_complex** out);
GHRV_API ghrv_status ghrv_complex_shift(const ghrv_complex* c, ghrv_complex** out);
GHRV_API ghrv_status ghrv_complex_dual(const ghrv_complex* c, ghrv_complex** out);
GHRV_API ghrv_status ghrv_complex_sum(const ghrv_complex* c, const ghrv_complex* d, ghrv_complex** out);
GHRV_API void ghrv_complex_free(ghrv_complex* c);

/* Points. alpha is "a1,...,ac" in the syntax of field (NULL: the ring's
 * field); preimages is NULL or "p1,...,pc", polynomials in the y-variables. */
GHRV_API ghrv_status ghrv_specialize(const ghrv_complex* c, const char* alpha, const char* field, const char* preimages,
                                     char** report);
GHRV_API ghrv_status ghrv_contractible(const ghrv_complex* c, const char* alpha, const char* field,
                                       const char* preimages, int* contractible, char** report);
/* Preimage perturbation check; *consistent is 1 when no verdict changed. */
GHRV_API ghrv_status ghrv_preimage_check(const ghrv_complex* c, const char* alpha, const char* field, unsigned trials,
                                         uint64_t seed, int* consistent);
GHRV_API ghrv_status ghrv_points(const char* field, size_t c, char** out);

/* Varieties */
GHRV_API ghrv_status ghrv_complex_variety(const ghrv_complex* c, ghrv_variety** out);
/* As ghrv_complex_variety but requires a certified resolution. */
GHRV_API ghrv_status ghrv_module_variety(const ghrv_complex* c, ghrv_variety** out);
/* points_field NULL: no point list. */
GHRV_API ghrv_status ghrv_variety_report(const ghrv_variety* v, const char* points_field, char** out);
GHRV_API ghrv_status ghrv_variety_to_json(const ghrv_variety* v, const char* points_field, char** out);
GHRV_API ghrv_status ghrv_variety_contains(const ghrv_variety* v, const char* alpha, const char* field, int* member);
/* Scans GF(p^j), j <= bound. witness may be NULL. */
GHRV_API ghrv_status ghrv_variety_is_empty(const ghrv_variety* v, unsigned bound, int* empty, char** witness);
GHRV_API void ghrv_variety_free(ghrv_variety* v);

/* Pipelines */
GHRV_API ghrv_status ghrv_resolve_k(const ghrv_ring* ring, ghrv_complex** out);
GHRV_API ghrv_status ghrv_realize(const ghrv_ring* ring, const char* const* ps, size_t n, unsigned ext_bound,
                                  ghrv_trace** out);
GHRV_API ghrv_status ghrv_trace_ok(const ghrv_trace* t, int* ok);
GHRV_API ghrv_status ghrv_trace_result(const ghrv_trace* t, ghrv_complex** out);
GHRV_API ghrv_status ghrv_trace_report(const ghrv_trace* t, int with_points, char** out);
GHRV_API ghrv_status ghrv_trace_to_json(const ghrv_trace* t, int with_points, char** out);
GHRV_API void ghrv_trace_free(ghrv_trace* t);
GHRV_API ghrv_status ghrv_reproduce(const char* field, uint64_t seed, int* ok, char** report);

#ifdef __cplusplus
}
#endif

#endif
