#ifndef STEENROD_C_H
#define STEENROD_C_H

/* C interface to the steenrod library. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every call
 * that can fail returns an st_status; st_last_error() then describes the
 * failure for the calling thread. Strings returned by accessors stay valid
 * until the owning handle is freed. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ST_API __declspec(dllexport)
#else
#define ST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum st_status {
  ST_OK = 0,
  ST_ERR_ARGUMENT = 1,
  ST_ERR_VALIDATION = 2,
  ST_ERR_NOT_COCYCLE = 3,
  ST_ERR_RANGE = 4,
  ST_ERR_OVERFLOW = 5,
  ST_ERR_IO = 6,
  ST_ERR_INTERNAL = 7
} st_status;

typedef struct st_element st_element;
typedef struct st_space st_space;
typedef struct st_class st_class;

ST_API const char* st_version(void);
ST_API const char* st_last_error(void);
ST_API const char* st_status_name(st_status status);

/* Worker threads for cell-parallel evaluation; results do not depend on it. */
ST_API void st_set_threads(int threads);

/* ---- operad elements ---------------------------------------------------- */

/* family is "barratt-eccles" or "surjection"; the image of e_n in arity r. */
ST_API st_status st_psi(const char* family, int r, int n, st_element** out);
ST_API size_t st_element_size(const st_element* e);
/* Terms come in canonical key order. */
ST_API st_status st_element_term(const st_element* e, size_t index, int64_t* coefficient, const char** key);
ST_API const char* st_element_text(const st_element* e);
ST_API void st_element_free(st_element* e);

/* ---- cochain products on a standard cell -------------------------------- */

/* Cup-(r,i) product of `count` cochains evaluated on a chain of the standard
 * simplex or cube of dimension n. prime = 0 computes over Z. Chains and
 * cochains use the text form `[0,1]+2*[1,2]` or `[01][0]-[1][01]`. */
ST_API st_status st_cup(const char* geometry, int n, int64_t prime, int r, int i, const char* chain,
                        const char* const* cochains, size_t count, int64_t* value);

/* ---- spaces -------------------------------------------------------------- */

ST_API st_status st_space_builtin(const char* name, st_space** out);
ST_API st_status st_space_from_json(const char* text, st_space** out);
ST_API void st_space_free(st_space* s);
ST_API int st_space_dimension(const st_space* s);
ST_API const char* st_space_geometry(const st_space* s);
ST_API size_t st_space_cell_count(const st_space* s, int degree);
ST_API const char* st_space_cell_name(const st_space* s, int degree, size_t index);

/* ---- cohomology ---------------------------------------------------------- */

ST_API st_status st_cohomology_rank(const st_space* s, int64_t prime, int degree, size_t* rank);
/* Basis class `index` of H^degree(s; F_prime). */
ST_API st_status st_class_basis(const st_space* s, int64_t prime, int degree, size_t index, st_class** out);
/* P^power or, with bockstein != 0, βP^power (cohomological indexing). */
ST_API st_status st_steenrod(const st_space* s, const st_class* in, int power, int bockstein, st_class** out);
ST_API st_status st_cup_classes(const st_space* s, const st_class* a, const st_class* b, st_class** out);
ST_API int st_class_degree(const st_class* c);
ST_API int64_t st_class_prime(const st_class* c);
ST_API size_t st_class_rank(const st_class* c);
ST_API const int64_t* st_class_coordinates(const st_class* c);
ST_API size_t st_class_representative_size(const st_class* c);
ST_API const int64_t* st_class_representative(const st_class* c);
ST_API void st_class_free(st_class* c);

/* ---- memo persistence ---------------------------------------------------- */

ST_API st_status st_cache_load(const char* dir, size_t* entries);
ST_API st_status st_cache_save(const char* dir, size_t* entries);

#ifdef __cplusplus
}
#endif

#endif
