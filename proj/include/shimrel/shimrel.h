/* shimrel: C interface to the Heegner-cycle relation engine.
 *
 * Conventions:
 *   - Every function returns a shimrel_status; out-parameters are written only
 *     on SHIMREL_OK unless documented otherwise.
 *   - Strings returned through char** are heap-allocated; release them with
 *     shimrel_string_free.  Handles are released with their matching _free.
 *   - On failure, shimrel_last_error() returns a message for the calling
 *     thread, valid until that thread's next shimrel call.
 *   - Large integers cross the boundary as decimal strings.
 */
#ifndef SHIMREL_H
#define SHIMREL_H

#include <stddef.h>

#if defined(__GNUC__)
#define SHIMREL_API __attribute__((visibility("default")))
#else
#define SHIMREL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum shimrel_status {
    SHIMREL_OK = 0,
    SHIMREL_ERR_NULL_ARGUMENT = 1,
    SHIMREL_ERR_INVALID_ARGUMENT = 2,
    SHIMREL_ERR_DOMAIN = 3,
    SHIMREL_ERR_PARSE = 4,
    SHIMREL_ERR_INTERNAL = 5
} shimrel_status;

typedef struct shimrel_model shimrel_model;
typedef struct shimrel_report shimrel_report;

/* Library version string, e.g. "0.1.0".  Never NULL. */
SHIMREL_API const char* shimrel_version(void);

/* Message for the last failure on this thread; "" if none.  Do not free. */
SHIMREL_API const char* shimrel_last_error(void);

SHIMREL_API void shimrel_string_free(char* s);

/* ---- models ---------------------------------------------------------- */

/* Validate and construct the model (d0, n_level, p, a, b, k). */
SHIMREL_API shimrel_status shimrel_model_create(long d0, long n_level, long p,
                                                long a, long b, long k,
                                                shimrel_model** out);

/* Check parameters without constructing.  Returns SHIMREL_OK with
 * *diagnostic = NULL when valid, or with *diagnostic set to the first
 * failing condition when invalid. */
SHIMREL_API shimrel_status shimrel_model_validate(long d0, long n_level, long p,
                                                  long a, long b, long k,
                                                  char** diagnostic);

/* Read back parameters; any out pointer may be NULL. */
SHIMREL_API shimrel_status shimrel_model_params(const shimrel_model* m, long* d0,
                                                long* n_level, long* p, long* a,
                                                long* b, long* k);

/* Search models for (d0, n_level) with p <= p_bound.  require_all keeps
 * scanning past the first usable prime; all_residues keeps every residue a
 * for each prime.  *json receives an array of model objects. */
SHIMREL_API shimrel_status shimrel_model_search_json(long d0, long n_level,
                                                     long p_bound, long k,
                                                     int require_all,
                                                     int all_residues, char** json);

SHIMREL_API void shimrel_model_free(shimrel_model* m);

/* ---- relations ------------------------------------------------------- */

/* Assemble the relation for torsion pair (P, Q), each a 4-bit string like
 * "0000" naming a branch-point characteristic, at isogeny degree n.  The
 * calibration honours the SHIMREL_FIXTURE_DIR environment override. */
SHIMREL_API shimrel_status shimrel_relation_build(const shimrel_model* m, long n,
                                                  const char* P, const char* Q,
                                                  shimrel_report** out);

SHIMREL_API shimrel_status shimrel_report_to_json(const shimrel_report* rep,
                                                  char** json);
SHIMREL_API shimrel_status shimrel_report_to_text(const shimrel_report* rep,
                                                  char** text);
SHIMREL_API shimrel_status shimrel_report_from_json(const char* json,
                                                    shimrel_report** out);

/* Internal-consistency audit: *json receives an array of
 * {"name", "passed", "detail"} objects.  Failing checks do not fail the call. */
SHIMREL_API shimrel_status shimrel_report_check_json(const shimrel_report* rep,
                                                     char** json);

SHIMREL_API shimrel_status shimrel_report_term_count(const shimrel_report* rep,
                                                     long* count);

SHIMREL_API void shimrel_report_free(shimrel_report* rep);

/* ---- enumeration and scalar queries ---------------------------------- */

/* Canonical (r, s, delta) tuples at degree n plus reference-catalog
 * warnings: {"tuples": [{"r","s","delta","s1"}...], "warnings": [...]}. */
SHIMREL_API shimrel_status shimrel_enumerate_json(const shimrel_model* m, long n,
                                                  char** json);

/* Class number of a negative discriminant (decimal string). */
SHIMREL_API shimrel_status shimrel_class_number(const char* disc, long* h);

/* Primitive reduced forms of a negative discriminant:
 * array of {"a","b","c"}. */
SHIMREL_API shimrel_status shimrel_reduced_forms_json(const char* disc, char** json);

/* Kronecker symbol (a|n), n != 0; decimal strings. */
SHIMREL_API shimrel_status shimrel_kronecker(const char* a, const char* n, int* out);

/* Hilbert symbol (a,b)_v; place is a prime (decimal) or "inf". */
SHIMREL_API shimrel_status shimrel_hilbert(const char* a, const char* b,
                                           const char* place, int* out);

/* Sign of every even class for the pair (P, Q), in table order:
 * array of {"level_class", "sign"}. */
SHIMREL_API shimrel_status shimrel_signtable_json(const char* P, const char* Q,
                                                  char** json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SHIMREL_H */
