/* meshperm: mesh-pattern statistics on permutations.
 *
 * Plain C interface over the C++ core. Objects are opaque handles released
 * with their _free function. Every fallible call returns an mp_status; on
 * failure mp_last_error() describes what went wrong for the calling thread.
 * Strings returned through char** are heap-allocated and released with
 * mp_string_free().
 */
#ifndef MESHPERM_MESHPERM_H
#define MESHPERM_MESHPERM_H

#include <stddef.h>
#include <stdint.h>

#if defined(MESHPERM_BUILDING_LIBRARY)
#define MP_API __attribute__((visibility("default")))
#else
#define MP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mp_status {
  MP_OK = 0,
  MP_ERR_INVALID_INPUT = 1, /* malformed values: not a permutation, bad bounds */
  MP_ERR_PARSE = 2,         /* text outside the grammar; see mp_last_error_offset */
  MP_ERR_DOMAIN = 3,        /* well-formed but undefined here, e.g. k < 2 */
  MP_ERR_UNKNOWN_CLAIM = 4,
  MP_ERR_NULL_ARG = 5,
  MP_ERR_INTERNAL = 6
} mp_status;

typedef enum mp_format { MP_FORMAT_JSON = 0, MP_FORMAT_CSV = 1, MP_FORMAT_TEXT = 2 } mp_format;

typedef struct mp_perm mp_perm;
typedef struct mp_pattern mp_pattern;
typedef struct mp_verify_options mp_verify_options;

MP_API const char* mp_version(void);

/* Message of the last failed call on this thread; "" after a success. */
MP_API const char* mp_last_error(void);
/* Byte offset of the last MP_ERR_PARSE on this thread, or -1. */
MP_API long mp_last_error_offset(void);

MP_API void mp_string_free(char* s);

/* ---- permutations ---- */

/* "461928753" (one digit per letter, n <= 9) or "10,1,2,...". */
MP_API mp_status mp_perm_parse(const char* text, mp_perm** out);
MP_API mp_status mp_perm_from_values(const int* values, size_t n, mp_perm** out);
MP_API void mp_perm_free(mp_perm* p);
MP_API size_t mp_perm_length(const mp_perm* p);
/* Copies the one-line form into out[0..n-1]; capacity must be >= n. */
MP_API mp_status mp_perm_values(const mp_perm* p, int* out, size_t capacity);
MP_API mp_status mp_perm_format(const mp_perm* p, char** out);

/* which: "phi", "psi" or "theta". */
MP_API mp_status mp_perm_involution(const mp_perm* p, const char* which, mp_perm** out);
/* Lehmer code as "(e1,...,en)". */
MP_API mp_status mp_perm_lehmer(const mp_perm* p, char** out);
/* Active zone [a,b]; a = b = 0 when it is empty. */
MP_API mp_status mp_perm_active_zone(const mp_perm* p, int* a, int* b);
/* JSON object of named statistics, names comma separated from lrmin,
 * P1..P14, vecP3, vecP4, vecP7, vecP8. fast != 0 selects the
 * characterization-based counters, otherwise the generic matcher. */
MP_API mp_status mp_perm_stats_json(const mp_perm* p, const char* names, int fast, char** out);

/* ---- patterns ---- */

/* Catalog name ("P3", "A4", "Dt3"), classical word ("132"), or
 * "mesh(132;{(0,0),(2,3)})". */
MP_API mp_status mp_pattern_parse(const char* spec, mp_pattern** out);
/* Family name with explicit k; k = 0 takes the default. */
MP_API mp_status mp_pattern_catalog(const char* name, int k, mp_pattern** out);
MP_API void mp_pattern_free(mp_pattern* p);
MP_API mp_status mp_pattern_render(const mp_pattern* p, char** out);
MP_API mp_status mp_pattern_flip(const mp_pattern* p, mp_pattern** out);

/* ---- matching ---- */

MP_API mp_status mp_count(const mp_pattern* pattern, const mp_perm* host, uint64_t* out);
MP_API mp_status mp_contains(const mp_pattern* pattern, const mp_perm* host, int* out);
MP_API mp_status mp_occurrences_json(const mp_pattern* pattern, const mp_perm* host, char** out);

/* ---- exhaustive computations ---- */

MP_API mp_status mp_catalog_json(char** out);
/* Joint distribution of the counts of a comma-separated pattern list over
 * S_n. JSON or CSV. */
MP_API mp_status mp_distribution(const char* patterns, int n, int jobs, mp_format format, char** out);
/* S_n(patterns). list != 0 includes the members. JSON or CSV. */
MP_API mp_status mp_enumerate(const char* patterns, int n, int list, int jobs, mp_format format, char** out);
/* which: "F" (sum of s^P13 t^P14 over S_n) or "S" (sum of t^A over
 * S_n(132)). recurrence != 0 uses the recurrences instead of brute force. */
MP_API mp_status mp_genfun(const char* which, int n, int recurrence, int jobs, mp_format format, char** out);

/* ---- verification ---- */

MP_API mp_verify_options* mp_verify_options_new(void);
MP_API void mp_verify_options_free(mp_verify_options* o);
/* Upper bound on n for every claim; 0 removes it. */
MP_API mp_status mp_verify_options_set_max_n(mp_verify_options* o, int max_n);
MP_API mp_status mp_verify_options_set_jobs(mp_verify_options* o, int jobs);
/* Explicit range for a single claim, replacing its default. */
MP_API mp_status mp_verify_options_set_range(mp_verify_options* o, int n_min, int n_max);
/* Family sizes for parametric claims, replacing their default. */
MP_API mp_status mp_verify_options_set_params(mp_verify_options* o, const int* ks, size_t count);
/* Test hook: corrupts the matcher count of P_index (1..14); 0 disables. */
MP_API mp_status mp_verify_options_set_fault(mp_verify_options* o, int pattern_index);

/* claim: registered id or "all". *passed receives 1 when every check
 * passed. MP_FORMAT_TEXT or MP_FORMAT_JSON. */
MP_API mp_status mp_verify(const char* claim, const mp_verify_options* options, mp_format format, char** out,
                           int* passed);
MP_API mp_status mp_claims_json(char** out);

#ifdef __cplusplus
}
#endif

#endif /* MESHPERM_MESHPERM_H */
