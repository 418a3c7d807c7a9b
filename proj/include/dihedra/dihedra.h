/* C interface to the dihedra library.
 *
 * Every function returns a dihedra_status. On failure the message for the
 * calling thread is available from dihedra_last_error(). Strings returned
 * through char** out-parameters are owned by the caller and released with
 * dihedra_string_free(); handles are released with their matching _free.
 */
#ifndef DIHEDRA_H
#define DIHEDRA_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DIHEDRA_BUILDING_LIBRARY)
#    define DIHEDRA_API __declspec(dllexport)
#  else
#    define DIHEDRA_API __declspec(dllimport)
#  endif
#else
#  define DIHEDRA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dihedra_status {
  DIHEDRA_OK = 0,
  DIHEDRA_ERR_INVALID_ARGUMENT = 1,
  DIHEDRA_ERR_PARSE = 2,
  DIHEDRA_ERR_DEGENERATE = 3,
  DIHEDRA_ERR_PARITY = 4,
  DIHEDRA_ERR_NO_ACTION = 5,
  DIHEDRA_ERR_NOT_ANALYTIC = 6,
  DIHEDRA_ERR_UNSUPPORTED = 7,
  DIHEDRA_ERR_BUDGET = 8,
  DIHEDRA_ERR_OVERFLOW = 9,
  DIHEDRA_ERR_INTERNAL = 10,
  DIHEDRA_ERR_NULL = 11
} dihedra_status;

typedef struct dihedra_geosig dihedra_geosig;
typedef struct dihedra_character dihedra_character;
typedef struct dihedra_genvec dihedra_genvec;
typedef struct dihedra_decomposition dihedra_decomposition;
typedef struct dihedra_ske_list dihedra_ske_list;
typedef struct dihedra_table dihedra_table;

typedef struct dihedra_oracle_options {
  long long max_group_order; /* largest 2n enumerated */
  long long max_generators;  /* largest 2*gamma + v */
  int jobs;
} dihedra_oracle_options;

DIHEDRA_API const char* dihedra_version(void);
DIHEDRA_API const char* dihedra_last_error(void);
DIHEDRA_API const char* dihedra_status_name(dihedra_status status);
DIHEDRA_API void dihedra_string_free(char* s);
DIHEDRA_API void dihedra_oracle_default_options(dihedra_oracle_options* opts);

/* Geometric signatures. n_hint = 0 means "take n from the Dn prefix". */
DIHEDRA_API dihedra_status dihedra_geosig_parse(const char* text, long long n_hint, dihedra_geosig** out);
DIHEDRA_API dihedra_status dihedra_geosig_from_json(const char* json, dihedra_geosig** out);
DIHEDRA_API void dihedra_geosig_free(dihedra_geosig* gs);
DIHEDRA_API dihedra_status dihedra_geosig_to_string(const dihedra_geosig* gs, char** out);
DIHEDRA_API dihedra_status dihedra_geosig_to_json(const dihedra_geosig* gs, char** out);
DIHEDRA_API dihedra_status dihedra_geosig_plain_string(const dihedra_geosig* gs, char** out);
DIHEDRA_API dihedra_status dihedra_geosig_n(const dihedra_geosig* gs, long long* out);
DIHEDRA_API dihedra_status dihedra_geosig_genus(const dihedra_geosig* gs, long long* out);

/* Characters (multiplicity vectors). */
DIHEDRA_API dihedra_status dihedra_character_from_json(const char* json, dihedra_character** out);
DIHEDRA_API void dihedra_character_free(dihedra_character* v);
DIHEDRA_API dihedra_status dihedra_character_to_string(const dihedra_character* v, char** out);
DIHEDRA_API dihedra_status dihedra_character_to_json(const dihedra_character* v, char** out);
DIHEDRA_API dihedra_status dihedra_character_dimension(const dihedra_character* v, long long* out);

/* Correspondence and realizability. */
DIHEDRA_API dihedra_status dihedra_analytic_from_geosig(const dihedra_geosig* gs, dihedra_character** out);
DIHEDRA_API dihedra_status dihedra_geosig_from_analytic(const dihedra_character* v, dihedra_geosig** out);
/* *out_reason is NULL when realizable. */
DIHEDRA_API dihedra_status dihedra_is_realizable(const dihedra_geosig* gs, int allow_low_genus, int* out_realizable, char** out_reason);
DIHEDRA_API dihedra_status dihedra_is_analytic_representation(const dihedra_character* v, int allow_low_genus, int* out_ok, char** out_reason);

/* Generating vectors and the brute-force oracle. */
DIHEDRA_API dihedra_status dihedra_generating_vector(const dihedra_geosig* gs, int allow_low_genus, dihedra_genvec** out);
DIHEDRA_API dihedra_status dihedra_genvec_from_json(const char* json, dihedra_genvec** out);
DIHEDRA_API void dihedra_genvec_free(dihedra_genvec* v);
DIHEDRA_API dihedra_status dihedra_genvec_to_string(const dihedra_genvec* v, char** out);
DIHEDRA_API dihedra_status dihedra_genvec_to_json(const dihedra_genvec* v, char** out);
DIHEDRA_API dihedra_status dihedra_verify_ske(const dihedra_genvec* v, const char* plain_signature, int* out_ok);
DIHEDRA_API dihedra_status dihedra_geosig_of_ske(const dihedra_genvec* v, dihedra_geosig** out);
DIHEDRA_API dihedra_status dihedra_chevalley_weil(const dihedra_genvec* v, dihedra_character** out);

/* opts may be NULL for the defaults. */
DIHEDRA_API dihedra_status dihedra_oracle_enumerate(long long n, const char* plain_signature, const dihedra_oracle_options* opts, dihedra_ske_list** out);
DIHEDRA_API void dihedra_ske_list_free(dihedra_ske_list* list);
DIHEDRA_API dihedra_status dihedra_ske_list_size(const dihedra_ske_list* list, size_t* out);
DIHEDRA_API dihedra_status dihedra_ske_list_record_json(const dihedra_ske_list* list, size_t index, char** out);
DIHEDRA_API dihedra_status dihedra_ske_list_record_string(const dihedra_ske_list* list, size_t index, char** out);

/* Decompositions. Subgroups are written H(alpha), K(alpha) or C(alpha). */
DIHEDRA_API dihedra_status dihedra_full_decomposition(const dihedra_geosig* gs, dihedra_decomposition** out);
DIHEDRA_API dihedra_status dihedra_quotient_decomposition(const dihedra_geosig* gs, const char* subgroup, dihedra_decomposition** out);
DIHEDRA_API dihedra_status dihedra_prym_decomposition(const dihedra_geosig* gs, const char* cover, const char* base, dihedra_decomposition** out);
DIHEDRA_API void dihedra_decomposition_free(dihedra_decomposition* d);
DIHEDRA_API dihedra_status dihedra_decomposition_to_string(const dihedra_decomposition* d, char** out);
DIHEDRA_API dihedra_status dihedra_decomposition_to_json(const dihedra_decomposition* d, char** out);
DIHEDRA_API dihedra_status dihedra_decomposition_dimension(const dihedra_decomposition* d, long long* out);
DIHEDRA_API dihedra_status dihedra_quotient_genus(const dihedra_geosig* gs, const char* subgroup, long long* out);
/* *out_json is NULL when B(q) is not a Prym of an intermediate cover. */
DIHEDRA_API dihedra_status dihedra_prym_realization(const dihedra_geosig* gs, long long q, int* out_found, char** out_json);
DIHEDRA_API dihedra_status dihedra_is_prym_affordable_group(long long n, int* out);

/* Classification tables. */
DIHEDRA_API dihedra_status dihedra_classify_complete(long long n, int jobs, dihedra_table** out);
DIHEDRA_API dihedra_status dihedra_classify_kdec(long long n, long long k, long long genus_bound, int jobs, dihedra_table** out);
DIHEDRA_API void dihedra_table_free(dihedra_table* t);
DIHEDRA_API dihedra_status dihedra_table_size(const dihedra_table* t, size_t* out);
DIHEDRA_API dihedra_status dihedra_table_row(const dihedra_table* t, size_t index, long long* out_genus, char** out_geosig, char** out_decomposition);
DIHEDRA_API dihedra_status dihedra_table_row_json(const dihedra_table* t, size_t index, char** out);

/* Runs the bounded oracle corpus and golden-table comparison.
 * golden_dir may be NULL for the build-time location. */
DIHEDRA_API dihedra_status dihedra_selftest(const char* golden_dir, long long max_n, int jobs, int* out_passed, char** out_report);

#ifdef __cplusplus
}
#endif

#endif
