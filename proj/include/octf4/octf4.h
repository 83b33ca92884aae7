/* C interface to the octf4 library. All data crosses the boundary either as
 * opaque handles or as UTF-8 JSON text; strings returned through char** are
 * owned by the caller and released with octf4_string_free. */
#ifndef OCTF4_OCTF4_H
#define OCTF4_OCTF4_H

#include <stdint.h>

#if defined(_WIN32)
#  ifdef OCTF4_BUILDING_LIBRARY
#    define OCTF4_API __declspec(dllexport)
#  else
#    define OCTF4_API __declspec(dllimport)
#  endif
#else
#  define OCTF4_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum octf4_status {
  OCTF4_OK = 0,
  OCTF4_INVALID_ARGUMENT = 1,
  OCTF4_PARSE_ERROR = 2,
  OCTF4_NOT_ON_VARIETY = 3,
  OCTF4_RESIDUAL_FAILURE = 4,
  OCTF4_INTERNAL_ERROR = 5
} octf4_status;

typedef struct octf4_config octf4_config;
typedef struct octf4_herm octf4_herm;
typedef struct octf4_real_herm octf4_real_herm;
typedef struct octf4_trace octf4_trace;

/* Message of the last failing call on this thread; never NULL. */
OCTF4_API const char* octf4_last_error(void);
OCTF4_API const char* octf4_status_name(octf4_status s);
OCTF4_API void octf4_string_free(char* s);
OCTF4_API const char* octf4_version(void);

/* Configuration: tolerances, seed and sample count. */
OCTF4_API octf4_status octf4_config_create(octf4_config** out);
/* Keys missing from the JSON keep their defaults. */
OCTF4_API octf4_status octf4_config_from_json(const char* json, octf4_config** out);
OCTF4_API octf4_status octf4_config_to_json(const octf4_config* cfg, char** out);
OCTF4_API octf4_status octf4_config_set_seed(octf4_config* cfg, uint64_t seed);
OCTF4_API octf4_status octf4_config_get_seed(const octf4_config* cfg, uint64_t* seed);
OCTF4_API octf4_status octf4_config_set_samples(octf4_config* cfg, int samples);
OCTF4_API octf4_status octf4_config_get_samples(const octf4_config* cfg, int* samples);
/* Sets the acceptance tolerance; classify is raised to match if needed. */
OCTF4_API octf4_status octf4_config_set_accept(octf4_config* cfg, double tol);
OCTF4_API void octf4_config_destroy(octf4_config* cfg);

/* Complex 3x3 octonionic hermitian matrices. */
OCTF4_API octf4_status octf4_herm_from_json(const char* json, octf4_herm** out);
OCTF4_API octf4_status octf4_herm_canonical(octf4_herm** out);
OCTF4_API octf4_status octf4_herm_to_json(const octf4_herm* a, char** out);
OCTF4_API void octf4_herm_destroy(octf4_herm* a);

/* Matrices of the real model. */
OCTF4_API octf4_status octf4_real_herm_from_json(const char* json, octf4_real_herm** out);
OCTF4_API octf4_status octf4_real_herm_to_json(const octf4_real_herm* x, char** out);
OCTF4_API void octf4_real_herm_destroy(octf4_real_herm* x);

/* Branch label and the three isotropy criteria, as JSON. */
OCTF4_API octf4_status octf4_classify(const octf4_herm* a, const octf4_config* cfg, char** out);

/* Reduction to the canonical form. On OCTF4_RESIDUAL_FAILURE *out still
 * receives the partial trace for diagnosis; on other errors *out is NULL. */
OCTF4_API octf4_status octf4_reduce(const octf4_herm* a, const octf4_config* cfg,
                                    octf4_trace** out);
OCTF4_API octf4_status octf4_reduce_real(const octf4_real_herm* x, const octf4_config* cfg,
                                         octf4_trace** out);

OCTF4_API octf4_status octf4_trace_from_json(const char* json, octf4_trace** out);
OCTF4_API octf4_status octf4_trace_to_json(const octf4_trace* t, char** out);
OCTF4_API octf4_status octf4_trace_residual(const octf4_trace* t, double* out);
OCTF4_API octf4_status octf4_trace_word_length(const octf4_trace* t, int* out);
/* Recomputes the word action on the recorded input. *ok is 1 when the
 * result matches the target within the acceptance tolerance. */
OCTF4_API octf4_status octf4_trace_verify(const octf4_trace* t, const octf4_config* cfg, int* ok,
                                          char** report);
OCTF4_API void octf4_trace_destroy(octf4_trace* t);

/* JSON array of n orbit samples; real != 0 selects the real model. */
OCTF4_API octf4_status octf4_sample(uint64_t seed, int n, int real, char** out);

/* Runs a named verification suite; *passed is 1 on success. */
OCTF4_API octf4_status octf4_verify_suite(const char* name, int n, uint64_t seed,
                                          const octf4_config* cfg, int* passed, char** report);
/* Space separated list of suite names. */
OCTF4_API const char* octf4_suite_names(void);

/* Fundamental representation dimensions and the p4 report. */
OCTF4_API octf4_status octf4_dims_json(char** out);

#ifdef __cplusplus
}
#endif

#endif
