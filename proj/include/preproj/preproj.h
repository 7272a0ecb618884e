#ifndef PREPROJ_PREPROJ_H
#define PREPROJ_PREPROJ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes.  0 is success; the rest match the library's error kinds. */
enum {
    PP_OK = 0,
    PP_ERR_DIAGONAL_NOT_TWO = 1,
    PP_ERR_POSITIVITY = 2,
    PP_ERR_ASYMMETRIC_ZERO_PATTERN = 3,
    PP_ERR_NO_SYMMETRIZER = 4,
    PP_ERR_NOT_A_SYMMETRIZER = 5,
    PP_ERR_INVALID_ORIENTATION = 6,
    PP_ERR_CAP_EXCEEDED = 7,
    PP_ERR_FIELD_DEGENERATE = 8,
    PP_ERR_VERIFICATION_FAILED = 9,
    PP_ERR_NOT_DYNKIN = 10,
    PP_ERR_SOCLE_NOT_SIMPLE = 11,
    PP_ERR_RADICAL_UNAVAILABLE = 12,
    PP_ERR_NOT_MUTABLE = 13,
    PP_ERR_REPORT_FAILURE = 14,
    PP_ERR_PARSE = 15,
    PP_ERR_VALIDATION = 16,
    PP_ERR_INVALID_ARGUMENT = 17,
    PP_ERR_INTERNAL = 18
};

/* Output flags for pp_run_command. */
enum { PP_OUT_JSON = 1, PP_OUT_DOT = 2, PP_OUT_BASIS = 4 };

typedef struct pp_config pp_config;
typedef struct pp_algebra pp_algebra;
typedef struct pp_weyl pp_weyl;

/* Message of the last failing call on this thread ("" if none). */
const char* pp_last_error(void);
const char* pp_status_name(int status);
void pp_string_free(char* s);

int pp_config_from_file(const char* path, pp_config** out);
int pp_config_from_string(const char* json, pp_config** out);
/* "rational" or "fp:<p>". */
int pp_config_set_field(pp_config* cfg, const char* spec);
int pp_config_set_cap(pp_config* cfg, uint64_t cap);
int pp_config_set_seed(pp_config* cfg, uint64_t seed);
int pp_config_rank(const pp_config* cfg);
int pp_config_symmetrizer(const pp_config* cfg, int i, int64_t* out);
int pp_config_is_dynkin(const pp_config* cfg);
void pp_config_free(pp_config* cfg);

int pp_algebra_build(const pp_config* cfg, pp_algebra** out);
size_t pp_algebra_dim(const pp_algebra* a);
size_t pp_algebra_projective_dim(const pp_algebra* a, int i);
/* sigma(i), 0-based, of the Nakayama permutation. */
int pp_algebra_nakayama(const pp_algebra* a, int i, int* out);
void pp_algebra_free(pp_algebra* a);

/* Enumerates W(C) up to the config cap; incomplete balls are not an error. */
int pp_weyl_enumerate(const pp_config* cfg, pp_weyl** out);
size_t pp_weyl_order(const pp_weyl* w);
int pp_weyl_complete(const pp_weyl* w);
int pp_weyl_longest_length(const pp_weyl* w);
void pp_weyl_free(pp_weyl* w);

/* Runs check, algebra, weyl, stt, mutation-graph or verify.  *out and *err
   receive strings to release with pp_string_free; *exit_code is 0 on success,
   1 on a failed verification, 2 on bad input. */
int pp_run_command(const pp_config* cfg, const char* command, unsigned flags, char** out, char** err,
                   int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
