/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef CRYSTALKIT_CRYSTALKIT_H
#define CRYSTALKIT_CRYSTALKIT_H

/*
 * C interface of the crystalkit shared library.
 *
 * Every fallible function returns a ck_status. On failure a message is
 * available from ck_last_error() until the next call on the same thread.
 * Strings returned through char** are owned by the caller and released with
 * ck_free_string().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CK_API __declspec(dllexport)
#else
#define CK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ck_status {
  CK_OK = 0,
  CK_BAD_LENGTH,
  CK_BAD_LETTER,
  CK_NOT_REDUCED,
  CK_INAPPLICABLE_MOVE,
  CK_INCOMPARABLE_KINDS,
  CK_NO_UNIQUE_EXTREMUM,
  CK_PEELING_INCOMPLETE,
  CK_NOT_A_STRING_DATUM,
  CK_DIMENSION_MISMATCH,
  CK_UNKNOWN_SUITE,
  CK_NO_UNIQUE_ROOT,
  CK_INVALID_ARGUMENT,
  CK_OVERFLOW,
  CK_BUFFER_TOO_SMALL,
  CK_INTERNAL
} ck_status;

typedef enum ck_family { CK_FAMILY_L, CK_FAMILY_LSTAR, CK_FAMILY_S, CK_FAMILY_SSTAR } ck_family;

typedef enum ck_crossing_kind {
  CK_CROSSING_REINEKE,
  CK_CROSSING_DUAL_REINEKE,
  CK_CROSSING_KASHIWARA
} ck_crossing_kind;

typedef enum ck_format { CK_FORMAT_JSON, CK_FORMAT_CSV, CK_FORMAT_DOT, CK_FORMAT_TEXT } ck_format;

typedef struct ck_word ck_word;
typedef struct ck_crystal ck_crystal;

typedef struct ck_suite_params {
  int max_n;
  int64_t max_lambda_sum;
  int64_t height;
  int samples;
  int64_t sample_max_entry;
  uint64_t seed;
  int threads; /* 0: all cores, capped by CRYSTAL_KIT_THREADS */
} ck_suite_params;

CK_API const char* ck_version(void);
CK_API const char* ck_status_name(ck_status status);
CK_API const char* ck_last_error(void);
CK_API void ck_free_string(char* s);

/* Comma-separated integers, e.g. "1,0,2". *len receives the count. */
CK_API ck_status ck_parse_ints(const char* csv, int64_t* out, size_t cap, size_t* len);
CK_API ck_status ck_parse_family(const char* name, ck_family* out);
CK_API ck_status ck_parse_crossing_kind(const char* name, ck_crossing_kind* out);

/* Reduced words for the longest element of S_n. */
CK_API ck_status ck_word_parse(int n, const char* csv, ck_word** out);
CK_API ck_status ck_word_create(int n, const int* letters, size_t len, ck_word** out);
CK_API void ck_word_free(ck_word* word);
CK_API int ck_word_rank(const ck_word* word);
CK_API size_t ck_word_length(const ck_word* word);
CK_API ck_status ck_word_letters(const ck_word* word, int* out, size_t cap);
CK_API ck_status ck_word_star(const ck_word* word, ck_word** out);
CK_API ck_status ck_word_opposite(const ck_word* word, ck_word** out);

/* Root order as JSON ([[2,3],...]) or text, one "(k,l)" per line. */
CK_API ck_status ck_roots(const ck_word* word, ck_format format, char** out);
/* DOT of the diagram oriented for letter a (dual != 0: the dual orientation). */
CK_API ck_status ck_diagram_dot(const ck_word* word, int a, int dual, char** out);
/* JSON array of crossings with their r and s vectors. */
CK_API ck_status ck_crossings(const ck_word* word, int a, ck_crossing_kind kind, char** out);
/* Inequality system as JSON or text. */
CK_API ck_status ck_inequalities(const ck_word* word, ck_family family, ck_format format,
                                 char** out);
/* Lattice points of the polytope, as JSON or CSV; *count receives the number. */
CK_API ck_status ck_points(const ck_word* word, ck_family family, const int64_t* lambda,
                           size_t lambda_len, ck_format format, char** out, size_t* count);

CK_API ck_status ck_crystal_create(const ck_word* word, ck_family family, const int64_t* lambda,
                                   size_t lambda_len, ck_crystal** out);
CK_API void ck_crystal_free(ck_crystal* crystal);
CK_API size_t ck_crystal_size(const ck_crystal* crystal);
/* JSON or DOT. */
CK_API ck_status ck_crystal_render(const ck_crystal* crystal, ck_format format, char** out);

/* Lusztig data (families L, Lstar) or string data (S, Sstar) re-expressed in
 * another word. x and out have the word length. */
CK_API ck_status ck_transition(ck_family family, const ck_word* from, const ck_word* to,
                               const int64_t* x, size_t len, int64_t* out);
/* Lusztig datum -> string datum (inverse = 0) or back (inverse != 0). */
CK_API ck_status ck_string_datum(const ck_word* word, const int64_t* x, size_t len, int inverse,
                                 int64_t* out);

CK_API ck_status ck_weyl_dim(int n, const int64_t* lambda, size_t lambda_len, uint64_t* out);

CK_API void ck_suite_params_default(ck_suite_params* params);
/* Number of suites; names by index. */
CK_API size_t ck_suite_count(void);
CK_API const char* ck_suite_name(size_t index);
/* Runs a suite. *passed is 1 when every check passed. Either report pointer
 * may be NULL. */
CK_API ck_status ck_verify(const char* suite, const ck_suite_params* params, int* passed,
                           char** report_text, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* CRYSTALKIT_CRYSTALKIT_H */
