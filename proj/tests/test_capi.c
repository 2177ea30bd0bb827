/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
/* Exercises the shared library from plain C. */
#include <stdio.h>
#include <string.h>

#include "crystalkit/crystalkit.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  ck_word* w = NULL;
  ck_word* bad = NULL;
  ck_word* w212 = NULL;
  ck_crystal* c = NULL;
  char* s = NULL;
  int letters[3];
  int64_t lambda[2] = {1, 1};
  int64_t x[3] = {1, 1, 0};
  int64_t y[3];
  size_t count = 0;
  uint64_t dim = 0;
  int passed = 0;
  ck_suite_params params;

  EXPECT(strlen(ck_version()) > 0);
  EXPECT(strcmp(ck_status_name(CK_NOT_REDUCED), "NotReduced") == 0);

  EXPECT(ck_word_parse(3, "1,1,2", &bad) == CK_NOT_REDUCED);
  EXPECT(bad == NULL);
  EXPECT(strstr(ck_last_error(), "NotReduced") != NULL);
  EXPECT(ck_word_parse(3, "1,2", &bad) == CK_BAD_LENGTH);
  EXPECT(ck_word_parse(3, "1,3,1", &bad) == CK_BAD_LETTER);

  EXPECT(ck_word_parse(3, "1,2,1", &w) == CK_OK);
  EXPECT(ck_word_rank(w) == 3);
  EXPECT(ck_word_length(w) == 3);
  EXPECT(ck_word_letters(w, letters, 3) == CK_OK);
  EXPECT(letters[0] == 1 && letters[1] == 2 && letters[2] == 1);
  EXPECT(ck_word_letters(w, letters, 2) == CK_BUFFER_TOO_SMALL);

  EXPECT(ck_roots(w, CK_FORMAT_JSON, &s) == CK_OK);
  EXPECT(strstr(s, "[1,2]") != NULL);
  ck_free_string(s);

  EXPECT(ck_points(w, CK_FAMILY_SSTAR, lambda, 2, CK_FORMAT_CSV, &s, &count) == CK_OK);
  EXPECT(count == 8);
  ck_free_string(s);
  EXPECT(ck_points(w, CK_FAMILY_SSTAR, lambda, 3, CK_FORMAT_CSV, &s, &count) ==
         CK_DIMENSION_MISMATCH);

  EXPECT(ck_crystal_create(w, CK_FAMILY_L, lambda, 2, &c) == CK_OK);
  EXPECT(ck_crystal_size(c) == 8);
  EXPECT(ck_crystal_render(c, CK_FORMAT_DOT, &s) == CK_OK);
  EXPECT(strstr(s, "digraph") != NULL);
  ck_free_string(s);
  ck_crystal_free(c);

  EXPECT(ck_word_star(w, &w212) == CK_OK);
  EXPECT(ck_transition(CK_FAMILY_S, w, w212, x, 3, y) == CK_OK);
  EXPECT(y[0] == 0 && y[1] == 1 && y[2] == 1);
  EXPECT(ck_string_datum(w, x, 3, 0, y) == CK_OK);
  EXPECT(y[0] == 2 && y[1] == 1 && y[2] == 0);

  EXPECT(ck_weyl_dim(3, lambda, 2, &dim) == CK_OK);
  EXPECT(dim == 8);

  EXPECT(ck_suite_count() == 8);
  EXPECT(strcmp(ck_suite_name(0), "paper-example") == 0);
  ck_suite_params_default(&params);
  EXPECT(ck_verify("paper-example", &params, &passed, NULL, NULL) == CK_OK);
  EXPECT(passed == 1);
  EXPECT(ck_verify("nope", &params, &passed, NULL, NULL) == CK_UNKNOWN_SUITE);

  ck_word_free(w212);
  ck_word_free(w);
  ck_word_free(NULL);
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  return failures ? 1 : 0;
}
