/*
 * Copyright 2026 The semilin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* The public header must compile as plain C. */

#include <stdio.h>
#include <string.h>

#include "semilin/semilin.h"

int main(void) {
  semilin_field* f = NULL;
  char* count = NULL;
  int ok = 1;

  if (semilin_field_create("2^2", &f) != SEMILIN_OK) {
    fprintf(stderr, "field: %s\n", semilin_last_error());
    return 1;
  }
  ok = ok && semilin_field_order(f) == 4;
  semilin_field_destroy(f);

  if (semilin_theorem_count(2, 1, 1, 4, &count) != SEMILIN_OK) return 1;
  ok = ok && strcmp(count, "60") == 0;
  semilin_string_free(count);

  puts(ok ? "ok" : "FAILED");
  return ok ? 0 : 1;
}
