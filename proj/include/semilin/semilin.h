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

/*
 * C interface to libsemilin.
 *
 * Objects are opaque handles created by *_create / *_parse functions and
 * released with the matching *_destroy. Every fallible call returns a
 * semilin_status; on failure the message is available from
 * semilin_last_error() on the same thread until the next call. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with semilin_string_free().
 *
 * Matrices cross the boundary as row-major arrays of element codes. For a
 * map handle, column j is F(e_j). For a vector tuple, row i is x_{i+1}.
 */

#ifndef SEMILIN_H
#define SEMILIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SEMILIN_BUILDING)
#    define SEMILIN_API __declspec(dllexport)
#  else
#    define SEMILIN_API __declspec(dllimport)
#  endif
#else
#  define SEMILIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum semilin_status {
  SEMILIN_OK = 0,
  SEMILIN_ERR_INVALID_ARGUMENT = 1,
  SEMILIN_ERR_PARSE = 2,
  SEMILIN_ERR_BUDGET = 3,
  SEMILIN_ERR_DOMAIN = 4,
  SEMILIN_ERR_INTERNAL = 5
} semilin_status;

typedef enum semilin_op {
  SEMILIN_ADD = 0,
  SEMILIN_SUB = 1,
  SEMILIN_MUL = 2,
  SEMILIN_DIV = 3
} semilin_op;

typedef struct semilin_field semilin_field;
typedef struct semilin_map semilin_map;

SEMILIN_API const char* semilin_version(void);
SEMILIN_API const char* semilin_last_error(void);
SEMILIN_API void semilin_string_free(char* s);

/* Fields. `spec` is "p^d" or "p^d/c_0,...,c_d". */
SEMILIN_API semilin_status semilin_field_create(const char* spec, semilin_field** out);
SEMILIN_API void semilin_field_destroy(semilin_field* field);
SEMILIN_API uint32_t semilin_field_order(const semilin_field* field);
SEMILIN_API unsigned semilin_field_characteristic(const semilin_field* field);
SEMILIN_API unsigned semilin_field_degree(const semilin_field* field);
SEMILIN_API semilin_status semilin_field_spec(const semilin_field* field, char** out);
SEMILIN_API semilin_status semilin_field_info_json(const semilin_field* field, char** out);
SEMILIN_API semilin_status semilin_field_op(const semilin_field* field, semilin_op op,
                                            uint32_t a, uint32_t b, uint32_t* out);
SEMILIN_API semilin_status semilin_field_inv(const semilin_field* field, uint32_t a,
                                             uint32_t* out);
SEMILIN_API semilin_status semilin_field_pow(const semilin_field* field, uint32_t a,
                                             uint64_t n, uint32_t* out);
SEMILIN_API semilin_status semilin_field_frobenius(const semilin_field* field, uint32_t a,
                                                   unsigned exponent, uint32_t* out);

/* Semilinear maps. `entries` holds g*g codes. */
SEMILIN_API semilin_status semilin_map_create(const semilin_field* field, size_t g,
                                              unsigned tau, const uint32_t* entries,
                                              semilin_map** out);
/* One block in the text format, optional "tau <i>" line. */
SEMILIN_API semilin_status semilin_map_parse(const char* text, semilin_map** out);
SEMILIN_API void semilin_map_destroy(semilin_map* map);
SEMILIN_API size_t semilin_map_dimension(const semilin_map* map);
SEMILIN_API unsigned semilin_map_tau(const semilin_map* map);
/* Copies g*g codes into `out`, which must hold `len` >= g*g entries. */
SEMILIN_API semilin_status semilin_map_entries(const semilin_map* map, uint32_t* out,
                                               size_t len);
SEMILIN_API semilin_status semilin_map_to_text(const semilin_map* map, char** out);
SEMILIN_API semilin_status semilin_map_apply(const semilin_map* map, const uint32_t* v,
                                             uint32_t* out);
SEMILIN_API semilin_status semilin_map_compose(const semilin_map* f, const semilin_map* g,
                                               semilin_map** out);
SEMILIN_API semilin_status semilin_map_profile(const semilin_map* map, size_t* r, size_t* s);
/* mu(F) into `tuple_out` (g*g codes, row i = x_{i+1}). */
SEMILIN_API semilin_status semilin_map_mu(const semilin_map* map, uint32_t* tuple_out);
/* nu(t) for a tuple in some X(r,s); SEMILIN_ERR_DOMAIN otherwise. */
SEMILIN_API semilin_status semilin_map_nu(const semilin_field* field, size_t g, unsigned tau,
                                          const uint32_t* tuple, semilin_map** out);

/* Counting. Counts are returned as decimal strings. */
SEMILIN_API semilin_status semilin_theorem_count(size_t g, size_t r, size_t s, uint64_t q,
                                                 char** out);
SEMILIN_API semilin_status semilin_staged_count(size_t g, size_t r, size_t s, uint64_t q,
                                                char** out);

/* JSON reports, one per CLI subcommand. `*all_pass` (optional) receives 1
 * when every check in the report holds. Pass r = s = -1 to `count` for the
 * full table. */
SEMILIN_API semilin_status semilin_count_json(const char* field_spec, size_t g, long r, long s,
                                              char** out, int* all_pass);
SEMILIN_API semilin_status semilin_verify_json(const char* field_spec, size_t g, unsigned tau,
                                               uint64_t budget, unsigned threads, char** out,
                                               int* all_pass);
SEMILIN_API semilin_status semilin_roundtrip_json(const char* field_spec, size_t g,
                                                  unsigned tau, uint64_t budget,
                                                  unsigned threads, uint64_t samples,
                                                  uint64_t seed, char** out, int* all_pass);
SEMILIN_API semilin_status semilin_adapt_json(const char* input_text, char** out);
SEMILIN_API semilin_status semilin_mu_json(const char* map_text, char** out);
/* `tau` < 0 takes the exponent from a "tau" line in the input, else 0. */
SEMILIN_API semilin_status semilin_nu_json(const char* tuple_text, int tau, char** out);
SEMILIN_API semilin_status semilin_field_info_json_spec(const char* field_spec, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SEMILIN_H */
