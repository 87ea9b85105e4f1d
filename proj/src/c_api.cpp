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

#include "semilin/semilin.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "semilin/report.hpp"
#include "semilin/text_format.hpp"

struct semilin_field {
  semilin::FieldPtr ptr;
};

struct semilin_map {
  semilin::SemilinearMap map;
};

namespace {

using namespace semilin;

thread_local std::string last_error;

template <class Fn>
semilin_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return SEMILIN_OK;
  } catch (const ParseError& e) {
    last_error = e.what();
    return SEMILIN_ERR_PARSE;
  } catch (const BudgetExceeded& e) {
    last_error = e.what();
    return SEMILIN_ERR_BUDGET;
  } catch (const DomainError& e) {
    last_error = e.what();
    return SEMILIN_ERR_DOMAIN;
  } catch (const InvalidArgument& e) {
    last_error = e.what();
    return SEMILIN_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SEMILIN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SEMILIN_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string("null ") + what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const std::string& s, char** out) {
  require(out, "output pointer");
  *out = copy_string(s);
}

std::vector<Code> codes(const uint32_t* data, std::size_t n) {
  return std::vector<Code>(data, data + n);
}

VectorTuple tuple_from(const uint32_t* data, std::size_t g) {
  VectorTuple t(g);
  for (std::size_t i = 0; i < g; ++i) t[i].assign(data + i * g, data + (i + 1) * g);
  return t;
}

}  // namespace

extern "C" {

const char* semilin_version(void) { return "1.0.0"; }

const char* semilin_last_error(void) { return last_error.c_str(); }

void semilin_string_free(char* s) { std::free(s); }

semilin_status semilin_field_create(const char* spec, semilin_field** out) {
  return guarded([&] {
    require(spec, "field spec");
    require(out, "output pointer");
    *out = new semilin_field{Field::parse(spec)};
  });
}

void semilin_field_destroy(semilin_field* field) { delete field; }

uint32_t semilin_field_order(const semilin_field* field) {
  return field ? field->ptr->order() : 0;
}

unsigned semilin_field_characteristic(const semilin_field* field) {
  return field ? field->ptr->characteristic() : 0;
}

unsigned semilin_field_degree(const semilin_field* field) {
  return field ? field->ptr->degree() : 0;
}

semilin_status semilin_field_spec(const semilin_field* field, char** out) {
  return guarded([&] {
    require(field, "field");
    emit(field->ptr->spec(), out);
  });
}

semilin_status semilin_field_info_json(const semilin_field* field, char** out) {
  return guarded([&] {
    require(field, "field");
    emit(report::field_info(*field->ptr), out);
  });
}

semilin_status semilin_field_op(const semilin_field* field, semilin_op op, uint32_t a,
                                uint32_t b, uint32_t* out) {
  return guarded([&] {
    require(field, "field");
    require(out, "output pointer");
    const Element x(field->ptr, a);
    const Element y(field->ptr, b);
    switch (op) {
      case SEMILIN_ADD: *out = (x + y).code(); break;
      case SEMILIN_SUB: *out = (x - y).code(); break;
      case SEMILIN_MUL: *out = (x * y).code(); break;
      case SEMILIN_DIV: *out = (x / y).code(); break;
      default: throw InvalidArgument("unknown field operation");
    }
  });
}

semilin_status semilin_field_inv(const semilin_field* field, uint32_t a, uint32_t* out) {
  return guarded([&] {
    require(field, "field");
    require(out, "output pointer");
    *out = Element(field->ptr, a).inv().code();
  });
}

semilin_status semilin_field_pow(const semilin_field* field, uint32_t a, uint64_t n,
                                 uint32_t* out) {
  return guarded([&] {
    require(field, "field");
    require(out, "output pointer");
    *out = Element(field->ptr, a).pow(n).code();
  });
}

semilin_status semilin_field_frobenius(const semilin_field* field, uint32_t a,
                                       unsigned exponent, uint32_t* out) {
  return guarded([&] {
    require(field, "field");
    require(out, "output pointer");
    *out = Element(field->ptr, a).frobenius(Automorphism{exponent}).code();
  });
}

semilin_status semilin_map_create(const semilin_field* field, size_t g, unsigned tau,
                                  const uint32_t* entries, semilin_map** out) {
  return guarded([&] {
    require(field, "field");
    require(out, "output pointer");
    if (g != 0) require(entries, "entries");
    *out = new semilin_map{
        SemilinearMap(Matrix(field->ptr, g, g, codes(entries, g * g)), Automorphism{tau})};
  });
}

semilin_status semilin_map_parse(const char* text, semilin_map** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    *out = new semilin_map{text::parse_map(text)};
  });
}

void semilin_map_destroy(semilin_map* map) { delete map; }

size_t semilin_map_dimension(const semilin_map* map) { return map ? map->map.dimension() : 0; }

unsigned semilin_map_tau(const semilin_map* map) { return map ? map->map.tau().exponent : 0; }

semilin_status semilin_map_entries(const semilin_map* map, uint32_t* out, size_t len) {
  return guarded([&] {
    require(map, "map");
    const auto entries = map->map.matrix().entries();
    if (len < entries.size()) throw InvalidArgument("output buffer too small");
    if (!entries.empty()) require(out, "output pointer");
    std::copy(entries.begin(), entries.end(), out);
  });
}

semilin_status semilin_map_to_text(const semilin_map* map, char** out) {
  return guarded([&] {
    require(map, "map");
    emit(text::format_map(map->map), out);
  });
}

semilin_status semilin_map_apply(const semilin_map* map, const uint32_t* v, uint32_t* out) {
  return guarded([&] {
    require(map, "map");
    const std::size_t g = map->map.dimension();
    if (g == 0) return;
    require(v, "vector");
    require(out, "output pointer");
    Vector x(v, v + g);
    for (Code c : x) map->map.field()->check(c);
    const Vector y = semilin::apply(map->map, x);
    std::copy(y.begin(), y.end(), out);
  });
}

semilin_status semilin_map_compose(const semilin_map* f, const semilin_map* g,
                                   semilin_map** out) {
  return guarded([&] {
    require(f, "map");
    require(g, "map");
    require(out, "output pointer");
    *out = new semilin_map{compose(f->map, g->map)};
  });
}

semilin_status semilin_map_profile(const semilin_map* map, size_t* r, size_t* s) {
  return guarded([&] {
    require(map, "map");
    require(r, "output pointer");
    require(s, "output pointer");
    const RankProfile p = profile(map->map);
    *r = p.r;
    *s = p.s;
  });
}

semilin_status semilin_map_mu(const semilin_map* map, uint32_t* tuple_out) {
  return guarded([&] {
    require(map, "map");
    const VectorTuple t = mu(map->map);
    const std::size_t g = t.size();
    if (g != 0) require(tuple_out, "output pointer");
    for (std::size_t i = 0; i < g; ++i) std::copy(t[i].begin(), t[i].end(), tuple_out + i * g);
  });
}

semilin_status semilin_map_nu(const semilin_field* field, size_t g, unsigned tau,
                              const uint32_t* tuple, semilin_map** out) {
  return guarded([&] {
    require(field, "field");
    require(out, "output pointer");
    if (g != 0) require(tuple, "tuple");
    VectorTuple t = tuple_from(tuple, g);
    for (const auto& x : t) {
      for (Code c : x) field->ptr->check(c);
    }
    *out = new semilin_map{nu(field->ptr, t, Automorphism{tau})};
  });
}

semilin_status semilin_theorem_count(size_t g, size_t r, size_t s, uint64_t q, char** out) {
  return guarded([&] { emit(theorem_count(g, r, s, q).str(), out); });
}

semilin_status semilin_staged_count(size_t g, size_t r, size_t s, uint64_t q, char** out) {
  return guarded([&] { emit(staged_count(g, r, s, q).str(), out); });
}

semilin_status semilin_count_json(const char* field_spec, size_t g, long r, long s,
                                  char** out, int* all_pass) {
  return guarded([&] {
    require(field_spec, "field spec");
    std::optional<RankProfile> only;
    if (r >= 0 || s >= 0) {
      if (r < 0 || s < 0 || static_cast<std::size_t>(r) > g || s > r) {
        throw InvalidArgument("profile (r,s) out of range");
      }
      only = RankProfile{static_cast<std::size_t>(r), static_cast<std::size_t>(s)};
    }
    const VerifyReport rep = count_report(Field::parse(field_spec), g);
    emit(report::counts(rep, only), out);
    if (all_pass) *all_pass = rep.ok() ? 1 : 0;
  });
}

semilin_status semilin_verify_json(const char* field_spec, size_t g, unsigned tau,
                                   uint64_t budget, unsigned threads, char** out, int* all_pass) {
  return guarded([&] {
    require(field_spec, "field spec");
    const VerifyReport rep =
        verify(Field::parse(field_spec), g, Automorphism{tau}, {budget, threads});
    emit(report::counts(rep), out);
    if (all_pass) *all_pass = rep.ok() ? 1 : 0;
  });
}

semilin_status semilin_roundtrip_json(const char* field_spec, size_t g, unsigned tau,
                                      uint64_t budget, unsigned threads, uint64_t samples,
                                      uint64_t seed, char** out, int* all_pass) {
  return guarded([&] {
    require(field_spec, "field spec");
    RoundtripOptions options;
    options.budget = budget;
    options.threads = threads;
    options.samples = samples;
    options.seed = seed;
    const RoundtripReport rep = roundtrip(Field::parse(field_spec), g, Automorphism{tau}, options);
    emit(report::roundtrip(rep), out);
    if (all_pass) *all_pass = rep.passed() ? 1 : 0;
  });
}

semilin_status semilin_adapt_json(const char* input_text, char** out) {
  return guarded([&] {
    require(input_text, "input");
    const text::AdaptInput in = text::parse_adapt(input_text);
    emit(report::adapt(in.flag, adapt_to_flag(in.basis, in.flag)), out);
  });
}

semilin_status semilin_mu_json(const char* map_text, char** out) {
  return guarded([&] {
    require(map_text, "input");
    const SemilinearMap f = text::parse_map(map_text);
    emit(report::mu(f, mu(f)), out);
  });
}

semilin_status semilin_nu_json(const char* tuple_text, int tau, char** out) {
  return guarded([&] {
    require(tuple_text, "input");
    const text::TupleInput in = text::parse_tuple(tuple_text);
    const unsigned exponent = tau >= 0 ? static_cast<unsigned>(tau) : in.tau.value_or(0);
    emit(report::nu(in.tuple, nu(in.field, in.tuple, Automorphism{exponent})), out);
  });
}

semilin_status semilin_field_info_json_spec(const char* field_spec, char** out) {
  return guarded([&] {
    require(field_spec, "field spec");
    emit(report::field_info(*Field::parse(field_spec)), out);
  });
}

}  // extern "C"
