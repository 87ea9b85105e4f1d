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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <string>
#include <vector>

#include "semilin/semilin.h"

namespace {

struct FieldDeleter {
  void operator()(semilin_field* f) const { semilin_field_destroy(f); }
};
struct MapDeleter {
  void operator()(semilin_map* m) const { semilin_map_destroy(m); }
};
using FieldHandle = std::unique_ptr<semilin_field, FieldDeleter>;
using MapHandle = std::unique_ptr<semilin_map, MapDeleter>;

FieldHandle field(const char* spec) {
  semilin_field* f = nullptr;
  REQUIRE(semilin_field_create(spec, &f) == SEMILIN_OK);
  return FieldHandle(f);
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  semilin_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::string(semilin_version()) == "1.0.0");
  semilin_field* f = nullptr;
  CHECK(semilin_field_create("6^1", &f) == SEMILIN_ERR_INVALID_ARGUMENT);
  CHECK(f == nullptr);
  CHECK(std::string(semilin_last_error()).find("prime") != std::string::npos);
  CHECK(semilin_field_create("x", &f) == SEMILIN_ERR_PARSE);
  CHECK(semilin_field_create(nullptr, &f) == SEMILIN_ERR_INVALID_ARGUMENT);
  CHECK(semilin_field_create("2^1", nullptr) == SEMILIN_ERR_INVALID_ARGUMENT);
  auto ok = field("2^1");
  CHECK(std::string(semilin_last_error()).empty());
  semilin_field_destroy(nullptr);
  semilin_map_destroy(nullptr);
  semilin_string_free(nullptr);
}

TEST_CASE("field arithmetic") {
  auto f4 = field("2^2");
  CHECK(semilin_field_order(f4.get()) == 4);
  CHECK(semilin_field_characteristic(f4.get()) == 2);
  CHECK(semilin_field_degree(f4.get()) == 2);
  char* spec = nullptr;
  REQUIRE(semilin_field_spec(f4.get(), &spec) == SEMILIN_OK);
  CHECK(take(spec) == "2^2/1,1,1");

  uint32_t out = 0;
  CHECK(semilin_field_op(f4.get(), SEMILIN_MUL, 2, 2, &out) == SEMILIN_OK);
  CHECK(out == 3);
  CHECK(semilin_field_op(f4.get(), SEMILIN_ADD, 3, 3, &out) == SEMILIN_OK);
  CHECK(out == 0);
  CHECK(semilin_field_frobenius(f4.get(), 2, 1, &out) == SEMILIN_OK);
  CHECK(out == 3);
  CHECK(semilin_field_frobenius(f4.get(), 2, 2, &out) == SEMILIN_ERR_INVALID_ARGUMENT);
  CHECK(semilin_field_op(f4.get(), SEMILIN_DIV, 1, 0, &out) == SEMILIN_ERR_DOMAIN);
  CHECK(semilin_field_op(f4.get(), SEMILIN_ADD, 4, 0, &out) == SEMILIN_ERR_INVALID_ARGUMENT);
  CHECK(semilin_field_op(f4.get(), static_cast<semilin_op>(9), 1, 1, &out) ==
        SEMILIN_ERR_INVALID_ARGUMENT);

  auto f5 = field("5^1");
  CHECK(semilin_field_inv(f5.get(), 2, &out) == SEMILIN_OK);
  CHECK(out == 3);
  CHECK(semilin_field_inv(f5.get(), 0, &out) == SEMILIN_ERR_DOMAIN);
  CHECK(semilin_field_pow(f5.get(), 2, 4, &out) == SEMILIN_OK);
  CHECK(out == 1);

  char* info = nullptr;
  REQUIRE(semilin_field_info_json(f4.get(), &info) == SEMILIN_OK);
  CHECK(take(info).find("\"automorphisms\"") != std::string::npos);
}

TEST_CASE("maps: create, apply, compose, profile") {
  auto f2 = field("2^1");
  const uint32_t nil[] = {0, 1, 0, 0};
  semilin_map* raw = nullptr;
  REQUIRE(semilin_map_create(f2.get(), 2, 0, nil, &raw) == SEMILIN_OK);
  MapHandle a(raw);
  CHECK(semilin_map_dimension(a.get()) == 2);
  CHECK(semilin_map_tau(a.get()) == 0);

  size_t r = 9, s = 9;
  REQUIRE(semilin_map_profile(a.get(), &r, &s) == SEMILIN_OK);
  CHECK(r == 1);
  CHECK(s == 0);

  const uint32_t e2[] = {0, 1};
  uint32_t img[2] = {9, 9};
  REQUIRE(semilin_map_apply(a.get(), e2, img) == SEMILIN_OK);
  CHECK(img[0] == 1);
  CHECK(img[1] == 0);
  const uint32_t bad[] = {0, 2};
  CHECK(semilin_map_apply(a.get(), bad, img) == SEMILIN_ERR_INVALID_ARGUMENT);

  semilin_map* sq = nullptr;
  REQUIRE(semilin_map_compose(a.get(), a.get(), &sq) == SEMILIN_OK);
  MapHandle square(sq);
  uint32_t entries[4] = {9, 9, 9, 9};
  REQUIRE(semilin_map_entries(square.get(), entries, 4) == SEMILIN_OK);
  for (uint32_t c : entries) CHECK(c == 0);
  CHECK(semilin_map_entries(square.get(), entries, 3) == SEMILIN_ERR_INVALID_ARGUMENT);

  char* text = nullptr;
  REQUIRE(semilin_map_to_text(a.get(), &text) == SEMILIN_OK);
  const std::string t = take(text);
  CHECK(t == "tau 0\n2 2 2^1/0,1\n0 1\n0 0\n");
  semilin_map* parsed = nullptr;
  REQUIRE(semilin_map_parse(t.c_str(), &parsed) == SEMILIN_OK);
  MapHandle p(parsed);
  REQUIRE(semilin_map_entries(p.get(), entries, 4) == SEMILIN_OK);
  CHECK(std::vector<uint32_t>(entries, entries + 4) == std::vector<uint32_t>(nil, nil + 4));
  CHECK(semilin_map_parse("2 2 2^1\n0 1\n", &parsed) == SEMILIN_ERR_PARSE);

  const uint32_t wrong[] = {0, 1, 0, 2};
  CHECK(semilin_map_create(f2.get(), 2, 0, wrong, &raw) == SEMILIN_ERR_INVALID_ARGUMENT);
  CHECK(semilin_map_create(f2.get(), 2, 1, nil, &raw) == SEMILIN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("mu and nu") {
  auto f2 = field("2^1");
  const uint32_t nil[] = {0, 1, 0, 0};
  semilin_map* raw = nullptr;
  REQUIRE(semilin_map_create(f2.get(), 2, 0, nil, &raw) == SEMILIN_OK);
  MapHandle a(raw);
  uint32_t tuple[4] = {9, 9, 9, 9};
  REQUIRE(semilin_map_mu(a.get(), tuple) == SEMILIN_OK);
  CHECK(std::vector<uint32_t>(tuple, tuple + 4) == std::vector<uint32_t>{1, 0, 0, 0});

  REQUIRE(semilin_map_nu(f2.get(), 2, 0, tuple, &raw) == SEMILIN_OK);
  MapHandle back(raw);
  uint32_t entries[4];
  REQUIRE(semilin_map_entries(back.get(), entries, 4) == SEMILIN_OK);
  CHECK(std::vector<uint32_t>(entries, entries + 4) == std::vector<uint32_t>(nil, nil + 4));

  auto f4 = field("2^2");
  const uint32_t x[] = {2};
  REQUIRE(semilin_map_nu(f4.get(), 1, 1, x, &raw) == SEMILIN_OK);
  MapHandle fx(raw);
  CHECK(semilin_map_tau(fx.get()) == 1);
  REQUIRE(semilin_map_mu(fx.get(), tuple) == SEMILIN_OK);
  CHECK(tuple[0] == 2);
}

TEST_CASE("counts come back as decimal strings") {
  char* out = nullptr;
  REQUIRE(semilin_theorem_count(2, 2, 2, 2, &out) == SEMILIN_OK);
  CHECK(take(out) == "6");
  REQUIRE(semilin_staged_count(2, 1, 0, 2, &out) == SEMILIN_OK);
  CHECK(take(out) == "3");
  REQUIRE(semilin_theorem_count(12, 12, 12, 13, &out) == SEMILIN_OK);
  CHECK(take(out).size() > 150);
  CHECK(semilin_theorem_count(2, 1, 2, 2, &out) == SEMILIN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("JSON reports") {
  char* out = nullptr;
  int pass = -1;
  REQUIRE(semilin_count_json("2^1", 2, 2, 2, &out, &pass) == SEMILIN_OK);
  const std::string one = take(out);
  CHECK(pass == 1);
  CHECK(one.find("\"theorem\": \"6\"") != std::string::npos);
  CHECK(semilin_count_json("2^1", 2, 1, -1, &out, &pass) == SEMILIN_ERR_INVALID_ARGUMENT);

  REQUIRE(semilin_verify_json("2^2", 2, 1, 1u << 26, 2, &out, &pass) == SEMILIN_OK);
  CHECK(pass == 1);
  CHECK(take(out).find("\"enumerated\": \"180\"") != std::string::npos);
  CHECK(semilin_verify_json("2^1", 5, 0, 1000, 1, &out, &pass) == SEMILIN_ERR_BUDGET);

  REQUIRE(semilin_roundtrip_json("2^1", 2, 0, 1u << 26, 1, 10, 0, &out, &pass) == SEMILIN_OK);
  CHECK(pass == 1);
  CHECK(take(out).find("\"mode\": \"exhaustive\"") != std::string::npos);

  REQUIRE(semilin_adapt_json("basis standard\n1 2 2^1\n1 0\n", &out) == SEMILIN_OK);
  CHECK(take(out).find("\"pivot_sets\"") != std::string::npos);
  REQUIRE(semilin_mu_json("2 2 2^1\n0 1\n0 0\n", &out) == SEMILIN_OK);
  take(out);
  REQUIRE(semilin_nu_json("2 2 2^1\n1 0\n0 0\n", -1, &out) == SEMILIN_OK);
  take(out);
  CHECK(semilin_nu_json("2 2 2^1\n1 0\n", -1, &out) == SEMILIN_ERR_PARSE);
  REQUIRE(semilin_field_info_json_spec("3^2", &out) == SEMILIN_OK);
  CHECK(take(out).find("\"q\": 9") != std::string::npos);
}
