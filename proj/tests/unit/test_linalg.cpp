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

#include <doctest.h>

#include <random>
#include <set>

#include "semilin/linalg.hpp"

using namespace semilin;

namespace {

Matrix mat(const FieldPtr& f, std::size_t rows, std::size_t cols, std::vector<Code> e) {
  return Matrix(f, rows, cols, std::move(e));
}

// Every rows x cols matrix over f, by code.
template <class Fn>
void for_all_matrices(const FieldPtr& f, std::size_t rows, std::size_t cols, Fn&& fn) {
  const std::size_t n = rows * cols;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= f->order();
  std::vector<Code> e(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (auto& c : e) {
      c = static_cast<Code>(rest % f->order());
      rest /= f->order();
    }
    fn(Matrix(f, rows, cols, e));
  }
}

// Size of the column space, counted by enumerating all combinations.
std::size_t column_space_size(const Matrix& a) {
  const auto& f = *a.field();
  std::uint64_t combos = 1;
  for (std::size_t j = 0; j < a.cols(); ++j) combos *= f.order();
  std::set<Vector> image;
  Vector c(a.cols());
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::uint64_t rest = code;
    for (auto& x : c) {
      x = static_cast<Code>(rest % f.order());
      rest /= f.order();
    }
    image.insert(mat_apply(a, c));
  }
  return image.size();
}

}  // namespace

TEST_CASE("mat_mul and map_entries examples") {
  auto f2 = Field::make(2, 1);
  const Matrix a = mat(f2, 2, 2, {0, 1, 0, 0});
  CHECK(mat_mul(Matrix::identity(f2, 2), a) == a);
  CHECK(mat_mul(a, a).is_zero());

  auto f4 = Field::make(2, 2);
  CHECK(map_entries(mat(f4, 1, 1, {2}), Automorphism{1}) == mat(f4, 1, 1, {3}));

  CHECK_THROWS_AS(mat_mul(a, Matrix(f2, 3, 1)), InvalidArgument);
  CHECK_THROWS_AS(mat_apply(a, Vector{1}), InvalidArgument);
  CHECK_THROWS_AS(mat_mul(a, Matrix::identity(f4, 2)), InvalidArgument);
  CHECK_THROWS_AS(mat(f2, 2, 2, {0, 1, 0}), InvalidArgument);
  CHECK_THROWS_AS(mat(f2, 1, 1, {2}), InvalidArgument);
}

TEST_CASE("rank examples") {
  auto f2 = Field::make(2, 1);
  CHECK(rank(Matrix(f2, 3, 2)) == 0);
  CHECK(rank(Matrix::identity(f2, 3)) == 3);
  CHECK(rank(mat(f2, 2, 2, {1, 1, 1, 1})) == 1);
}

TEST_CASE("rref examples") {
  auto f2 = Field::make(2, 1);
  const auto id = rref(Matrix::identity(f2, 3));
  CHECK(id.reduced == Matrix::identity(f2, 3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  const auto zero = rref(Matrix(f2, 2, 3));
  CHECK(zero.reduced == Matrix(f2, 2, 3));
  CHECK(zero.pivots.empty());

  const auto ones = rref(mat(f2, 2, 2, {1, 1, 1, 1}));
  CHECK(ones.reduced == mat(f2, 2, 2, {1, 1, 0, 0}));
  CHECK(ones.pivots == std::vector<std::size_t>{0});

  auto f5 = Field::make(5, 1);
  const auto r = rref(mat(f5, 2, 3, {0, 2, 4, 3, 1, 0}));
  CHECK(r.reduced == mat(f5, 2, 3, {1, 0, 1, 0, 1, 2}));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("kernel and inverse examples") {
  auto f2 = Field::make(2, 1);
  CHECK(kernel_basis(Matrix::identity(f2, 2)).empty());
  CHECK(kernel_basis(mat(f2, 2, 2, {0, 1, 0, 0})) == std::vector<Vector>{{1, 0}});

  auto f3 = Field::make(3, 1);
  const Matrix d = mat(f3, 2, 2, {2, 0, 0, 1});
  CHECK(mat_inverse(d) == d);
  CHECK_THROWS_AS(mat_inverse(mat(f3, 2, 2, {1, 2, 2, 1})), DomainError);
  CHECK_THROWS_AS(mat_inverse(Matrix(f3, 2, 3)), DomainError);
}

TEST_CASE("span_dim examples") {
  auto f2 = Field::make(2, 1);
  CHECK(span_dim(*f2, std::vector<Vector>{}) == 0);
  CHECK(span_dim(*f2, std::vector<Vector>{{1, 0}, {0, 0}}) == 1);
  CHECK(span_dim(*f2, std::vector<Vector>{{1, 0}, {0, 1}, {1, 1}}) == 2);
  CHECK_THROWS_AS(span_dim(*f2, std::vector<Vector>{{1, 0}, {1}}), InvalidArgument);
  CHECK(in_span(*f2, std::vector<Vector>{{1, 0}, {0, 1}}, Vector{1, 1}));
  CHECK_FALSE(in_span(*f2, std::vector<Vector>{{1, 1}}, Vector{1, 0}));
}

TEST_CASE("rank invariants hold exhaustively at tiny sizes") {
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = Field::make(p, d);
    for (std::size_t rows = 1; rows <= 3; ++rows) {
      for (std::size_t cols = 1; cols <= 3; ++cols) {
        if (rows * cols > 6 && f->order() > 2) continue;  // keeps q=3,4 to 3^6, 4^6 maps
        for_all_matrices(f, rows, cols, [&](const Matrix& a) {
          const std::size_t r = rank(a);
          CHECK(r == rank(transpose(a)));
          for (unsigned i = 0; i < d; ++i) CHECK(rank(map_entries(a, Automorphism{i})) == r);
          const auto e = rref(a);
          CHECK(e.pivots.size() == r);
          CHECK(rref(e.reduced).reduced == e.reduced);
          CHECK(kernel_basis(a).size() + r == cols);
          for (const auto& v : kernel_basis(a)) CHECK(mat_apply(a, v) == Vector(rows, 0));
          // q^rank elements in the column space.
          std::size_t expected = 1;
          for (std::size_t k = 0; k < r; ++k) expected *= f->order();
          CHECK(column_space_size(a) == expected);
        });
      }
    }
  }
}

TEST_CASE("rref has the documented normal form on random matrices") {
  std::mt19937_64 rng(7);
  for (auto spec : {"5^1", "3^2", "2^3", "7^1"}) {
    auto f = Field::parse(spec);
    std::uniform_int_distribution<Code> digit(0, f->order() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t rows = 1 + trial % 4;
      const std::size_t cols = 1 + (trial / 4) % 5;
      std::vector<Code> e(rows * cols);
      for (auto& c : e) c = digit(rng) * (rng() % 3 != 0);  // some zeros
      const Matrix a(f, rows, cols, e);
      const auto [r, pivots] = rref(a);
      for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (k > 0) CHECK(pivots[k] > pivots[k - 1]);
        for (std::size_t j = 0; j < pivots[k]; ++j) CHECK(r(k, j) == 0);
        for (std::size_t i = 0; i < rows; ++i) CHECK(r(i, pivots[k]) == (i == k ? 1u : 0u));
      }
      for (std::size_t i = pivots.size(); i < rows; ++i) CHECK(r.row(i) == Vector(cols, 0));
      // Same row space.
      auto both = a.row_vectors();
      for (std::size_t i = 0; i < pivots.size(); ++i) both.push_back(r.row(i));
      CHECK(span_dim(*f, both) == pivots.size());

      if (rows == cols && pivots.size() == rows) {
        CHECK(mat_mul(a, mat_inverse(a)) == Matrix::identity(f, rows));
        CHECK(mat_mul(mat_inverse(a), a) == Matrix::identity(f, rows));
      }
    }
  }
}
