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

#include "semilin/semilinear.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace semilin {

SemilinearMap::SemilinearMap(Matrix matrix, Automorphism tau)
    : matrix_(std::move(matrix)), tau_(tau) {
  if (matrix_.rows() != matrix_.cols()) {
    throw InvalidArgument("semilinear map needs a square matrix");
  }
  matrix_.field()->check(tau_);
}

SemilinearMap SemilinearMap::identity(FieldPtr field, std::size_t g) {
  return {Matrix::identity(std::move(field), g), Automorphism{}};
}

SemilinearMap SemilinearMap::zero(FieldPtr field, std::size_t g, Automorphism tau) {
  return {Matrix(std::move(field), g, g), tau};
}

Vector apply(const SemilinearMap& f, const Vector& v) {
  return mat_apply(f.matrix(), map_entries(*f.field(), v, f.tau()));
}

SemilinearMap compose(const SemilinearMap& f, const SemilinearMap& g) {
  if (f.dimension() != g.dimension()) throw InvalidArgument("compose: dimension mismatch");
  const unsigned d = f.field()->degree();
  return {mat_mul(f.matrix(), map_entries(g.matrix(), f.tau())),
          Automorphism{(f.tau().exponent + g.tau().exponent) % d}};
}

SemilinearMap power(const SemilinearMap& f, std::size_t n) {
  SemilinearMap out = SemilinearMap::identity(f.field(), f.dimension());
  for (std::size_t i = 0; i < n; ++i) out = compose(f, out);
  return out;
}

std::size_t sl_rank(const SemilinearMap& f) { return rank(f.matrix()); }

std::size_t sl_inf_rank(const SemilinearMap& f) {
  return rank(power(f, f.dimension()).matrix());
}

RankProfile profile(const SemilinearMap& f) {
  std::vector<Code> scratch;
  return profile_of(*f.field(), f.matrix().entries(), f.dimension(), f.tau(), scratch);
}

std::vector<Vector> terminal_image(const SemilinearMap& f) {
  const Matrix fg = power(f, f.dimension()).matrix();
  return span_basis(f.field(), f.dimension(), transpose(fg).row_vectors());
}

std::vector<Vector> nil_part(const SemilinearMap& f) {
  // F^g(v) = M * sigma(v) with sigma = tau^g, so ker F^g = sigma^{-1}(ker M).
  const SemilinearMap fg = power(f, f.dimension());
  const unsigned d = f.field()->degree();
  const Automorphism undo{(d - fg.tau().exponent) % d};
  auto basis = kernel_basis(fg.matrix());
  for (auto& v : basis) v = map_entries(*f.field(), v, undo);
  return basis;
}

RankProfile profile_of(const Field& field, std::span<const Code> matrix, std::size_t g,
                       Automorphism tau, std::vector<Code>& scratch) {
  const std::size_t n = g * g;
  scratch.resize(3 * n);
  std::span<Code> work(scratch.data(), n);
  std::span<Code> current(scratch.data() + n, n);
  std::span<Code> next(scratch.data() + 2 * n, n);

  std::copy(matrix.begin(), matrix.end(), work.begin());
  const std::size_t r = detail::eliminate(field, work, g, g, false);
  if (r == 0 || r == g) return {r, r};

  // current = matrix of F^k; F^{k+1} = A * tau(F^k).
  std::copy(matrix.begin(), matrix.end(), current.begin());
  for (std::size_t k = 1; k < g; ++k) {
    for (std::size_t i = 0; i < n; ++i) current[i] = field.frobenius(current[i], tau);
    std::fill(next.begin(), next.end(), Code{0});
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t m = 0; m < g; ++m) {
        const Code a = matrix[i * g + m];
        if (a == 0) continue;
        for (std::size_t j = 0; j < g; ++j) {
          next[i * g + j] = field.add(next[i * g + j], field.mul(a, current[m * g + j]));
        }
      }
    }
    std::swap_ranges(current.begin(), current.end(), next.begin());
  }
  std::copy(current.begin(), current.end(), work.begin());
  return {r, detail::eliminate(field, work, g, g, false)};
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return 0;
    out *= base;
  }
  return out;
}

MapEnumerator::MapEnumerator(FieldPtr field, std::size_t g, Automorphism tau,
                             std::uint64_t budget)
    : field_(std::move(field)), g_(g), tau_(tau), size_(0) {
  field_->check(tau_);
  size_ = checked_power(field_->order(), std::uint64_t{g} * g);
  if (size_ == 0 || size_ > budget) {
    throw BudgetExceeded("enumerating q^(g^2) maps with q = " +
                         std::to_string(field_->order()) + ", g = " + std::to_string(g) +
                         " exceeds the budget of " + std::to_string(budget));
  }
}

void MapEnumerator::decode(std::uint64_t index, std::span<Code> out) const {
  const Code q = field_->order();
  for (auto& c : out) {
    c = static_cast<Code>(index % q);
    index /= q;
  }
}

SemilinearMap MapEnumerator::at(std::uint64_t index) const {
  std::vector<Code> entries(g_ * g_);
  decode(index, entries);
  return {Matrix(field_, g_, g_, std::move(entries)), tau_};
}

}  // namespace semilin
