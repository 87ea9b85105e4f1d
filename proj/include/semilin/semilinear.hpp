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

#ifndef SEMILIN_SEMILINEAR_HPP
#define SEMILIN_SEMILINEAR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "semilin/linalg.hpp"

namespace semilin {

// Default cap on the number of maps an exhaustive enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

/// Rank r and infinity rank s of a semilinear map; 0 <= s <= r <= g.
struct RankProfile {
  std::size_t r = 0;
  std::size_t s = 0;

  friend bool operator==(const RankProfile&, const RankProfile&) = default;
  friend auto operator<=>(const RankProfile&, const RankProfile&) = default;
};

/// A tau-semilinear endomorphism F of V = GF(q)^g.
///
/// Column j of the matrix is F(e_j) in e-coordinates, so F acts on
/// coordinates as F(v) = A * tau(v), and the image of F is the column space
/// of A.
class SemilinearMap {
 public:
  SemilinearMap(Matrix matrix, Automorphism tau);

  static SemilinearMap identity(FieldPtr field, std::size_t g);
  static SemilinearMap zero(FieldPtr field, std::size_t g, Automorphism tau = {});

  const Matrix& matrix() const { return matrix_; }
  Automorphism tau() const { return tau_; }
  std::size_t dimension() const { return matrix_.rows(); }
  const FieldPtr& field() const { return matrix_.field(); }

  friend bool operator==(const SemilinearMap&, const SemilinearMap&) = default;

 private:
  Matrix matrix_;
  Automorphism tau_;
};

Vector apply(const SemilinearMap& f, const Vector& v);

/// f o g. The matrix is A_f * tau_f(A_g); the automorphism exponents add
/// modulo d.
SemilinearMap compose(const SemilinearMap& f, const SemilinearMap& g);

/// n-fold composition by repeated `compose`; power(f, 0) is the identity
/// with tau = id.
SemilinearMap power(const SemilinearMap& f, std::size_t n);

std::size_t sl_rank(const SemilinearMap& f);
/// rank(F^g).
std::size_t sl_inf_rank(const SemilinearMap& f);
RankProfile profile(const SemilinearMap& f);

/// Basis of the terminal image V^{F-bij}: the column space of F^g.
std::vector<Vector> terminal_image(const SemilinearMap& f);
/// Basis of V^{F-nil}: the kernel of F^g.
std::vector<Vector> nil_part(const SemilinearMap& f);

/// Profile straight from a row-major coefficient buffer. `scratch` is reused
/// between calls to avoid allocation in enumeration loops.
RankProfile profile_of(const Field& field, std::span<const Code> matrix, std::size_t g,
                       Automorphism tau, std::vector<Code>& scratch);

/// All q^(g^2) tau-semilinear maps of GF(q)^g, indexed by matrix code: the
/// base-q digits of the code, little-endian, are the row-major entries.
class MapEnumerator {
 public:
  /// Throws BudgetExceeded when q^(g^2) > budget.
  MapEnumerator(FieldPtr field, std::size_t g, Automorphism tau,
                std::uint64_t budget = kDefaultBudget);

  std::uint64_t size() const { return size_; }
  std::size_t dimension() const { return g_; }
  Automorphism tau() const { return tau_; }
  const FieldPtr& field() const { return field_; }

  /// Writes the g*g entries of map `index` into `out`.
  void decode(std::uint64_t index, std::span<Code> out) const;
  SemilinearMap at(std::uint64_t index) const;

  /// Calls fn(index, map) for every index in [first, last).
  template <class Fn>
  void for_each(std::uint64_t first, std::uint64_t last, Fn&& fn) const {
    for (std::uint64_t i = first; i < last; ++i) fn(i, at(i));
  }

 private:
  FieldPtr field_;
  std::size_t g_;
  Automorphism tau_;
  std::uint64_t size_;
};

/// base^exponent, or 0 when the value does not fit in 64 bits.
std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent);

}  // namespace semilin

#endif  // SEMILIN_SEMILINEAR_HPP
