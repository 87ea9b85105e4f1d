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

#ifndef SEMILIN_GF_HPP
#define SEMILIN_GF_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semilin/errors.hpp"

namespace semilin {

// Element code: the base-p digits of the code, little-endian, are the
// coefficients of the representative polynomial of degree < d.
using Code = std::uint32_t;

// Largest field order supported. Arithmetic is table driven.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

// tau = Frobenius^exponent, i.e. a -> a^(p^exponent), exponent in [0, d).
struct Automorphism {
  unsigned exponent = 0;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^d) in a polynomial basis with a fixed monic irreducible modulus.
///
/// Immutable after construction; every method is const and thread safe.
/// The raw `Code` operations do not validate their arguments beyond the
/// zero checks in `div`/`inv`: they are the hot path of every enumeration.
/// Use `Element` for checked arithmetic.
class Field {
 public:
  /// Builds GF(p^d). Without an explicit modulus the lexicographically least
  /// monic irreducible polynomial is chosen (coefficients read as a
  /// little-endian base-p integer). `modulus` holds d+1 coefficients, c_0
  /// first.
  static FieldPtr make(unsigned p, unsigned d,
                       std::optional<std::vector<unsigned>> modulus = {});

  /// Parses "p^d" or "p^d/c_0,c_1,...,c_d". A prime-power base without an
  /// explicit modulus is also accepted ("4^1" is GF(2^2)), as is a bare
  /// order ("9").
  static FieldPtr parse(std::string_view spec);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return d_; }
  Code order() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  /// Canonical "p^d/c_0,...,c_d" form, accepted back by `parse`.
  std::string spec() const;

  bool contains(Code a) const { return a < q_; }

  Code add(Code a, Code b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    return add_digits(a, b);
  }
  Code neg(Code a) const { return neg_[a]; }
  Code sub(Code a, Code b) const { return add(a, neg_[b]); }
  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t n) const;

  /// a^(p^i) for tau = Frobenius^i.
  Code frobenius(Code a, Automorphism tau) const {
    return frob_[std::size_t{tau.exponent} * q_ + a];
  }

  /// Throws InvalidArgument unless tau.exponent < d.
  void check(Automorphism tau) const;
  /// Throws InvalidArgument unless a < q.
  void check(Code a) const;

  /// All q elements in code order 0, 1, ..., q-1.
  std::vector<Code> elements() const;

  /// Number of elements fixed by tau; equals p^gcd(i, d).
  std::size_t fixed_points(Automorphism tau) const;

  /// Structural equality: same p, d and modulus.
  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.d_ == b.d_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(unsigned p, unsigned d, std::vector<unsigned> modulus);

  Code add_digits(Code a, Code b) const;

  unsigned p_;
  unsigned d_;
  Code q_;
  std::vector<unsigned> modulus_;
  std::vector<Code> add_table_;  // only for odd p and q <= 256
  std::vector<Code> neg_;
  std::vector<Code> exp_;              // generator powers, length 2(q-1)
  std::vector<std::uint32_t> log_;     // log_[0] unused
  std::vector<Code> frob_;             // d tables of q entries
};

// Polynomial helpers over GF(p), coefficients little-endian. Exposed for the
// irreducibility tests.
bool is_prime(std::uint64_t n);
bool is_irreducible(unsigned p, const std::vector<unsigned>& poly);
std::vector<unsigned> default_modulus(unsigned p, unsigned d);

/// A field element bound to its context. Arithmetic between elements of
/// different fields throws InvalidArgument.
class Element {
 public:
  Element(FieldPtr field, Code code);

  Code code() const { return code_; }
  const FieldPtr& field() const { return field_; }

  Element inv() const;
  Element pow(std::uint64_t n) const;
  Element frobenius(Automorphism tau) const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a);

  friend bool operator==(const Element& a, const Element& b) {
    return a.code_ == b.code_ && *a.field_ == *b.field_;
  }

 private:
  FieldPtr field_;
  Code code_;
};

/// Every element of the field as an `Element`, in code order.
std::vector<Element> enumerate_elements(const FieldPtr& field);

}  // namespace semilin

#endif  // SEMILIN_GF_HPP
