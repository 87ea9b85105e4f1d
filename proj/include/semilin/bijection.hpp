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

#ifndef SEMILIN_BIJECTION_HPP
#define SEMILIN_BIJECTION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "semilin/flags.hpp"

namespace semilin {

// (x_1, ..., x_g), stored 0-based.
using VectorTuple = std::vector<Vector>;

/// Membership in X(r,s):
///   (1) dim span{x_1..x_g} = r,
///   (2) dim span{x_{g-s+1}..x_g} = s,
///   (3) x_{g-s} lies in span{x_{g-s+1}..x_g}.
/// For s = g condition (3) is vacuous; for s = 0 it says x_g = 0.
/// Throws InvalidArgument unless 0 <= s <= r <= g = t.size().
bool is_member_x(const Field& field, const VectorTuple& t, std::size_t r, std::size_t s);

/// The unique (r,s) with t in X(r,s), if any.
std::optional<RankProfile> x_profile(const Field& field, const VectorTuple& t);

/// (F(v_1), ..., F(v_g)) where v is the fixed standard basis adapted to the
/// image flag of F.
VectorTuple mu(const SemilinearMap& f);

/// V_0 = V, and V_i = span of the last d_{i-1} entries of t, until the
/// dimension stops dropping. Members are returned in rref-normalized form.
Flag induced_flag(const FieldPtr& field, const VectorTuple& t);

/// The unique tau-semilinear F with F(v_i) = x_i, v the standard basis
/// adapted to induced_flag(t). Its matrix is X * tau(P)^{-1} with P and X
/// holding the v_i and x_i as columns. Throws DomainError when t lies in no
/// X(r,s).
SemilinearMap nu(const FieldPtr& field, const VectorTuple& t, Automorphism tau);

/// Exhaustive (or sampled) check of nu(mu(F)) = F over maps and of
/// mu(nu(t)) = t over tuples in X(r,s).
struct RoundtripOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  // Used only when q^(g^2) exceeds the budget: that many random maps and
  // tuples are checked instead.
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
};

struct RoundtripReport {
  struct Tally {
    std::uint64_t maps = 0;         // maps of this profile checked
    std::uint64_t maps_passed = 0;
    std::uint64_t tuples = 0;       // X(r,s) members checked
    std::uint64_t tuples_passed = 0;

    friend bool operator==(const Tally&, const Tally&) = default;
  };

  FieldPtr field;
  std::size_t g = 0;
  Automorphism tau;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t maps_checked = 0;
  std::uint64_t tuples_checked = 0;  // all tuples visited, members or not
  std::map<RankProfile, Tally> profiles;

  std::uint64_t maps_passed() const;
  std::uint64_t tuple_members() const;
  std::uint64_t tuples_passed() const;
  bool passed() const;
};

/// For each map F: mu(F) lies in X(profile F), nu(mu(F), tau) = F, and the
/// image flag of F equals the induced flag of mu(F). For each tuple t in
/// some X(r,s): nu(t) has profile (r,s) and mu(nu(t)) = t.
RoundtripReport roundtrip(const FieldPtr& field, std::size_t g, Automorphism tau,
                          const RoundtripOptions& options = {});

}  // namespace semilin

#endif  // SEMILIN_BIJECTION_HPP
