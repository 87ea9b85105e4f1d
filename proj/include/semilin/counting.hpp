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

#ifndef SEMILIN_COUNTING_HPP
#define SEMILIN_COUNTING_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "semilin/semilinear.hpp"

namespace semilin {

using BigInt = boost::multiprecision::cpp_int;

// Closed-form and staged counts. All arguments are plain integers; q need
// not be checked for being a prime power, the identities hold for any q >= 2.

/// prod_{i<g} (q^g - q^i), the order of GL_g(GF(q)).
BigInt gl_order(std::size_t g, std::uint64_t q);

/// Number of d-dimensional subspaces of GF(q)^n. Throws InvalidArgument when
/// d > n.
BigInt gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t q);

/// Number of surjective linear maps GF(q)^m -> U with dim U = d:
/// prod_{i<d} (q^m - q^i), and 0 when d > m. A negative m counts maps out of
/// nothing and is 1 for d = 0, 0 otherwise.
BigInt surjection_count(std::int64_t m, std::size_t d, std::uint64_t q);

/// #Q(n,d): (n-1)-tuples in an n-dimensional space spanning dimension d.
BigInt q_tuple_count(std::size_t n, std::size_t d, std::uint64_t q);

/// #X(r,s) assembled from its factors: independent last s vectors, lifts of
/// the first g-s vectors from V/V_inf, and #Q(g-s, r-s).
BigInt staged_count(std::size_t g, std::size_t r, std::size_t s, std::uint64_t q);

/// The closed form for #P(r,s), evaluated in exact rationals. Throws
/// InternalError if the value is not an integer.
BigInt theorem_count(std::size_t g, std::size_t r, std::size_t s, std::uint64_t q);

enum class CountRoute { theorem, staged, enumeration };

/// Exact counts #P(r,s) for all 0 <= s <= r <= g.
struct CountTable {
  std::uint64_t q = 0;
  std::size_t g = 0;
  std::optional<unsigned> tau_exponent;  // enumeration route only
  CountRoute route = CountRoute::theorem;
  std::map<RankProfile, BigInt> entries;

  BigInt total() const;
  const BigInt& at(std::size_t r, std::size_t s) const;
};

/// Theorem route for every cell, cross-checked against the staged route;
/// throws InternalError on disagreement.
CountTable formula_table(std::size_t g, std::uint64_t q);
CountTable staged_table(std::size_t g, std::uint64_t q);

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

/// Profiles of all q^(g^2) tau-semilinear maps, tallied. Workers get
/// disjoint contiguous code ranges and private tallies, merged in worker
/// order. Throws BudgetExceeded.
CountTable bruteforce_table(const FieldPtr& field, std::size_t g, Automorphism tau,
                            const EnumerationOptions& options = {});

/// Per-cell comparison of the routes plus the corollary identities.
struct VerifyReport {
  struct Cell {
    std::size_t r = 0;
    std::size_t s = 0;
    BigInt theorem;
    BigInt staged;
    std::optional<BigInt> enumerated;
    bool match = false;
  };
  struct Corollaries {
    bool gl = false;          // #P(g,g) = |GL_g|
    bool nilpotent = false;   // sum_r #P(r,0) = q^(g^2-g)
    bool total_mass = false;  // sum = q^(g^2)
  };

  FieldPtr field;
  std::size_t g = 0;
  std::optional<Automorphism> tau;  // set when the enumeration route ran
  std::vector<Cell> cells;
  BigInt expected_total;  // q^(g^2)
  BigInt theorem_total;
  BigInt staged_total;
  std::optional<BigInt> enumerated_total;
  Corollaries corollaries;

  bool ok() const;
};

/// Formula routes only.
VerifyReport count_report(const FieldPtr& field, std::size_t g);
/// Formula routes against exhaustive enumeration.
VerifyReport verify(const FieldPtr& field, std::size_t g, Automorphism tau,
                    const EnumerationOptions& options = {});

}  // namespace semilin

#endif  // SEMILIN_COUNTING_HPP
