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

#include "semilin/counting.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace semilin {

namespace {

using Rational = boost::multiprecision::cpp_rational;

BigInt qpow(std::uint64_t q, std::uint64_t n) {
  return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n));
}

void check_profile(std::size_t g, std::size_t r, std::size_t s) {
  if (!(s <= r && r <= g)) {
    throw InvalidArgument("profile (" + std::to_string(r) + "," + std::to_string(s) +
                          ") out of range for g = " + std::to_string(g));
  }
}

void check_order(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("field order must be at least 2");
}

// prod_{j=first}^{last} (1 - q^{-j}); empty when first > last.
Rational one_minus_inverse_powers(std::int64_t first, std::int64_t last, std::uint64_t q) {
  Rational out = 1;
  for (std::int64_t j = first; j <= last; ++j) {
    out *= Rational(1) - Rational(BigInt(1), qpow(q, static_cast<std::uint64_t>(j)));
  }
  return out;
}

}  // namespace

BigInt gl_order(std::size_t g, std::uint64_t q) {
  check_order(q);
  const BigInt qg = qpow(q, g);
  BigInt out = 1;
  for (std::size_t i = 0; i < g; ++i) out *= qg - qpow(q, i);
  return out;
}

BigInt gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t q) {
  check_order(q);
  if (d > n) {
    throw InvalidArgument("gaussian_binomial: d = " + std::to_string(d) + " exceeds n = " +
                          std::to_string(n));
  }
  BigInt num = 1;
  BigInt den = 1;
  const BigInt qn = qpow(q, n);
  const BigInt qd = qpow(q, d);
  for (std::size_t i = 0; i < d; ++i) {
    const BigInt qi = qpow(q, i);
    num *= qn - qi;
    den *= qd - qi;
  }
  if (num % den != 0) throw InternalError("gaussian_binomial: inexact division");
  return num / den;
}

BigInt surjection_count(std::int64_t m, std::size_t d, std::uint64_t q) {
  check_order(q);
  if (d == 0) return 1;
  if (m < 0 || d > static_cast<std::size_t>(m)) return 0;
  const BigInt qm = qpow(q, static_cast<std::uint64_t>(m));
  BigInt out = 1;
  for (std::size_t i = 0; i < d; ++i) out *= qm - qpow(q, i);
  return out;
}

BigInt q_tuple_count(std::size_t n, std::size_t d, std::uint64_t q) {
  return gaussian_binomial(n, d, q) *
         surjection_count(static_cast<std::int64_t>(n) - 1, d, q);
}

BigInt staged_count(std::size_t g, std::size_t r, std::size_t s, std::uint64_t q) {
  check_profile(g, r, s);
  check_order(q);
  const std::size_t n = g - s;
  const std::size_t d = r - s;
  // Independent choices of x_{g-s+1}, ..., x_g.
  BigInt last_s = 1;
  const BigInt qg = qpow(q, g);
  for (std::size_t i = 0; i < s; ++i) last_s *= qg - qpow(q, i);
  // Each of the first n vectors lifts from V/V_inf in q^s ways.
  const BigInt lifts = qpow(q, s * n);
  return last_s * lifts * q_tuple_count(n, d, q);
}

BigInt theorem_count(std::size_t g, std::size_t r, std::size_t s, std::uint64_t q) {
  check_profile(g, r, s);
  check_order(q);
  const auto gi = static_cast<std::int64_t>(g);
  const auto ri = static_cast<std::int64_t>(r);
  const auto si = static_cast<std::int64_t>(s);
  Rational value(qpow(q, g * g), qpow(q, (g - r) * (g - r) + r - s));
  value *= one_minus_inverse_powers(1, gi, q);
  value *= one_minus_inverse_powers(gi - ri, gi - si - 1, q);
  value /= one_minus_inverse_powers(1, ri - si, q);
  value /= one_minus_inverse_powers(1, gi - ri, q);
  if (boost::multiprecision::denominator(value) != 1) {
    throw InternalError("theorem_count(" + std::to_string(g) + "," + std::to_string(r) + "," +
                        std::to_string(s) + "," + std::to_string(q) + ") is not an integer");
  }
  return boost::multiprecision::numerator(value);
}

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& [_, v] : entries) sum += v;
  return sum;
}

const BigInt& CountTable::at(std::size_t r, std::size_t s) const {
  auto it = entries.find(RankProfile{r, s});
  if (it == entries.end()) throw InvalidArgument("no such profile in count table");
  return it->second;
}

namespace {

template <class CellFn>
CountTable fill_table(std::size_t g, std::uint64_t q, CountRoute route, CellFn&& cell) {
  CountTable t;
  t.q = q;
  t.g = g;
  t.route = route;
  for (std::size_t r = 0; r <= g; ++r) {
    for (std::size_t s = 0; s <= r; ++s) t.entries[RankProfile{r, s}] = cell(r, s);
  }
  return t;
}

}  // namespace

CountTable staged_table(std::size_t g, std::uint64_t q) {
  return fill_table(g, q, CountRoute::staged,
                    [&](std::size_t r, std::size_t s) { return staged_count(g, r, s, q); });
}

CountTable formula_table(std::size_t g, std::uint64_t q) {
  return fill_table(g, q, CountRoute::theorem, [&](std::size_t r, std::size_t s) {
    BigInt value = theorem_count(g, r, s, q);
    BigInt staged = staged_count(g, r, s, q);
    if (value != staged) {
      throw InternalError("routes disagree at q=" + std::to_string(q) + " g=" +
                          std::to_string(g) + " r=" + std::to_string(r) + " s=" +
                          std::to_string(s) + ": theorem " + value.str() + ", staged " +
                          staged.str());
    }
    return value;
  });
}

CountTable bruteforce_table(const FieldPtr& field, std::size_t g, Automorphism tau,
                            const EnumerationOptions& options) {
  const MapEnumerator maps(field, g, tau, options.budget);
  const unsigned threads = std::max(1u, options.threads);
  const std::size_t width = g + 1;
  std::vector<std::vector<std::uint64_t>> tallies(threads,
                                                  std::vector<std::uint64_t>(width * width, 0));

  auto work = [&](unsigned w, std::uint64_t first, std::uint64_t last) {
    std::vector<Code> entries(g * g);
    std::vector<Code> scratch;
    auto& tally = tallies[w];
    for (std::uint64_t i = first; i < last; ++i) {
      maps.decode(i, entries);
      const RankProfile p = profile_of(*field, entries, g, tau, scratch);
      ++tally[p.r * width + p.s];
    }
  };

  const std::uint64_t n = maps.size();
  const std::uint64_t slice = (n + threads - 1) / threads;
  if (threads == 1) {
    work(0, 0, n);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t first = std::min(n, w * slice);
      const std::uint64_t last = std::min(n, first + slice);
      pool.emplace_back(work, w, first, last);
    }
  }

  CountTable t;
  t.q = field->order();
  t.g = g;
  t.tau_exponent = tau.exponent;
  t.route = CountRoute::enumeration;
  for (std::size_t r = 0; r <= g; ++r) {
    for (std::size_t s = 0; s <= r; ++s) {
      BigInt sum = 0;
      for (const auto& tally : tallies) sum += tally[r * width + s];
      t.entries[RankProfile{r, s}] = sum;
    }
  }
  return t;
}

bool VerifyReport::ok() const {
  return std::all_of(cells.begin(), cells.end(), [](const Cell& c) { return c.match; }) &&
         corollaries.gl && corollaries.nilpotent && corollaries.total_mass;
}

namespace {

VerifyReport build_report(const FieldPtr& field, std::size_t g,
                          const std::optional<CountTable>& enumerated) {
  const std::uint64_t q = field->order();
  const CountTable theorem = fill_table(
      g, q, CountRoute::theorem, [&](std::size_t r, std::size_t s) { return theorem_count(g, r, s, q); });
  const CountTable staged = staged_table(g, q);

  VerifyReport report;
  report.field = field;
  report.g = g;
  report.expected_total = qpow(q, g * g);
  report.theorem_total = theorem.total();
  report.staged_total = staged.total();
  if (enumerated) {
    report.tau = Automorphism{*enumerated->tau_exponent};
    report.enumerated_total = enumerated->total();
  }

  for (const auto& [prof, value] : theorem.entries) {
    VerifyReport::Cell cell;
    cell.r = prof.r;
    cell.s = prof.s;
    cell.theorem = value;
    cell.staged = staged.entries.at(prof);
    cell.match = cell.theorem == cell.staged;
    if (enumerated) {
      cell.enumerated = enumerated->entries.at(prof);
      cell.match = cell.match && *cell.enumerated == cell.theorem;
    }
    report.cells.push_back(std::move(cell));
  }

  std::vector<const CountTable*> routes{&theorem, &staged};
  if (enumerated) routes.push_back(&*enumerated);
  const BigInt gl = gl_order(g, q);
  const BigInt nilpotent = g == 0 ? BigInt(1) : qpow(q, g * g - g);
  auto& c = report.corollaries;
  c.gl = c.nilpotent = c.total_mass = true;
  for (const CountTable* t : routes) {
    c.gl = c.gl && t->at(g, g) == gl;
    BigInt nil = 0;
    for (std::size_t r = 0; r <= g; ++r) nil += t->at(r, 0);
    c.nilpotent = c.nilpotent && nil == nilpotent;
    c.total_mass = c.total_mass && t->total() == report.expected_total;
  }
  return report;
}

}  // namespace

VerifyReport count_report(const FieldPtr& field, std::size_t g) {
  return build_report(field, g, std::nullopt);
}

VerifyReport verify(const FieldPtr& field, std::size_t g, Automorphism tau,
                    const EnumerationOptions& options) {
  return build_report(field, g, bruteforce_table(field, g, tau, options));
}

}  // namespace semilin
