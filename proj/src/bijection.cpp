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

#include "semilin/bijection.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <thread>

namespace semilin {

namespace {

void check_tuple(const VectorTuple& t) {
  for (const auto& x : t) {
    if (x.size() != t.size()) {
      throw InvalidArgument("tuple of " + std::to_string(t.size()) +
                            " vectors must live in a space of the same dimension");
    }
  }
}

std::span<const Vector> tail(const VectorTuple& t, std::size_t n) {
  return std::span<const Vector>(t).subspan(t.size() - n);
}

}  // namespace

bool is_member_x(const Field& field, const VectorTuple& t, std::size_t r, std::size_t s) {
  const std::size_t g = t.size();
  if (!(s <= r && r <= g)) {
    throw InvalidArgument("profile (" + std::to_string(r) + "," + std::to_string(s) +
                          ") out of range for g = " + std::to_string(g));
  }
  check_tuple(t);
  if (span_dim(field, t) != r) return false;
  if (span_dim(field, tail(t, s)) != s) return false;
  if (s < g && span_dim(field, tail(t, s + 1)) != s) return false;
  return true;
}

std::optional<RankProfile> x_profile(const Field& field, const VectorTuple& t) {
  check_tuple(t);
  const std::size_t r = span_dim(field, t);
  for (std::size_t s = 0; s <= r; ++s) {
    if (is_member_x(field, t, r, s)) return RankProfile{r, s};
  }
  return std::nullopt;
}

VectorTuple mu(const SemilinearMap& f) {
  const auto adapted = adapt_to_flag(standard_basis(f.dimension()), image_flag(f));
  VectorTuple out;
  out.reserve(f.dimension());
  for (const auto& v : adapted.vectors) out.push_back(semilin::apply(f, v));
  return out;
}

Flag induced_flag(const FieldPtr& field, const VectorTuple& t) {
  check_tuple(t);
  const std::size_t g = t.size();
  std::vector<Subspace> members;
  members.push_back(standard_basis(g));
  std::size_t previous = g;
  while (true) {
    auto next = span_basis(field, g, tail(t, previous));
    if (next.size() == previous) break;
    previous = next.size();
    members.push_back(std::move(next));
  }
  return Flag(field, g, std::move(members));
}

SemilinearMap nu(const FieldPtr& field, const VectorTuple& t, Automorphism tau) {
  field->check(tau);
  if (!x_profile(*field, t)) throw DomainError("nu: tuple lies in no X(r,s)");
  const std::size_t g = t.size();
  const auto adapted = adapt_to_flag(standard_basis(g), induced_flag(field, t));
  const Matrix p = Matrix::from_columns(field, g, adapted.vectors);
  const Matrix x = Matrix::from_columns(field, g, t);
  return {mat_mul(x, mat_inverse(map_entries(p, tau))), tau};
}

std::uint64_t RoundtripReport::maps_passed() const {
  std::uint64_t n = 0;
  for (const auto& [_, t] : profiles) n += t.maps_passed;
  return n;
}

std::uint64_t RoundtripReport::tuple_members() const {
  std::uint64_t n = 0;
  for (const auto& [_, t] : profiles) n += t.tuples;
  return n;
}

std::uint64_t RoundtripReport::tuples_passed() const {
  std::uint64_t n = 0;
  for (const auto& [_, t] : profiles) n += t.tuples_passed;
  return n;
}

bool RoundtripReport::passed() const {
  return maps_passed() == maps_checked && tuples_passed() == tuple_members();
}

namespace {

using Tallies = std::map<RankProfile, RoundtripReport::Tally>;

bool same_flag(const Flag& a, const Flag& b) { return a.members() == b.members(); }

void check_map(const SemilinearMap& f, Tallies& tallies) {
  const RankProfile prof = profile(f);
  auto& tally = tallies[prof];
  ++tally.maps;
  try {
    const VectorTuple t = mu(f);
    if (is_member_x(*f.field(), t, prof.r, prof.s) && nu(f.field(), t, f.tau()) == f &&
        same_flag(image_flag(f), induced_flag(f.field(), t))) {
      ++tally.maps_passed;
    }
  } catch (const Error&) {
  }
}

// Returns true when t was a member of some X(r,s).
bool check_tuple_roundtrip(const FieldPtr& field, const VectorTuple& t, Automorphism tau,
                           Tallies& tallies) {
  const auto prof = x_profile(*field, t);
  if (!prof) return false;
  auto& tally = tallies[*prof];
  ++tally.tuples;
  try {
    const SemilinearMap f = nu(field, t, tau);
    if (profile(f) == *prof && mu(f) == t && same_flag(image_flag(f), induced_flag(field, t))) {
      ++tally.tuples_passed;
    }
  } catch (const Error&) {
  }
  return true;
}

VectorTuple rows_of(std::span<const Code> entries, std::size_t g) {
  VectorTuple t(g);
  for (std::size_t i = 0; i < g; ++i) {
    t[i].assign(entries.begin() + static_cast<std::ptrdiff_t>(i * g),
                entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * g));
  }
  return t;
}

void merge(Tallies& into, const Tallies& from) {
  for (const auto& [prof, t] : from) {
    auto& dst = into[prof];
    dst.maps += t.maps;
    dst.maps_passed += t.maps_passed;
    dst.tuples += t.tuples;
    dst.tuples_passed += t.tuples_passed;
  }
}

// Runs work(worker, first, last) over `threads` contiguous slices of [0, n).
template <class Work>
void run_sliced(std::uint64_t n, unsigned threads, Work&& work) {
  threads = std::max(1u, threads);
  const std::uint64_t slice = (n + threads - 1) / threads;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t first = std::min(n, w * slice);
    const std::uint64_t last = std::min(n, first + slice);
    if (threads == 1) {
      work(w, first, last);
    } else {
      pool.emplace_back([&work, w, first, last] { work(w, first, last); });
    }
  }
}

}  // namespace

RoundtripReport roundtrip(const FieldPtr& field, std::size_t g, Automorphism tau,
                          const RoundtripOptions& options) {
  field->check(tau);
  RoundtripReport report;
  report.field = field;
  report.g = g;
  report.tau = tau;

  const unsigned threads = std::max(1u, options.threads);
  std::vector<Tallies> per_worker(threads);
  std::vector<std::uint64_t> tuples_seen(threads, 0);

  const std::uint64_t total = checked_power(field->order(), std::uint64_t{g} * g);
  if (total != 0 && total <= options.budget) {
    const MapEnumerator maps(field, g, tau, options.budget);
    run_sliced(total, threads, [&](unsigned w, std::uint64_t first, std::uint64_t last) {
      std::vector<Code> entries(g * g);
      for (std::uint64_t i = first; i < last; ++i) {
        check_map(maps.at(i), per_worker[w]);
        maps.decode(i, entries);
        check_tuple_roundtrip(field, rows_of(entries, g), tau, per_worker[w]);
        ++tuples_seen[w];
      }
    });
    report.maps_checked = total;
  } else {
    report.exhaustive = false;
    report.seed = options.seed;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Code> digit(0, field->order() - 1);
    std::vector<std::vector<Code>> samples(2 * options.samples, std::vector<Code>(g * g));
    for (auto& s : samples) {
      for (auto& c : s) c = digit(rng);
    }
    run_sliced(options.samples, threads,
               [&](unsigned w, std::uint64_t first, std::uint64_t last) {
                 for (std::uint64_t i = first; i < last; ++i) {
                   check_map(SemilinearMap(Matrix(field, g, g, samples[2 * i]), tau),
                             per_worker[w]);
                   check_tuple_roundtrip(field, rows_of(samples[2 * i + 1], g), tau,
                                         per_worker[w]);
                   ++tuples_seen[w];
                 }
               });
    report.maps_checked = options.samples;
  }
  for (unsigned w = 0; w < threads; ++w) {
    merge(report.profiles, per_worker[w]);
    report.tuples_checked += tuples_seen[w];
  }
  return report;
}

}  // namespace semilin
