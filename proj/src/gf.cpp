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

#include "semilin/gf.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace semilin {

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b, both over GF(p).
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(out), m, p);
}

Poly decode(Code c, unsigned p) {
  Poly out;
  while (c != 0) {
    out.push_back(c % p);
    c /= p;
  }
  return out;
}

Code encode(const Poly& a, unsigned p) {
  Code c = 0;
  for (std::size_t i = a.size(); i-- > 0;) c = c * p + a[i];
  return c;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly poly_pow(const Poly& a, std::uint64_t n, const Poly& m, unsigned p) {
  Poly result{1};
  Poly base = a;
  while (n != 0) {
    if (n & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    n >>= 1;
  }
  return result;
}

unsigned parse_unsigned(std::string_view s, std::string_view what) {
  unsigned value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("field spec: bad " + std::string(what) + " '" +
                     std::string(s) + "'");
  }
  return value;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

bool is_irreducible(unsigned p, const std::vector<unsigned>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (std::size_t k = 1; k <= d / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly divisor(k + 1, 0);
      std::uint64_t rest = low;
      for (std::size_t i = 0; i < k; ++i) {
        divisor[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      divisor[k] = 1;
      if (poly_mod(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned d) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly candidate(d + 1, 0);
    std::uint64_t rest = low;
    for (unsigned i = 0; i < d; ++i) {
      candidate[i] = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    candidate[d] = 1;
    if (is_irreducible(p, candidate)) return candidate;
  }
  throw InternalError("no irreducible polynomial found");
}

FieldPtr Field::make(unsigned p, unsigned d,
                     std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) {
    throw InvalidArgument("characteristic " + std::to_string(p) +
                          " is not prime");
  }
  if (d == 0) throw InvalidArgument("extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw InvalidArgument("field order exceeds " +
                            std::to_string(kMaxFieldOrder));
    }
  }
  std::vector<unsigned> m;
  if (modulus) {
    m = *modulus;
    if (m.size() != d + 1 || m.back() != 1) {
      throw InvalidArgument("modulus must be monic of degree " +
                            std::to_string(d));
    }
    for (unsigned c : m) {
      if (c >= p) throw InvalidArgument("modulus coefficient out of range");
    }
    if (!is_irreducible(p, m)) {
      throw InvalidArgument("modulus is reducible over GF(" +
                            std::to_string(p) + ")");
    }
  } else {
    m = default_modulus(p, d);
  }
  return FieldPtr(new Field(p, d, std::move(m)));
}

FieldPtr Field::parse(std::string_view spec) {
  spec = strip(spec);
  std::string_view order_part = spec;
  std::optional<std::vector<unsigned>> modulus;
  if (auto slash = spec.find('/'); slash != std::string_view::npos) {
    order_part = spec.substr(0, slash);
    std::string_view rest = spec.substr(slash + 1);
    modulus.emplace();
    while (true) {
      auto comma = rest.find(',');
      modulus->push_back(parse_unsigned(strip(rest.substr(0, comma)), "coefficient"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  unsigned base = 0;
  unsigned exponent = 1;
  if (auto caret = order_part.find('^'); caret != std::string_view::npos) {
    base = parse_unsigned(strip(order_part.substr(0, caret)), "characteristic");
    exponent = parse_unsigned(strip(order_part.substr(caret + 1)), "degree");
  } else {
    base = parse_unsigned(strip(order_part), "order");
  }
  if (is_prime(base) || modulus) return make(base, exponent, std::move(modulus));
  // Prime-power base: q^k with q = p^a is GF(p^(a k)).
  if (base < 2) throw InvalidArgument("field order must be a prime power");
  const auto factors = prime_factors(base);
  if (factors.size() != 1) {
    throw InvalidArgument(std::to_string(base) + " is not a prime power");
  }
  const auto p = static_cast<unsigned>(factors.front());
  unsigned a = 0;
  for (unsigned rest = base; rest > 1; rest /= p) ++a;
  return make(p, a * exponent);
}

Field::Field(unsigned p, unsigned d, std::vector<unsigned> modulus)
    : p_(p), d_(d), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < d; ++i) q_ *= p;

  neg_.resize(q_);
  for (Code a = 0; a < q_; ++a) {
    Poly digits = decode(a, p);
    for (auto& c : digits) c = (p - c) % p;
    neg_[a] = encode(digits, p);
  }
  if (p != 2 && q_ <= 256) {
    add_table_.resize(std::size_t{q_} * q_);
    for (Code a = 0; a < q_; ++a) {
      for (Code b = 0; b < q_; ++b) add_table_[std::size_t{a} * q_ + b] = add_digits(a, b);
    }
  }

  // Locate a generator of the multiplicative group, then tabulate its powers.
  const std::uint64_t group = q_ - 1;
  const auto factors = prime_factors(group);
  Code generator = 1;
  for (Code c = 1; c < q_; ++c) {
    const Poly a = decode(c, p);
    bool primitive = true;
    for (auto f : factors) {
      if (poly_pow(a, group / f, modulus_, p) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = c;
      break;
    }
  }
  exp_.resize(2 * group);
  log_.assign(q_, 0);
  const Poly g = decode(generator, p);
  Poly power{1};
  for (std::uint64_t k = 0; k < group; ++k) {
    const Code c = encode(power, p);
    exp_[k] = c;
    exp_[k + group] = c;
    log_[c] = static_cast<std::uint32_t>(k);
    power = poly_mulmod(power, g, modulus_, p);
  }

  frob_.resize(std::size_t{d} * q_);
  std::uint64_t p_power = 1;
  for (unsigned i = 0; i < d; ++i) {
    for (Code a = 0; a < q_; ++a) frob_[std::size_t{i} * q_ + a] = pow(a, p_power);
    p_power *= p;
  }
}

Code Field::add_digits(Code a, Code b) const {
  Code out = 0;
  Code scale = 1;
  while (a != 0 || b != 0) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Code Field::inv(Code a) const {
  if (a == 0) throw DomainError("division by zero");
  const std::uint32_t group = q_ - 1;
  return exp_[(group - log_[a]) % group];
}

Code Field::pow(Code a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = q_ - 1;
  return exp_[(std::uint64_t{log_[a]} * (n % group)) % group];
}

void Field::check(Automorphism tau) const {
  if (tau.exponent >= d_) {
    throw InvalidArgument("automorphism exponent " + std::to_string(tau.exponent) +
                          " out of range [0, " + std::to_string(d_) + ")");
  }
}

void Field::check(Code a) const {
  if (a >= q_) {
    throw InvalidArgument("element code " + std::to_string(a) +
                          " out of range for field of order " + std::to_string(q_));
  }
}

std::vector<Code> Field::elements() const {
  std::vector<Code> out(q_);
  std::iota(out.begin(), out.end(), Code{0});
  return out;
}

std::size_t Field::fixed_points(Automorphism tau) const {
  check(tau);
  std::size_t n = 0;
  for (Code a = 0; a < q_; ++a) n += frobenius(a, tau) == a;
  return n;
}

std::string Field::spec() const {
  std::ostringstream out;
  out << p_ << '^' << d_ << '/';
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i != 0) out << ',';
    out << modulus_[i];
  }
  return out.str();
}

namespace {

const FieldPtr& common_field(const Element& a, const Element& b) {
  if (!(*a.field() == *b.field())) {
    throw InvalidArgument("arithmetic between elements of different fields");
  }
  return a.field();
}

}  // namespace

Element::Element(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_) throw InvalidArgument("element without a field");
  field_->check(code_);
}

Element Element::inv() const { return {field_, field_->inv(code_)}; }

Element Element::pow(std::uint64_t n) const { return {field_, field_->pow(code_, n)}; }

Element Element::frobenius(Automorphism tau) const {
  field_->check(tau);
  return {field_, field_->frobenius(code_, tau)};
}

Element operator+(const Element& a, const Element& b) {
  const auto& f = common_field(a, b);
  return {f, f->add(a.code_, b.code_)};
}

Element operator-(const Element& a, const Element& b) {
  const auto& f = common_field(a, b);
  return {f, f->sub(a.code_, b.code_)};
}

Element operator*(const Element& a, const Element& b) {
  const auto& f = common_field(a, b);
  return {f, f->mul(a.code_, b.code_)};
}

Element operator/(const Element& a, const Element& b) {
  const auto& f = common_field(a, b);
  return {f, f->div(a.code_, b.code_)};
}

Element operator-(const Element& a) { return {a.field_, a.field_->neg(a.code_)}; }

std::vector<Element> enumerate_elements(const FieldPtr& field) {
  std::vector<Element> out;
  out.reserve(field->order());
  for (Code c = 0; c < field->order(); ++c) out.emplace_back(field, c);
  return out;
}

}  // namespace semilin
