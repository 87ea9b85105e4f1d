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

#include <cmath>
#include <numeric>

#include "semilin/gf.hpp"

using namespace semilin;

namespace {

// Schoolbook product of two codes modulo the field's modulus, written
// independently of the table-driven implementation.
Code slow_mul(const Field& f, Code a, Code b) {
  const unsigned p = f.characteristic();
  const unsigned d = f.degree();
  std::vector<unsigned> x(d, 0), y(d, 0), prod(2 * d, 0);
  for (unsigned i = 0; i < d; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  const auto& m = f.modulus();
  for (unsigned k = 2 * d - 1; k >= d; --k) {
    const unsigned lead = prod[k];
    for (unsigned i = 0; i <= d; ++i) {
      prod[k - d + i] = (prod[k - d + i] + (p - lead) * m[i]) % p;
    }
  }
  Code out = 0;
  for (unsigned i = d; i-- > 0;) out = out * p + prod[i];
  return out;
}

bool has_root(unsigned p, const std::vector<unsigned>& poly) {
  for (unsigned x = 0; x < p; ++x) {
    unsigned v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

const std::vector<std::pair<unsigned, unsigned>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};

}  // namespace

TEST_CASE("make_field picks the documented default moduli") {
  auto f2 = Field::make(2, 1);
  CHECK(f2->order() == 2);
  CHECK(f2->modulus() == std::vector<unsigned>{0, 1});

  auto f4 = Field::make(2, 2);
  CHECK(f4->order() == 4);
  CHECK(f4->modulus() == std::vector<unsigned>{1, 1, 1});
}

TEST_CASE("x^2+1 is accepted over GF(3)") {
  // -1 is not a square mod 3.
  bool minus_one_is_square = false;
  for (unsigned a = 0; a < 3; ++a) minus_one_is_square |= (a * a) % 3 == 2;
  REQUIRE_FALSE(minus_one_is_square);

  auto f9 = Field::make(3, 2, std::vector<unsigned>{1, 0, 1});
  CHECK(f9->order() == 9);
  CHECK(f9->spec() == "3^2/1,0,1");
}

TEST_CASE("make_field rejects bad input") {
  CHECK_THROWS_AS(Field::make(4, 1), InvalidArgument);
  CHECK_THROWS_AS(Field::make(1, 1), InvalidArgument);
  CHECK_THROWS_AS(Field::make(2, 0), InvalidArgument);
  // x^2 + 1 = (x + 1)^2 over GF(2).
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<unsigned>{1, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<unsigned>{1, 1}), InvalidArgument);
  CHECK_THROWS_AS(Field::make(3, 2, std::vector<unsigned>{1, 0, 2}), InvalidArgument);
  CHECK_THROWS_AS(Field::make(3, 2, std::vector<unsigned>{1, 3, 1}), InvalidArgument);
  CHECK_THROWS_AS(Field::make(2, 17), InvalidArgument);
}

TEST_CASE("default modulus is the least irreducible polynomial") {
  // For degree <= 3 irreducible means root-free, which gives an oracle.
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}}) {
    const auto chosen = default_modulus(p, d);
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    unsigned chosen_code = 0;
    for (unsigned i = d; i-- > 0;) chosen_code = chosen_code * p + chosen[i];
    for (unsigned low = 0; low < count; ++low) {
      std::vector<unsigned> poly(d + 1, 0);
      unsigned rest = low;
      for (unsigned i = 0; i < d; ++i, rest /= p) poly[i] = rest % p;
      poly[d] = 1;
      if (low < chosen_code) {
        CHECK(has_root(p, poly));
      } else if (low == chosen_code) {
        CHECK_FALSE(has_root(p, poly));
        CHECK(poly == chosen);
      }
    }
  }
}

TEST_CASE("spec examples for arithmetic") {
  auto f2 = Field::make(2, 1);
  CHECK(f2->add(1, 1) == 0);

  auto f4 = Field::make(2, 2);
  CHECK(f4->mul(2, 2) == 3);

  auto f5 = Field::make(5, 1);
  CHECK(f5->inv(2) == 3);
  CHECK_THROWS_AS(f5->inv(0), DomainError);
  CHECK_THROWS_AS(f5->div(3, 0), DomainError);
  CHECK(f5->pow(2, 4) == 1);
  CHECK(f5->pow(0, 0) == 1);
}

TEST_CASE("Element arithmetic checks its context") {
  auto f4 = Field::make(2, 2);
  auto f4_again = Field::make(2, 2);
  auto f5 = Field::make(5, 1);
  Element x(f4, 2);
  CHECK((x * x).code() == 3);
  CHECK((x * Element(f4_again, 2)).code() == 3);
  CHECK_THROWS_AS(x + Element(f5, 1), InvalidArgument);
  CHECK_THROWS_AS(Element(f4, 4), InvalidArgument);
  CHECK_THROWS_AS(Element(f4, 0).inv(), DomainError);
  CHECK((Element(f5, 2) / Element(f5, 3)).code() == 4);
  CHECK((-Element(f5, 2)).code() == 3);
  CHECK((Element(f5, 2) - Element(f5, 3)).code() == 4);
}

TEST_CASE("frobenius examples") {
  auto f4 = Field::make(2, 2);
  CHECK(f4->frobenius(2, Automorphism{1}) == 3);
  for (Code a = 0; a < 4; ++a) {
    CHECK(f4->frobenius(a, Automorphism{0}) == a);
    CHECK(f4->frobenius(f4->frobenius(a, Automorphism{1}), Automorphism{1}) == a);
  }
  CHECK_THROWS_AS(Element(f4, 1).frobenius(Automorphism{2}), InvalidArgument);
}

TEST_CASE("enumerate_elements lists codes in order") {
  CHECK(Field::make(2, 1)->elements() == std::vector<Code>{0, 1});
  auto f4 = Field::make(2, 2);
  auto all = enumerate_elements(f4);
  REQUIRE(all.size() == 4);
  for (Code c = 0; c < 4; ++c) CHECK(all[c].code() == c);
  CHECK(Field::make(3, 2)->elements().size() == 9);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (auto [p, d] : kSmallFields) {
    auto f = Field::make(p, d);
    const Code q = f->order();
    CAPTURE(f->spec());
    for (Code a = 0; a < q; ++a) {
      CHECK(f->add(a, 0) == a);
      CHECK(f->mul(a, 1) == a);
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      for (Code b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        CHECK(f->mul(a, b) == slow_mul(*f, a, b));
        for (Code c = 0; c < q; ++c) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("frobenius powers compose and fix p^gcd(i,d) elements") {
  for (auto [p, d] : kSmallFields) {
    auto f = Field::make(p, d);
    CAPTURE(f->spec());
    for (unsigned i = 0; i < d; ++i) {
      const Automorphism ti{i};
      CHECK(f->fixed_points(ti) == static_cast<std::size_t>(std::pow(p, std::gcd(i, d))));
      for (unsigned j = 0; j < d; ++j) {
        const Automorphism tj{j};
        const Automorphism tij{(i + j) % d};
        for (Code a = 0; a < f->order(); ++a) {
          CHECK(f->frobenius(f->frobenius(a, tj), ti) == f->frobenius(a, tij));
        }
      }
      for (Code a = 0; a < f->order(); ++a) {
        for (Code b = 0; b < f->order(); ++b) {
          CHECK(f->frobenius(f->add(a, b), ti) == f->add(f->frobenius(a, ti), f->frobenius(b, ti)));
          CHECK(f->frobenius(f->mul(a, b), ti) == f->mul(f->frobenius(a, ti), f->frobenius(b, ti)));
        }
      }
    }
  }
}

TEST_CASE("field spec parsing") {
  CHECK(Field::parse("2^1")->spec() == "2^1/0,1");
  CHECK(Field::parse(" 2^2 ")->spec() == "2^2/1,1,1");
  CHECK(Field::parse("3^2/1,0,1")->modulus() == std::vector<unsigned>{1, 0, 1});
  CHECK(Field::parse("4^1")->spec() == "2^2/1,1,1");
  CHECK(Field::parse("9")->order() == 9);
  CHECK(Field::parse("8")->degree() == 3);
  for (auto spec : {"2^2/1,1,1", "3^2/2,2,1", "5^1/0,1"}) {
    CHECK(Field::parse(Field::parse(spec)->spec())->spec() == spec);
  }
  CHECK_THROWS_AS(Field::parse(""), ParseError);
  CHECK_THROWS_AS(Field::parse("x^2"), ParseError);
  CHECK_THROWS_AS(Field::parse("2^"), ParseError);
  CHECK_THROWS_AS(Field::parse("2^2/1,,1"), ParseError);
  CHECK_THROWS_AS(Field::parse("6^1"), InvalidArgument);
  CHECK_THROWS_AS(Field::parse("4^1/1,1"), InvalidArgument);
}
