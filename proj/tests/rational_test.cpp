// Copyright 2026 The seqsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqsched/rational.hpp"

#include <random>

#include <doctest.h>

#include "helpers.hpp"

using namespace seqsched;
using seqsched::test::random_rational;

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 17) == Rational(0));
  CHECK(Rational(0, 17).den() == 1);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    for (const Rational& r : {a + b, a - b, a * b}) {
      CHECK(r.den() > 0);
      CHECK(boost::multiprecision::gcd(r.num() < 0 ? BigInt(-r.num()) : r.num(), r.den()) == 1);
    }
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_rational(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
  }
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK(Rational(-5) < Rational(0));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_rational(rng);
    CHECK(((a < b) + (b < a) + (a == b)) == 1);
    if (a < b && b < c) CHECK(a < c);
  }
}

TEST_CASE("rational rendering and parsing") {
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-7, 2).str() == "-7/2");
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-7/2") == Rational(-7, 2));
  CHECK(Rational::parse("+4") == Rational(4));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("3.5"), ParseError);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Rational r = random_rational(rng);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("rational from decimal text") {
  CHECK(Rational::from_decimal("0.25") == Rational(1, 4));
  CHECK(Rational::from_decimal("-12.5") == Rational(-25, 2));
  CHECK(Rational::from_decimal("1e3") == Rational(1000));
  CHECK(Rational::from_decimal("1.25e-3") == Rational(1, 800));
  CHECK(Rational::from_decimal("-12.5e-1") == Rational(-5, 4));
  CHECK(Rational::from_decimal("42") == Rational(42));
  CHECK_THROWS_AS(Rational::from_decimal("."), ParseError);
  CHECK_THROWS_AS(Rational::from_decimal("1.2.3"), ParseError);
}

TEST_CASE("rational survives large accumulations exactly") {
  // sums that overflow 64-bit cross-multiplication if done naively
  Rational sum;
  for (int i = 1; i <= 40; ++i) sum += Rational(1, 1000000007LL + i);
  Rational back = sum;
  for (int i = 1; i <= 40; ++i) back -= Rational(1, 1000000007LL + i);
  CHECK(back == Rational(0));
  CHECK(sum > Rational(0));
}
