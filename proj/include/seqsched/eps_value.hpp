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

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "seqsched/errors.hpp"
#include "seqsched/rational.hpp"

namespace seqsched {

// Value of the form c + e*eps, where eps is a single positive infinitesimal
// shared by the whole instance. The order is lexicographic on (c, e): it
// agrees with comparing the real numbers c + e*eps0 for every sufficiently
// small eps0 > 0, which is exactly how perturbed processing times such as
// "3-11*eps" are meant to be read. Closed under addition/subtraction and
// under scaling by a rational; there is deliberately no product of two
// EpsValues.
struct EpsValue {
  Rational c;  // constant part
  Rational e;  // eps coefficient

  EpsValue() = default;
  EpsValue(long long constant) : c(constant) {}  // NOLINT: implicit by design
  EpsValue(Rational constant) : c(std::move(constant)) {}
  EpsValue(Rational constant, Rational eps_coeff)
      : c(std::move(constant)), e(std::move(eps_coeff)) {}

  static EpsValue eps(Rational coeff = 1) { return EpsValue(0, std::move(coeff)); }

  bool is_zero() const { return c.is_zero() && e.is_zero(); }
  // value > 0 in the eps -> 0+ order
  bool is_positive() const { return c.sign() > 0 || (c.sign() == 0 && e.sign() > 0); }

  friend EpsValue operator-(const EpsValue& a) { return EpsValue(-a.c, -a.e); }
  friend EpsValue operator+(const EpsValue& a, const EpsValue& b) {
    return EpsValue(a.c + b.c, a.e + b.e);
  }
  friend EpsValue operator-(const EpsValue& a, const EpsValue& b) {
    return EpsValue(a.c - b.c, a.e - b.e);
  }
  EpsValue& operator+=(const EpsValue& o) {
    c += o.c;
    e += o.e;
    return *this;
  }
  EpsValue& operator-=(const EpsValue& o) {
    c -= o.c;
    e -= o.e;
    return *this;
  }

  // Componentwise scaling by a plain rational (eps stays symbolic).
  EpsValue scaled(const Rational& factor) const { return EpsValue(c * factor, e * factor); }

  friend bool operator==(const EpsValue& a, const EpsValue& b) = default;
  friend std::strong_ordering operator<=>(const EpsValue& a, const EpsValue& b) {
    const auto first = a.c <=> b.c;
    if (first != std::strong_ordering::equal) return first;
    return a.e <=> b.e;
  }

  // Canonical rendering "c+e*eps" / "c-e*eps", e.g. "3-11*eps", "1/2+0*eps".
  std::string str() const {
    std::string out = c.str();
    out += e.sign() < 0 ? '-' : '+';
    out += e.abs().str();
    out += "*eps";
    return out;
  }

  // Accepts plain integers and "a/b" rationals (eps coefficient 0), "(c, e)"
  // pairs, and the canonical "c+e*eps" rendering.
  static EpsValue parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty eps-value");
    if (s.front() == '(') {
      if (s.back() != ')') throw ParseError("unbalanced parentheses: \"" + std::string(text) + "\"");
      std::string_view inner = s.substr(1, s.size() - 2);
      const auto comma = inner.find(',');
      if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos) {
        throw ParseError("expected \"(c, e)\": \"" + std::string(text) + "\"");
      }
      return EpsValue(Rational::parse(trim(inner.substr(0, comma))),
                      Rational::parse(trim(inner.substr(comma + 1))));
    }
    if (s.size() > 4 && s.substr(s.size() - 4) == "*eps") {
      std::string_view body = s.substr(0, s.size() - 4);
      // the eps coefficient is rendered unsigned, so the last sign splits c|e
      std::size_t split = std::string_view::npos;
      for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
          split = i;
          break;
        }
      }
      if (split == std::string_view::npos) {
        throw ParseError("expected \"c+e*eps\": \"" + std::string(text) + "\"");
      }
      Rational coeff = Rational::parse(body.substr(split + 1));
      if (body[split] == '-') coeff = -coeff;
      return EpsValue(Rational::parse(body.substr(0, split)), std::move(coeff));
    }
    return EpsValue(Rational::parse(s));
  }

 private:
  static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  }
};

// Limit of num/den as eps tends to 0 from above. Defined only when the
// denominator's constant part is nonzero; anything else has no finite
// rational limit and is reported, not guessed.
inline Rational limit_ratio(const EpsValue& num, const EpsValue& den) {
  if (den.c.is_zero()) {
    throw DenominatorVanishes("limit_ratio: denominator " + den.str() +
                              " has constant part zero");
  }
  return num.c / den.c;
}

}  // namespace seqsched
