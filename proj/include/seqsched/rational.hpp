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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "seqsched/errors.hpp"

namespace seqsched {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number over arbitrary-precision integers. Always stored in
// lowest terms with a positive denominator, so equality is plain component
// equality and tie decisions stay bit-exact no matter how many terms were
// accumulated.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(BigInt value) : num_(std::move(value)) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational abs() const {
    Rational r = *this;
    if (r.num_ < 0) r.num_ = -r.num_;
    return r;
  }

  friend Rational operator-(const Rational& a) {
    Rational r = a;
    r.num_ = -r.num_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    // canonical form makes component equality sufficient
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p" when integral, "p/q" otherwise.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  // Accepts "p" and "p/q" with an optional leading sign on p.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_integer(text));
    }
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("rational \"" + std::string(text) + "\": zero denominator");
    return Rational(std::move(num), std::move(den));
  }

  // Exact value of a decimal literal such as "-12.5" or "1.25e-3". Used to
  // take JSON floating-point numbers in through their shortest round-trip
  // representation.
  static Rational from_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    std::string digits;
    long long frac_len = 0;
    long long exponent = 0;
    std::size_t i = 0;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) digits += s[i];
    if (i < s.size() && s[i] == '.') {
      for (++i; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i, ++frac_len) digits += s[i];
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
      std::string_view exp_part = s.substr(i + 1);
      exponent = static_cast<long long>(parse_integer(exp_part));
      i = s.size();
    }
    if (digits.empty() || i != s.size()) {
      throw ParseError("not a decimal number: \"" + std::string(text) + "\"");
    }
    BigInt num = from_digits(digits);
    if (negative) num = -num;
    const long long scale = exponent - frac_len;
    if (scale >= 0) {
      return Rational(num * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(scale)));
    }
    return Rational(std::move(num),
                    boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-scale)));
  }

 private:
  void normalize() {
    if (den_ == 0) throw Error("rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  static BigInt parse_integer(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("not an integer: \"" + std::string(text) + "\"");
    for (char ch : s) {
      if (ch < '0' || ch > '9') {
        throw ParseError("not an integer: \"" + std::string(text) + "\"");
      }
    }
    const BigInt v = from_digits(s);
    return negative ? BigInt(-v) : v;
  }

  // cpp_int's string constructor treats a leading 0 as an octal prefix;
  // strip the zeros so decimal digit strings stay decimal
  static BigInt from_digits(std::string_view digits) {
    std::size_t first = 0;
    while (first + 1 < digits.size() && digits[first] == '0') ++first;
    return BigInt{std::string(digits.substr(first))};
  }

  BigInt num_{0};
  BigInt den_{1};
};

}  // namespace seqsched
