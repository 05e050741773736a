// Copyright 2026 The hspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hspec {

/// Exact rational number, canonical (gcd 1, positive denominator).
///
/// Bound formulas take integer inputs and must be compared strictly, so
/// everything here stays exact; doubles enter only through the dyadic
/// conversion in from_double_exact.
class Rational {
 public:
  using Int = boost::multiprecision::cpp_int;

  Rational() : q_(0) {}
  Rational(long long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Int& value) : q_(value) {}  // NOLINT(google-explicit-constructor)

  Rational(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    q_ = boost::multiprecision::cpp_rational(num, den);
  }

  Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

  // Exact value of the double (doubles are dyadic rationals).
  static Rational from_double_exact(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("Rational: non-finite double");
    Rational r;
    r.q_ = boost::multiprecision::cpp_rational(value);
    return r;
  }

  Int num() const { return numerator(q_); }
  Int den() const { return denominator(q_); }

  double to_double() const { return static_cast<double>(q_); }

  /// Canonical "num/den" rendering, e.g. "3/38"; integers render as "n/1".
  std::string str() const {
    std::ostringstream os;
    os << numerator(q_) << "/" << denominator(q_);
    return os.str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.q_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.q_ / b.q_);
  }
  Rational operator-() const { return Rational(-q_); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  explicit Rational(boost::multiprecision::cpp_rational q) : q_(std::move(q)) {}

  boost::multiprecision::cpp_rational q_;
};

}  // namespace hspec
