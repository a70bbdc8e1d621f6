// Copyright 2026 The lly Authors
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

#include "lly/rational.h"

#include <limits>

#include "lly/errors.h"

namespace lly {

namespace {

mpz_class FromInt64(int64_t v) {
  mpz_class z;
  // mpz_class(long) is 64-bit on LP64, but go through strings to stay
  // portable to platforms with 32-bit long.
  if (v >= std::numeric_limits<long>::min() &&
      v <= std::numeric_limits<long>::max()) {
    z = static_cast<long>(v);
  } else {
    z = mpz_class(std::to_string(v));
  }
  return z;
}

}  // namespace

Rational::Rational(int64_t value) : value_(FromInt64(value)) {}

Rational::Rational(int64_t numerator, int64_t denominator)
    : Rational(FromInt64(numerator), FromInt64(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) {
    throw InvalidArgument("rational with zero denominator");
  }
  value_.canonicalize();
}

bool Rational::fits_int64() const {
  static const mpz_class kMin(std::to_string(std::numeric_limits<int64_t>::min()));
  static const mpz_class kMax(std::to_string(std::numeric_limits<int64_t>::max()));
  return value_.get_num() >= kMin && value_.get_num() <= kMax &&
         value_.get_den() <= kMax;
}

int64_t Rational::to_int64() const {
  if (!is_integer() || !fits_int64()) {
    throw InvalidArgument("rational " + to_string() + " is not an int64");
  }
  return std::stoll(value_.get_num().get_str());
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw InvalidArgument("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational ParseRational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text), 1);
    return Rational(mpz_class(text.substr(0, slash)),
                    mpz_class(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + text + "'");
  }
}

}  // namespace lly
