// Copyright 2026 The numproj Authors
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

#include "numproj/exact.hpp"

#include <algorithm>
#include <cmath>

#include "numproj/errors.hpp"

namespace numproj {

Int128 checked_add(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("128-bit addition overflow");
  }
  return out;
}

Int128 checked_sub(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("128-bit subtraction overflow");
  }
  return out;
}

Int128 checked_mul(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("128-bit multiplication overflow");
  }
  return out;
}

Int128 pow2(int e) {
  if (e < 0 || e > 126) {
    throw DomainError("pow2 exponent out of range: " + std::to_string(e));
  }
  return static_cast<Int128>(1) << e;
}

std::string to_string(Int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work on the negative side so INT128_MIN does not overflow.
  std::string digits;
  Int128 v = negative ? value : -value;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Int128 parse_int128(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw ParseError("not an integer: '" + text + "'");
  }
  Int128 value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw ParseError("not an integer: '" + text + "'");
    }
    value = checked_mul(value, 10);
    value = negative ? checked_sub(value, c - '0') : checked_add(value, c - '0');
  }
  return value;
}

Dyadic::Dyadic(Int128 numerator, int exponent)
    : numerator_(numerator), exponent_(exponent) {
  if (exponent_ < 0) {
    throw DomainError("dyadic exponent must be nonnegative");
  }
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  while (exponent_ > 0 && (numerator_ & 1) == 0) {
    numerator_ /= 2;
    --exponent_;
  }
}

double Dyadic::to_double() const {
  return std::ldexp(static_cast<double>(numerator_), -exponent_);
}

std::string Dyadic::to_string() const {
  if (exponent_ == 0) return numproj::to_string(numerator_);
  return numproj::to_string(numerator_) + "/" + numproj::to_string(pow2(exponent_));
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(checked_mul(a.numerator_, b.numerator_),
                a.exponent_ + b.exponent_);
}

}  // namespace numproj
