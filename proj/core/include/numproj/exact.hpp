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

#pragma once

#include <compare>
#include <string>

namespace numproj {

/// Signed 128-bit integer used for every exact coefficient in the library.
using Int128 = __int128;

Int128 checked_add(Int128 a, Int128 b);
Int128 checked_sub(Int128 a, Int128 b);
Int128 checked_mul(Int128 a, Int128 b);

/// 2^e as an exact integer, 0 <= e <= 126.
Int128 pow2(int e);

std::string to_string(Int128 value);

/// Parses an optionally signed decimal integer; throws ParseError on junk or
/// OverflowError when the value does not fit.
Int128 parse_int128(const std::string& text);

/// numerator / 2^exponent, kept in lowest terms (odd numerator or exponent 0).
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(Int128 numerator, int exponent);

  Int128 numerator() const noexcept { return numerator_; }
  int exponent() const noexcept { return exponent_; }

  /// Exact whenever |numerator| < 2^53, which holds for every projector
  /// coefficient up to 24 qubits.
  double to_double() const;

  std::string to_string() const;

  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic&, const Dyadic&) = default;

 private:
  Int128 numerator_ = 0;
  int exponent_ = 0;
};

}  // namespace numproj
