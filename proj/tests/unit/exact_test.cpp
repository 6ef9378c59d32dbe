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

#include <gtest/gtest.h>

#include <limits>

#include "numproj/errors.hpp"

namespace numproj {
namespace {

const Int128 kMax = std::numeric_limits<Int128>::max();
const Int128 kMin = std::numeric_limits<Int128>::min();

TEST(CheckedArithmetic, DetectsOverflowInsteadOfWrapping) {
  EXPECT_THROW(checked_add(kMax, 1), OverflowError);
  EXPECT_THROW(checked_sub(kMin, 1), OverflowError);
  EXPECT_THROW(checked_mul(kMax / 2 + 1, 2), OverflowError);
  EXPECT_THROW(checked_mul(pow2(64), pow2(64)), OverflowError);
  EXPECT_EQ(checked_mul(pow2(63), pow2(63)), pow2(126));
  EXPECT_EQ(checked_add(kMax - 1, 1), kMax);
}

TEST(CheckedArithmetic, Pow2Range) {
  EXPECT_EQ(pow2(0), 1);
  EXPECT_EQ(pow2(10), 1024);
  EXPECT_THROW(pow2(127), DomainError);
  EXPECT_THROW(pow2(-1), DomainError);
}

TEST(Int128Text, FormatsExtremes) {
  EXPECT_EQ(to_string(Int128{0}), "0");
  EXPECT_EQ(to_string(Int128{-42}), "-42");
  EXPECT_EQ(to_string(kMax), "170141183460469231731687303715884105727");
  EXPECT_EQ(to_string(kMin), "-170141183460469231731687303715884105728");
}

TEST(Int128Text, ParsesAndRejects) {
  EXPECT_EQ(parse_int128("12345"), 12345);
  EXPECT_EQ(parse_int128("-7"), -7);
  EXPECT_EQ(parse_int128(to_string(kMin)), kMin);
  EXPECT_THROW(parse_int128("170141183460469231731687303715884105728"), OverflowError);
  EXPECT_THROW(parse_int128("12a"), ParseError);
  EXPECT_THROW(parse_int128("-"), ParseError);
}

TEST(Dyadic, NormalizesToLowestTerms) {
  const Dyadic d(6, 4);  // 6/16 = 3/8
  EXPECT_EQ(d.numerator(), 3);
  EXPECT_EQ(d.exponent(), 3);
  EXPECT_EQ(d.to_string(), "3/8");
  EXPECT_EQ(Dyadic(0, 9), Dyadic(0, 0));
  EXPECT_EQ(Dyadic(-8, 3).to_string(), "-1");
}

TEST(Dyadic, ConvertsExactlyAndMultiplies) {
  EXPECT_EQ(Dyadic(3, 3).to_double(), 0.375);
  EXPECT_EQ(Dyadic(-1, 3).to_double(), -0.125);
  EXPECT_EQ(Dyadic(3, 3) * Dyadic(2, 1), Dyadic(3, 3));
  EXPECT_THROW(Dyadic(1, -1), DomainError);
}

}  // namespace
}  // namespace numproj
