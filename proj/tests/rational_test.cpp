// Copyright 2026 The l1cut Authors
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


#include <gtest/gtest.h>

#include "l1cut/rational.hpp"

namespace l1cut {
namespace {

TEST(Rational, ReducesToLowestTerms) {
  EXPECT_EQ(to_string(rat(6, 4)), "3/2");
  EXPECT_EQ(rat(0, 5), Rat(0));
  EXPECT_EQ(denominator_of(rat(0, 5)), 1);
  EXPECT_EQ(to_string(rat(3, -9)), "-1/3");
  EXPECT_EQ(denominator_of(rat(3, -9)), 3);
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(rat(1, 0), InputError);
  EXPECT_THROW(rat(Integer(1), Integer(0)), InputError);
  EXPECT_THROW(parse_rat("3/0"), InputError);
}

TEST(Rational, PrintsIntegersWithoutDenominator) {
  EXPECT_EQ(to_string(rat(8, 4)), "2");
  EXPECT_EQ(to_decimal(rat(4, 3)), "1.33333");
  EXPECT_EQ(to_decimal(rat(7, 5)), "1.4");
}

TEST(Rational, Parses) {
  EXPECT_EQ(parse_rat("7/5"), rat(7, 5));
  EXPECT_EQ(parse_rat(" -12 "), rat(-12));
  EXPECT_EQ(parse_rat("0.125"), rat(1, 8));
  EXPECT_EQ(parse_rat("-1.5"), rat(-3, 2));
  EXPECT_EQ(parse_rat("+2/6"), rat(1, 3));
  EXPECT_THROW(parse_rat(""), InputError);
  EXPECT_THROW(parse_rat("1/2/3"), InputError);
  EXPECT_THROW(parse_rat("abc"), InputError);
  EXPECT_THROW(parse_rat("1e5"), InputError);
}

TEST(Rational, FloorAndLcm) {
  EXPECT_EQ(floor_of(rat(7, 2)), 3);
  EXPECT_EQ(floor_of(rat(-7, 2)), -4);
  EXPECT_EQ(floor_of(rat(-4)), -4);
  EXPECT_EQ(lcm(Integer(4), Integer(6)), 12);
}

TEST(Rational, SimplestBetween) {
  EXPECT_EQ(simplest_between(rat(1, 3), rat(1, 2)), rat(1, 2));
  EXPECT_EQ(simplest_between(rat(3, 10), rat(4, 10)), rat(1, 3));
  EXPECT_EQ(simplest_between(rat(5, 2), rat(7, 2)), rat(3));
  EXPECT_EQ(simplest_between(rat(333, 1000), rat(334, 1000)), rat(1, 3));
}

TEST(Rational, ApproximateStaysWithinTolerance) {
  EXPECT_EQ(approximate(rat(1234567, 1000000), Rat(0)), rat(1234567, 1000000));
  const Rat eps = rat(1, 100);
  for (std::int64_t p = 1; p < 200; p += 7) {
    for (std::int64_t q = 1; q < 60; q += 5) {
      const Rat value = rat(p, q);
      const Rat approx = approximate(value, eps);
      EXPECT_LE(abs(approx - value), eps * value) << to_string(value);
      EXPECT_LE(denominator_of(approx), denominator_of(value));
    }
  }
  EXPECT_EQ(approximate(rat(3141593, 1000000), rat(1, 1000)), rat(22, 7));
  EXPECT_THROW(approximate(rat(1), rat(1)), InputError);
  EXPECT_THROW(approximate(rat(0), rat(1, 2)), InputError);
}

}  // namespace
}  // namespace l1cut
