// Copyright 2026 The truthful-arch Authors
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

#include "truthful_arch/rational.h"

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"
#include "truthful_arch/error.h"

namespace truthful_arch {
namespace {

using testing::R;

TEST(ParseDecimalTest, ExactDecimals) {
  EXPECT_EQ(ParseDecimal("62.33"), R(6233, 100));
  EXPECT_EQ(ParseDecimal("-90"), R(-90));
  EXPECT_EQ(ParseDecimal("+5"), R(5));
  EXPECT_EQ(ParseDecimal("0.8"), R(4, 5));
  EXPECT_EQ(ParseDecimal(".5"), R(1, 2));
  EXPECT_EQ(ParseDecimal("-0.25"), R(-1, 4));
  EXPECT_EQ(ParseDecimal("170/3"), R(170, 3));
  EXPECT_EQ(ParseDecimal("-4/6"), R(-2, 3));
}

TEST(ParseDecimalTest, RejectsMalformed) {
  for (const char* bad : {"", "-", ".", "1e2", "abc", "1.2.3", "1/0", "/3",
                          "3/", " 1", "0x10", "1,5"}) {
    try {
      ParseDecimal(bad);
      ADD_FAILURE() << "accepted \"" << bad << "\"";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << bad;
    }
  }
}

TEST(ParseDecimalTest, OverflowIsAParseError) {
  try {
    ParseDecimal("123456789012345678901234567890123456789012345");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
}

TEST(FormatDecimalTest, TableStyleRounding) {
  EXPECT_EQ(FormatDecimal(R(-1, 4), 2), "-0.25");
  EXPECT_EQ(FormatDecimal(R(170, 285), 2), "0.60");
  EXPECT_EQ(FormatDecimal(R(187, 270), 2), "0.69");
  EXPECT_EQ(FormatDecimal(R(150, 285), 2), "0.53");
  EXPECT_EQ(FormatDecimal(R(112, 270), 2), "0.41");
  EXPECT_EQ(FormatDecimal(R(170, 3), 2), "56.67");
  EXPECT_EQ(FormatDecimal(R(187, 3), 2), "62.33");
  EXPECT_EQ(FormatDecimal(R(112, 3), 2), "37.33");
  EXPECT_EQ(FormatDecimal(R(-22), 2), "-22.00");
  EXPECT_EQ(FormatDecimal(R(0), 2), "0.00");
  EXPECT_EQ(FormatDecimal(R(5, 4), 0), "1");
}

TEST(FormatDecimalTest, HalvesRoundAwayFromZero) {
  EXPECT_EQ(FormatDecimal(R(1, 200), 2), "0.01");
  EXPECT_EQ(FormatDecimal(R(-1, 200), 2), "-0.01");
  EXPECT_EQ(FormatDecimal(R(1, 201), 2), "0.00");
  EXPECT_EQ(FormatDecimal(R(-1, 201), 2), "0.00");  // no "-0.00"
  EXPECT_EQ(FormatDecimal(R(5, 2), 0), "3");
}

TEST(ToExactStringTest, DecimalsWhenTerminating) {
  EXPECT_EQ(ToExactString(R(6233, 100)), "62.33");
  EXPECT_EQ(ToExactString(R(-1, 4)), "-0.25");
  EXPECT_EQ(ToExactString(R(80)), "80");
  EXPECT_EQ(ToExactString(R(1, 3)), "1/3");
  EXPECT_EQ(ToExactString(R(-170, 285)), "-34/57");
}

TEST(ToExactStringTest, RoundTripsThroughParse) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-100000, 100000);
  std::uniform_int_distribution<long long> den(1, 4000);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational value = R(num(rng), den(rng));
    EXPECT_EQ(ParseDecimal(ToExactString(value)), value)
        << ToExactString(value);
  }
}

TEST(RationalTest, OverflowThrowsInsteadOfWrapping) {
  Rational big = R(1LL << 62);
  EXPECT_THROW(
      {
        for (int i = 0; i < 4; ++i) big *= big;
      },
      std::overflow_error);
}

}  // namespace
}  // namespace truthful_arch
