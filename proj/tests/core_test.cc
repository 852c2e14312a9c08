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

#include "truthful_arch/core.h"

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"
#include "truthful_arch/mechanism.h"

namespace truthful_arch {
namespace {

using testing::Fixture;
using testing::MakeScenario;
using testing::R;
using testing::Rs;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

constexpr const char* kTable1 = R"({
  "alternatives": [{"name": "AS1", "cost": "80"},
                   {"name": "AS2", "cost": "95"},
                   {"name": "AS3", "cost": "90"}],
  "stakeholders": [{"name": "s1"}, {"name": "s2"}, {"name": "s3"}],
  "actual": [["80", "70", "65"], ["-90", "50", "60"], ["-50", "50", "62"]],
  "reported": [["80", "70", "65"], ["-90", "50", "60"], ["-50", "50", "62"]]
})";

TEST(ValidateScenarioTest, Table1IsValid) {
  const Scenario s = ParseScenario(kTable1);
  ASSERT_EQ(s.num_alternatives(), 3);
  ASSERT_EQ(s.num_stakeholders(), 3);
  EXPECT_EQ(s.costs(), Rs({80, 95, 90}));
  EXPECT_EQ(s.reported[1].values, Rs({-90, 50, 60}));
  ASSERT_TRUE(s.actual.has_value());
  EXPECT_EQ((*s.actual)[2].values, Rs({-50, 50, 62}));
  EXPECT_EQ(s.alternatives[2].name, "AS3");
  EXPECT_EQ(s, Fixture("table1"));
}

TEST(ValidateScenarioTest, DecimalStringsAreExact) {
  const Scenario s = ParseScenario(R"({
    "alternatives": [{"cost": "0.1"}], "stakeholders": [{}],
    "reported": [["62.33"]]})");
  EXPECT_EQ(s.alternatives[0].cost, R(1, 10));
  EXPECT_EQ(s.reported[0].values[0], R(6233, 100));
  EXPECT_EQ(s.alternatives[0].name, "AS1");
  EXPECT_EQ(s.stakeholders[0].name, "s1");
  EXPECT_FALSE(s.actual.has_value());
}

TEST(ValidateScenarioTest, BenefitOutOfRange) {
  EXPECT_EQ(CodeOf([] {
              ParseScenario(R"({"alternatives": [{"cost": "1"}],
                "stakeholders": [{}], "reported": [["101"]]})");
            }),
            ErrorCode::kBenefitOutOfRange);
  EXPECT_EQ(CodeOf([] {
              ParseScenario(R"({"alternatives": [{"cost": "1"}],
                "stakeholders": [{}], "reported": [["0"]],
                "actual": [["-100.01"]]})");
            }),
            ErrorCode::kBenefitOutOfRange);
  // Both ends of the range are allowed.
  EXPECT_NO_THROW(ParseScenario(R"({"alternatives": [{"cost": "1"},
    {"cost": "1"}], "stakeholders": [{}], "reported": [["-100", "100"]]})"));
}

TEST(ValidateScenarioTest, NonPositiveCost) {
  EXPECT_EQ(CodeOf([] {
              ParseScenario(R"({"alternatives": [{"cost": "0"}],
                "stakeholders": [{}], "reported": [["1"]]})");
            }),
            ErrorCode::kNonPositiveCost);
  EXPECT_EQ(CodeOf([] {
              ParseScenario(R"({"alternatives": [{"cost": "-3"}],
                "stakeholders": [{}], "reported": [["1"]]})");
            }),
            ErrorCode::kNonPositiveCost);
}

TEST(ValidateScenarioTest, DimensionMismatch) {
  EXPECT_EQ(CodeOf([] {
              ParseScenario(R"({"alternatives": [{"cost": "1"},
                {"cost": "2"}], "stakeholders": [{}],
                "reported": [["1"]]})");
            }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([] {
              ParseScenario(R"({"alternatives": [{"cost": "1"}],
                "stakeholders": [{}, {}], "reported": [["1"]]})");
            }),
            ErrorCode::kDimensionMismatch);
  Scenario s = MakeScenario({1, 2}, {}, {{1, 2}});
  s.reported[0].values.pop_back();
  EXPECT_EQ(CodeOf([&] { ValidateScenario(s); }),
            ErrorCode::kDimensionMismatch);
}

TEST(ValidateScenarioTest, StructuralErrors) {
  EXPECT_EQ(CodeOf([] { ParseScenario("{}"); }), ErrorCode::kInvalidScenario);
  EXPECT_EQ(CodeOf([] { ParseScenario("[]"); }), ErrorCode::kInvalidScenario);
  EXPECT_EQ(CodeOf([] {
              ParseScenario(R"({"alternatives": [], "stakeholders": [{}],
                "reported": [[]]})");
            }),
            ErrorCode::kInvalidScenario);
  EXPECT_EQ(CodeOf([] { ParseScenario("{not json"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] {
              ParseScenario(R"({"alternatives": [{"cost": 0.5}],
                "stakeholders": [{}], "reported": [["1"]]})");
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { LoadScenarioFile("/nonexistent/scenario.json"); }),
            ErrorCode::kFileNotFound);
}

TEST(ValidateScenarioTest, MissingActualOnlyWhenDemanded) {
  const Scenario s = MakeScenario({1, 2}, {}, {{10, 20}});
  EXPECT_NO_THROW(ValidateScenario(s));
  EXPECT_EQ(CodeOf([&] { s.RequireActual(); }),
            ErrorCode::kMissingActualBenefits);
}

TEST(ValidateScenarioTest, ContributionScale) {
  const Scenario s = ParseScenario(R"({"scale": "contribution",
    "alternatives": [{"cost": "80"}, {"cost": "95"}], "stakeholders": [{}],
    "reported": [["0.8", "-1"]]})");
  EXPECT_EQ(s.reported[0].values, Rs({80, -100}));
  EXPECT_EQ(s.alternatives[0].cost, R(80));  // costs are not scaled
  EXPECT_EQ(CodeOf([] {
              ParseScenario(R"({"scale": "contribution",
                "alternatives": [{"cost": "1"}], "stakeholders": [{}],
                "reported": [["1.5"]]})");
            }),
            ErrorCode::kScoreOutOfRange);
}

TEST(ContributionToBenefitTest, Examples) {
  EXPECT_EQ(ContributionToBenefit(R(8, 10)), R(80));
  EXPECT_EQ(ContributionToBenefit(R(0)), R(0));
  EXPECT_EQ(ContributionToBenefit(R(-1)), R(-100));
  EXPECT_EQ(ContributionToBenefit(R(1)), R(100));
  EXPECT_EQ(CodeOf([] { ContributionToBenefit(R(101, 100)); }),
            ErrorCode::kScoreOutOfRange);
  EXPECT_EQ(CodeOf([] { ContributionToBenefit(R(-2)); }),
            ErrorCode::kScoreOutOfRange);
}

TEST(ArgmaxSetTest, FullTieSetAscending) {
  EXPECT_EQ(ArgmaxSet(Rs({1, 3, 2, 3})), (std::vector<int>{1, 3}));
  EXPECT_EQ(ArgmaxSet(Rs({-5})), (std::vector<int>{0}));
  EXPECT_EQ(ArgmaxSet(Rs({0, 0, 0})), (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(ArgmaxSet({}).empty());
  // Exact comparison: 1/3 and 333/1000 are not tied.
  std::vector<Rational> close{R(1, 3), R(333, 1000)};
  EXPECT_EQ(ArgmaxSet(close), (std::vector<int>{0}));
}

TEST(ScenarioRoundTripTest, SerializeThenParseIsIdentity) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> size(1, 5);
  std::uniform_int_distribution<long long> num(-10000, 10000);
  std::uniform_int_distribution<long long> den(1, 97);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = size(rng);
    const int m = size(rng);
    Scenario s;
    for (int j = 0; j < m; ++j) {
      s.alternatives.push_back(
          {j, "alt \"" + std::to_string(j) + "\"", R(den(rng), den(rng))});
    }
    for (int i = 0; i < n; ++i) s.stakeholders.push_back({i, "p" + std::to_string(i)});
    auto profiles = [&] {
      Profiles p;
      for (int i = 0; i < n; ++i) {
        BenefitProfile row{i, {}};
        for (int j = 0; j < m; ++j) row.values.push_back(R(num(rng), 100));
        p.push_back(row);
      }
      return p;
    };
    s.reported = profiles();
    if (coin(rng)) s.actual = profiles();
    ValidateScenario(s);
    const Scenario back = ParseScenario(ScenarioToJson(s).dump());
    EXPECT_EQ(back, s);
  }
}

}  // namespace
}  // namespace truthful_arch
