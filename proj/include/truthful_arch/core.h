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

#ifndef TRUTHFUL_ARCH_CORE_H_
#define TRUTHFUL_ARCH_CORE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "truthful_arch/error.h"
#include "truthful_arch/rational.h"

namespace truthful_arch {

// Benefits are bounded to [kMinBenefit, kMaxBenefit] for both actual and
// reported profiles.
inline const Rational kMinBenefit{-100};
inline const Rational kMaxBenefit{100};

// Candidate cap for exhaustive searches when TRUTHFUL_ARCH_BUDGET is unset.
inline constexpr std::uint64_t kDefaultCandidateBudget = 10'000'000;

// Returns TRUTHFUL_ARCH_BUDGET when set to a positive integer, otherwise
// kDefaultCandidateBudget. Throws kInvalidArgument on a malformed value.
std::uint64_t DefaultCandidateBudget();

struct Alternative {
  int id = 0;
  std::string name;
  Rational cost;  // > 0

  bool operator==(const Alternative&) const = default;
};

struct Stakeholder {
  int id = 0;
  std::string name;

  bool operator==(const Stakeholder&) const = default;
};

// One stakeholder's benefit for every alternative, in alternative-id order.
struct BenefitProfile {
  int stakeholder_id = 0;
  std::vector<Rational> values;

  bool operator==(const BenefitProfile&) const = default;
};

using Profiles = std::vector<BenefitProfile>;

struct Scenario {
  std::vector<Alternative> alternatives;
  std::vector<Stakeholder> stakeholders;
  std::optional<Profiles> actual;
  Profiles reported;

  int num_alternatives() const {
    return static_cast<int>(alternatives.size());
  }
  int num_stakeholders() const {
    return static_cast<int>(stakeholders.size());
  }

  std::vector<Rational> costs() const;

  // The true benefits; throws kMissingActualBenefits when absent.
  const Profiles& RequireActual() const;

  bool operator==(const Scenario&) const = default;
};

// Checks every Scenario invariant and throws the matching Error on the
// first violation. Returns the scenario unchanged on success.
const Scenario& ValidateScenario(const Scenario& scenario);

// Builds a Scenario from the JSON scenario document and validates it.
//
//   {
//     "alternatives": [{"name": "AS1", "cost": "80"}, ...],
//     "stakeholders": [{"name": "s1"}, ...],
//     "actual":   [["80", "70", "65"], ...],   // optional, n x m
//     "reported": [["80", "50", "-10"], ...],  // n x m
//     "scale":    "benefit" | "contribution"   // optional
//   }
//
// Values are decimal strings ("62.33" is exactly 6233/100); integer JSON
// numbers are accepted too. With "scale": "contribution" every value is a
// contribution score in [-1, 1] and is converted with
// ContributionToBenefit.
Scenario ValidateScenario(const nlohmann::json& document);

Scenario ParseScenario(std::string_view json_text);
Scenario LoadScenarioFile(const std::string& path);

// Emits the document form with exact decimal strings; always in the
// benefit scale.
nlohmann::json ScenarioToJson(const Scenario& scenario);

// score x 100; score must lie in [-1, 1].
Rational ContributionToBenefit(const Rational& score);

// Indices attaining the maximum, ascending. Empty input gives an empty set.
std::vector<int> ArgmaxSet(std::span<const Rational> values);

}  // namespace truthful_arch

#endif  // TRUTHFUL_ARCH_CORE_H_
