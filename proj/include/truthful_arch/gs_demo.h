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

#ifndef TRUTHFUL_ARCH_GS_DEMO_H_
#define TRUTHFUL_ARCH_GS_DEMO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "truthful_arch/core.h"

// Exhaustive manipulability scans of ordinal voting rules. With at least
// three alternatives every onto, non-dictatorial rule admits a profitable
// misreport somewhere; dictatorships never do.
namespace truthful_arch::gs {

// A strict order over alternatives 0..m-1, most preferred first.
using Ordering = std::vector<int>;

struct OrdinalProfile {
  std::vector<Ordering> orderings;  // one per voter

  bool operator==(const OrdinalProfile&) const = default;
};

enum class RuleKind { kPlurality, kBorda, kDictatorship };

struct VotingRule {
  RuleKind kind = RuleKind::kPlurality;
  int dictator = 0;

  bool operator==(const VotingRule&) const = default;
};

// "plurality", "borda", "dictatorship" (with `dictator`) or
// "dictatorship(i)".
VotingRule ParseVotingRule(std::string_view id, int dictator = 0);
std::string RuleName(const VotingRule& rule);

// Throws kInvalidArgument unless every ordering is a permutation of 0..m-1
// for a common m >= 1.
void ValidateProfile(const OrdinalProfile& profile);

// Winner under `rule`, ties to the lowest index.
int EvaluateRule(const VotingRule& rule, const OrdinalProfile& profile);

// Position of `alternative` in `ordering`; 0 is the top.
int RankOf(const Ordering& ordering, int alternative);

// All m! orderings of 0..m-1 in lexicographic order.
std::vector<Ordering> AllOrderings(int alternatives);

struct GsWitness {
  OrdinalProfile profile;
  int voter = 0;
  Ordering misreport;
  int truthful_winner = 0;
  int manipulated_winner = 0;
};

struct GsScanResult {
  std::uint64_t total_profiles = 0;  // (m!)^n
  std::uint64_t manipulable_profiles = 0;
  std::optional<GsWitness> example;  // first witness in scan order
};

// Tries every misreport of every voter in every profile. A misreport is
// profitable when it elects an alternative the voter truly ranks strictly
// higher. Requires 1 <= voters, 1 <= alternatives <= 4, and
// (m!)^n * n * (m! - 1) <= budget (kBudgetExceeded otherwise).
GsScanResult GsScan(const VotingRule& rule, int voters, int alternatives,
                    std::uint64_t budget = DefaultCandidateBudget());

}  // namespace truthful_arch::gs

#endif  // TRUTHFUL_ARCH_GS_DEMO_H_
