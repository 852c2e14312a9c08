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

#ifndef TRUTHFUL_ARCH_STRATEGIC_H_
#define TRUTHFUL_ARCH_STRATEGIC_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "truthful_arch/core.h"
#include "truthful_arch/mechanism.h"

// Exhaustive search for profitable misreports on a uniform benefit grid.
//
// A candidate assigns every manipulator a report from the grid
// {-100, -100 + step, ..., 100}^m. Non-manipulators keep their reported
// profiles; the truthful baseline has each manipulator report her actual
// profile. Candidates are enumerated lexicographically (manipulators in the
// order given, alternatives in id order, grid values ascending) and the
// first candidate of maximal gain is the witness.
namespace truthful_arch::strategic {

enum class Objective {
  kBenefit,     // u_i(selected)
  kNetBenefit,  // u_i(selected) + p_i
};

Objective ParseObjective(std::string_view text);
std::string_view ObjectiveName(Objective objective);

// What counts as a successful coalition misreport.
enum class CoalitionRule {
  kStrictAll,         // every member strictly gains
  kWeakAllStrictOne,  // nobody loses and someone strictly gains
};

struct ManipulationQuery {
  MechanismSpec mechanism;
  Scenario scenario;               // actual profiles required
  std::vector<int> manipulators;   // distinct stakeholder ids, non-empty
  Objective objective = Objective::kBenefit;
  Rational grid_step{10};          // must divide 200 into a whole number
};

struct SearchOptions {
  std::uint64_t max_candidates = DefaultCandidateBudget();
  // Worker threads; results are identical for every value.
  unsigned threads = 1;
  CoalitionRule coalition_rule = CoalitionRule::kStrictAll;
};

struct ManipulationReport {
  bool found = false;
  // Misreports for the manipulators, in query order; present iff found.
  std::optional<Profiles> witness;
  // Objective summed over the manipulators.
  Rational truthful_value;
  Rational best_value;
  Rational gain;  // best_value - truthful_value; > 0 iff found
  // Per-manipulator objective, query order.
  std::vector<Rational> member_truthful;
  std::vector<Rational> member_best;
  MechanismOutcome truthful_outcome;
  std::optional<MechanismOutcome> manipulated_outcome;
  std::uint64_t search_size = 0;
};

// Number of grid values in [-100, 100] for `step`. Throws kInvalidArgument
// unless step > 0 and 200 / step is a whole number.
std::uint64_t GridPointCount(const Rational& step);

// Objective values of every stakeholder under the reports `reports`, judged
// against the true benefits `actual`.
std::vector<Rational> EvaluateObjective(const MechanismSpec& mechanism,
                                        std::span<const Rational> costs,
                                        std::span<const BenefitProfile> reports,
                                        std::span<const BenefitProfile> actual,
                                        Objective objective);

// Requires exactly one manipulator.
ManipulationReport SearchUnilateral(const ManipulationQuery& query,
                                    const SearchOptions& options = {});

// Requires at least two manipulators.
ManipulationReport SearchCoalition(const ManipulationQuery& query,
                                   const SearchOptions& options = {});

// Dispatches on the coalition size.
ManipulationReport Search(const ManipulationQuery& query,
                          const SearchOptions& options = {});

// One unilateral search per stakeholder against the all-truthful profile
// (every reported profile replaced by the actual one). The mechanism is
// grid-truthful on this scenario iff no report has found == true. The
// objective is net benefit for payment-bearing mechanisms and benefit
// otherwise.
std::vector<ManipulationReport> VerifyTruthfulness(
    const MechanismSpec& mechanism, const Scenario& scenario,
    const Rational& grid_step, const SearchOptions& options = {});

// The objective VerifyTruthfulness uses for `mechanism`.
Objective DefaultObjective(const MechanismSpec& mechanism);

}  // namespace truthful_arch::strategic

#endif  // TRUTHFUL_ARCH_STRATEGIC_H_
