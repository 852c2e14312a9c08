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

#ifndef TRUTHFUL_ARCH_MECHANISMS_H_
#define TRUTHFUL_ARCH_MECHANISMS_H_

#include <span>
#include <vector>

#include "truthful_arch/core.h"
#include "truthful_arch/mechanism.h"

// The four selection algorithms. Every argmax is exact and ties go to the
// lowest alternative index.
namespace truthful_arch::mechanisms {

// d_j = (sum_i r_i(j)) / (n * c_j).
std::vector<Rational> CbamDesirability(std::span<const Rational> costs,
                                       std::span<const BenefitProfile> reports);

MechanismOutcome CbamSelect(std::span<const Rational> costs,
                            std::span<const BenefitProfile> reports);

// score_j = r_dictator(j) / c_j; other reports are ignored.
MechanismOutcome DictatorialCbamSelect(std::span<const Rational> costs,
                                       std::span<const BenefitProfile> reports,
                                       int dictator);

// score_j = r_dictator(j); costs are ignored.
MechanismOutcome DictatorSelect(std::span<const BenefitProfile> reports,
                                int dictator);

// Selects argmax_k TRB_k with TRB_k = sum_i r_i(k) and charges the Clarke
// pivot payment
//
//   p_i = sum_{j != i} r_j(k*) - max_k sum_{j != i} r_j(k)
//
// which is never positive. The second term does not depend on r_i.
MechanismOutcome VcgSelect(std::span<const BenefitProfile> reports);

// Scenario-level entry points; net benefits come from the actual profiles
// when present (or the reports under NetBenefitBasis::kReported).
std::vector<Rational> CbamDesirability(const Scenario& scenario);
MechanismOutcome CbamSelect(const Scenario& scenario);
MechanismOutcome DictatorialCbamSelect(const Scenario& scenario, int dictator);
MechanismOutcome DictatorSelect(const Scenario& scenario, int dictator);
MechanismOutcome VcgSelect(const Scenario& scenario,
                           NetBenefitBasis basis = NetBenefitBasis::kActual);

}  // namespace truthful_arch::mechanisms

#endif  // TRUTHFUL_ARCH_MECHANISMS_H_
