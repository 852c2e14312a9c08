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

#ifndef TRUTHFUL_ARCH_MECHANISM_H_
#define TRUTHFUL_ARCH_MECHANISM_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "truthful_arch/core.h"

namespace truthful_arch {

enum class MechanismKind {
  kCbam,             // max average-benefit / cost
  kDictatorialCbam,  // the dictator's benefit / cost
  kDictator,         // the dictator's argmax, costs ignored
  kVcg,              // max total reported benefit, Clarke pivot payments
};

// A selection method plus its parameters.
struct MechanismSpec {
  MechanismKind kind = MechanismKind::kCbam;
  int dictator = 0;  // stakeholder id; only read by the dictatorial kinds

  static MechanismSpec Cbam() { return {MechanismKind::kCbam, 0}; }
  static MechanismSpec DictatorialCbam(int d) {
    return {MechanismKind::kDictatorialCbam, d};
  }
  static MechanismSpec Dictator(int d) {
    return {MechanismKind::kDictator, d};
  }
  static MechanismSpec Vcg() { return {MechanismKind::kVcg, 0}; }

  bool is_dictatorial() const {
    return kind == MechanismKind::kDictatorialCbam ||
           kind == MechanismKind::kDictator;
  }
  bool has_payments() const { return kind == MechanismKind::kVcg; }

  bool operator==(const MechanismSpec&) const = default;
};

// Accepts "cbam", "vcg", "dictator", "dictatorial-cbam", and the
// parameterised forms "dictator(1)" / "dictatorial-cbam(1)". The dictatorial
// ids need a dictator either inline or via `dictator`.
MechanismSpec ParseMechanism(std::string_view id,
                             std::optional<int> dictator = std::nullopt);

// Canonical id, e.g. "cbam" or "dictator(1)"; ParseMechanism inverts it.
std::string MechanismName(const MechanismSpec& spec);

// Per-run details of the VCG module.
struct VcgTrace {
  std::vector<Rational> trb;  // total reported benefit per alternative
  int selected = 0;
  std::vector<Rational> t_plus;   // others' reported total at the selection
  std::vector<Rational> t_minus;  // others' best achievable total
  std::vector<Rational> payments;  // t_plus - t_minus, always <= 0
  std::optional<std::vector<Rational>> net_benefits;

  bool operator==(const VcgTrace&) const = default;
};

struct MechanismOutcome {
  int selected = 0;                 // min(tie)
  std::vector<Rational> scores;     // desirability, reported benefit or TRB
  std::vector<Rational> payments;   // zero unless VCG
  std::optional<std::vector<Rational>> net_benefits;
  std::vector<int> tie;             // full argmax set of scores, ascending
  std::optional<VcgTrace> vcg;

  bool operator==(const MechanismOutcome&) const = default;
};

// Which profile net benefits are read from: the true benefits (default) or
// the reports themselves.
enum class NetBenefitBasis { kActual, kReported };

NetBenefitBasis ParseNetBenefitBasis(std::string_view text);

// Selection on raw inputs, without net benefits. `reports` has one profile
// per stakeholder and `costs` one entry per alternative. Throws
// kInvalidDictator for a dictator outside 0..n-1.
MechanismOutcome RunMechanism(const MechanismSpec& spec,
                              std::span<const Rational> costs,
                              std::span<const BenefitProfile> reports);

// basis[i](selected) + payments[i] for every stakeholder.
std::vector<Rational> ComputeNetBenefits(
    const MechanismOutcome& outcome, std::span<const BenefitProfile> basis);

// Runs the mechanism on the scenario's reported profiles and attaches net
// benefits from the requested basis. Under kActual without actual profiles
// the net benefits are left empty.
MechanismOutcome ApplyMechanism(
    const MechanismSpec& spec, const Scenario& scenario,
    NetBenefitBasis basis = NetBenefitBasis::kActual);

}  // namespace truthful_arch

#endif  // TRUTHFUL_ARCH_MECHANISM_H_
