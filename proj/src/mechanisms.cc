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

#include "truthful_arch/mechanisms.h"

#include <charconv>
#include <string>
#include <vector>

#include "truthful_arch/mechanism.h"

namespace truthful_arch {
namespace {

void CheckDictator(int dictator, std::size_t stakeholders) {
  if (dictator < 0 || dictator >= static_cast<int>(stakeholders)) {
    throw Error(ErrorCode::kInvalidDictator,
                "dictator " + std::to_string(dictator) +
                    " is not a stakeholder id in 0.." +
                    std::to_string(static_cast<int>(stakeholders) - 1));
  }
}

void CheckShape(std::span<const Rational> costs,
                std::span<const BenefitProfile> reports) {
  for (const BenefitProfile& p : reports) {
    if (p.values.size() != costs.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "report of stakeholder " + std::to_string(p.stakeholder_id) +
                      " has " + std::to_string(p.values.size()) +
                      " values for " + std::to_string(costs.size()) +
                      " alternatives");
    }
  }
}

// Fills selection, tie set and zero payments around the given scores.
MechanismOutcome FromScores(std::vector<Rational> scores,
                            std::size_t stakeholders) {
  MechanismOutcome out;
  out.tie = ArgmaxSet(scores);
  out.selected = out.tie.front();
  out.scores = std::move(scores);
  out.payments.assign(stakeholders, Rational(0));
  return out;
}

std::optional<int> ParseInt(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

MechanismSpec ParseMechanism(std::string_view id,
                             std::optional<int> dictator) {
  std::string_view base = id;
  if (auto open = id.find('('); open != std::string_view::npos) {
    if (id.back() != ')') {
      throw Error(ErrorCode::kUnknownMechanism,
                  "malformed mechanism id \"" + std::string(id) + "\"");
    }
    base = id.substr(0, open);
    std::optional<int> inline_dictator =
        ParseInt(id.substr(open + 1, id.size() - open - 2));
    if (!inline_dictator.has_value()) {
      throw Error(ErrorCode::kInvalidDictator,
                  "malformed dictator in \"" + std::string(id) + "\"");
    }
    if (dictator.has_value() && *dictator != *inline_dictator) {
      throw Error(ErrorCode::kInvalidDictator,
                  "conflicting dictators for \"" + std::string(id) + "\"");
    }
    dictator = inline_dictator;
  }

  auto need_dictator = [&]() {
    if (!dictator.has_value()) {
      throw Error(ErrorCode::kInvalidDictator,
                  "mechanism \"" + std::string(base) + "\" needs a dictator");
    }
    if (*dictator < 0) CheckDictator(*dictator, 0);
    return *dictator;
  };

  if (base == "cbam") return MechanismSpec::Cbam();
  if (base == "vcg") return MechanismSpec::Vcg();
  if (base == "dictator") return MechanismSpec::Dictator(need_dictator());
  if (base == "dictatorial-cbam") {
    return MechanismSpec::DictatorialCbam(need_dictator());
  }
  throw Error(ErrorCode::kUnknownMechanism,
              "unknown mechanism \"" + std::string(id) +
                  "\"; expected cbam, dictatorial-cbam, dictator or vcg");
}

std::string MechanismName(const MechanismSpec& spec) {
  switch (spec.kind) {
    case MechanismKind::kCbam: return "cbam";
    case MechanismKind::kVcg: return "vcg";
    case MechanismKind::kDictator:
      return "dictator(" + std::to_string(spec.dictator) + ")";
    case MechanismKind::kDictatorialCbam:
      return "dictatorial-cbam(" + std::to_string(spec.dictator) + ")";
  }
  return "unknown";
}

NetBenefitBasis ParseNetBenefitBasis(std::string_view text) {
  if (text == "actual") return NetBenefitBasis::kActual;
  if (text == "reported") return NetBenefitBasis::kReported;
  throw Error(ErrorCode::kInvalidArgument,
              "net benefit basis must be actual or reported, got \"" +
                  std::string(text) + "\"");
}

MechanismOutcome RunMechanism(const MechanismSpec& spec,
                              std::span<const Rational> costs,
                              std::span<const BenefitProfile> reports) {
  switch (spec.kind) {
    case MechanismKind::kCbam:
      return mechanisms::CbamSelect(costs, reports);
    case MechanismKind::kDictatorialCbam:
      return mechanisms::DictatorialCbamSelect(costs, reports, spec.dictator);
    case MechanismKind::kDictator:
      CheckShape(costs, reports);
      return mechanisms::DictatorSelect(reports, spec.dictator);
    case MechanismKind::kVcg:
      CheckShape(costs, reports);
      return mechanisms::VcgSelect(reports);
  }
  throw Error(ErrorCode::kUnknownMechanism, "unknown mechanism kind");
}

std::vector<Rational> ComputeNetBenefits(
    const MechanismOutcome& outcome, std::span<const BenefitProfile> basis) {
  std::vector<Rational> out;
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.push_back(basis[i].values[outcome.selected] + outcome.payments[i]);
  }
  return out;
}

MechanismOutcome ApplyMechanism(const MechanismSpec& spec,
                                const Scenario& scenario,
                                NetBenefitBasis basis) {
  ValidateScenario(scenario);
  const std::vector<Rational> costs = scenario.costs();
  MechanismOutcome out = RunMechanism(spec, costs, scenario.reported);
  const Profiles* source = nullptr;
  if (basis == NetBenefitBasis::kReported) {
    source = &scenario.reported;
  } else if (scenario.actual.has_value()) {
    source = &*scenario.actual;
  }
  if (source != nullptr) {
    out.net_benefits = ComputeNetBenefits(out, *source);
    if (out.vcg.has_value()) out.vcg->net_benefits = out.net_benefits;
  }
  return out;
}

namespace mechanisms {

std::vector<Rational> CbamDesirability(
    std::span<const Rational> costs, std::span<const BenefitProfile> reports) {
  CheckShape(costs, reports);
  const Rational n(static_cast<long long>(reports.size()));
  std::vector<Rational> scores;
  scores.reserve(costs.size());
  for (std::size_t j = 0; j < costs.size(); ++j) {
    Rational total(0);
    for (const BenefitProfile& p : reports) total += p.values[j];
    scores.push_back(total / (n * costs[j]));
  }
  return scores;
}

MechanismOutcome CbamSelect(std::span<const Rational> costs,
                            std::span<const BenefitProfile> reports) {
  return FromScores(CbamDesirability(costs, reports), reports.size());
}

MechanismOutcome DictatorialCbamSelect(std::span<const Rational> costs,
                                       std::span<const BenefitProfile> reports,
                                       int dictator) {
  CheckDictator(dictator, reports.size());
  CheckShape(costs, reports);
  const std::vector<Rational>& report = reports[dictator].values;
  std::vector<Rational> scores;
  scores.reserve(costs.size());
  for (std::size_t j = 0; j < costs.size(); ++j) {
    scores.push_back(report[j] / costs[j]);
  }
  return FromScores(std::move(scores), reports.size());
}

MechanismOutcome DictatorSelect(std::span<const BenefitProfile> reports,
                                int dictator) {
  CheckDictator(dictator, reports.size());
  return FromScores(reports[dictator].values, reports.size());
}

MechanismOutcome VcgSelect(std::span<const BenefitProfile> reports) {
  if (reports.empty()) {
    throw Error(ErrorCode::kInvalidScenario, "VCG needs at least one report");
  }
  const std::size_t n = reports.size();
  const std::size_t m = reports.front().values.size();

  VcgTrace trace;
  trace.trb.assign(m, Rational(0));
  for (const BenefitProfile& p : reports) {
    for (std::size_t k = 0; k < m; ++k) trace.trb[k] += p.values[k];
  }

  MechanismOutcome out;
  out.tie = ArgmaxSet(trace.trb);
  out.selected = out.tie.front();
  trace.selected = out.selected;

  // Others' total at alternative k is TRB_k - r_i(k).
  trace.t_plus.reserve(n);
  trace.t_minus.reserve(n);
  trace.payments.reserve(n);
  for (const BenefitProfile& p : reports) {
    Rational plus = trace.trb[out.selected] - p.values[out.selected];
    Rational minus = trace.trb[0] - p.values[0];
    for (std::size_t k = 1; k < m; ++k) {
      Rational others = trace.trb[k] - p.values[k];
      if (others > minus) minus = others;
    }
    trace.payments.push_back(plus - minus);
    trace.t_plus.push_back(std::move(plus));
    trace.t_minus.push_back(std::move(minus));
  }

  out.scores = trace.trb;
  out.payments = trace.payments;
  out.vcg = std::move(trace);
  return out;
}

std::vector<Rational> CbamDesirability(const Scenario& scenario) {
  ValidateScenario(scenario);
  return CbamDesirability(scenario.costs(), scenario.reported);
}

MechanismOutcome CbamSelect(const Scenario& scenario) {
  return ApplyMechanism(MechanismSpec::Cbam(), scenario);
}

MechanismOutcome DictatorialCbamSelect(const Scenario& scenario,
                                       int dictator) {
  return ApplyMechanism(MechanismSpec::DictatorialCbam(dictator), scenario);
}

MechanismOutcome DictatorSelect(const Scenario& scenario, int dictator) {
  return ApplyMechanism(MechanismSpec::Dictator(dictator), scenario);
}

MechanismOutcome VcgSelect(const Scenario& scenario, NetBenefitBasis basis) {
  return ApplyMechanism(MechanismSpec::Vcg(), scenario, basis);
}

}  // namespace mechanisms
}  // namespace truthful_arch
