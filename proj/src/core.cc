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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace truthful_arch {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidScenario: return "InvalidScenario";
    case ErrorCode::kBenefitOutOfRange: return "BenefitOutOfRange";
    case ErrorCode::kNonPositiveCost: return "NonPositiveCost";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kMissingActualBenefits: return "MissingActualBenefits";
    case ErrorCode::kScoreOutOfRange: return "ScoreOutOfRange";
    case ErrorCode::kUnknownMechanism: return "UnknownMechanism";
    case ErrorCode::kInvalidDictator: return "InvalidDictator";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kGridTooFine: return "GridTooFine";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kFileNotFound: return "FileNotFound";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(message) {}

std::uint64_t DefaultCandidateBudget() {
  const char* raw = std::getenv("TRUTHFUL_ARCH_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultCandidateBudget;
  std::string text(raw);
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9' || value > (UINT64_MAX - 9) / 10) {
      throw Error(ErrorCode::kInvalidArgument,
                  "TRUTHFUL_ARCH_BUDGET must be a positive integer, got \"" +
                      text + "\"");
    }
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (value == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "TRUTHFUL_ARCH_BUDGET must be a positive integer");
  }
  return value;
}

std::vector<Rational> Scenario::costs() const {
  std::vector<Rational> out;
  out.reserve(alternatives.size());
  for (const Alternative& a : alternatives) out.push_back(a.cost);
  return out;
}

const Profiles& Scenario::RequireActual() const {
  if (!actual.has_value()) {
    throw Error(ErrorCode::kMissingActualBenefits,
                "this operation needs the stakeholders' actual benefits; "
                "add an \"actual\" matrix to the scenario");
  }
  return *actual;
}

namespace {

void ValidateProfiles(const Profiles& profiles, int n, int m,
                      std::string_view which) {
  const std::string label(which);
  if (static_cast<int>(profiles.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                label + " has " + std::to_string(profiles.size()) +
                    " profiles for " + std::to_string(n) + " stakeholders");
  }
  for (int i = 0; i < n; ++i) {
    const BenefitProfile& p = profiles[i];
    if (p.stakeholder_id != i) {
      throw Error(ErrorCode::kDimensionMismatch,
                  label + "[" + std::to_string(i) + "] belongs to stakeholder " +
                      std::to_string(p.stakeholder_id));
    }
    if (static_cast<int>(p.values.size()) != m) {
      throw Error(ErrorCode::kDimensionMismatch,
                  label + "[" + std::to_string(i) + "] has " +
                      std::to_string(p.values.size()) + " values for " +
                      std::to_string(m) + " alternatives");
    }
    for (int j = 0; j < m; ++j) {
      if (p.values[j] < kMinBenefit || p.values[j] > kMaxBenefit) {
        throw Error(ErrorCode::kBenefitOutOfRange,
                    label + "[" + std::to_string(i) + "][" +
                        std::to_string(j) + "] = " +
                        ToExactString(p.values[j]) +
                        " is outside [-100, 100]");
      }
    }
  }
}

Rational ReadNumber(const nlohmann::json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return ParseDecimal(value.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, where + ": " + e.detail());
    }
  }
  if (value.is_number_integer()) {
    return Rational(Integer(value.get<std::int64_t>()));
  }
  if (value.is_number()) {
    throw Error(ErrorCode::kParseError,
                where + ": fractional values must be decimal strings so they "
                        "stay exact (e.g. \"62.33\")");
  }
  throw Error(ErrorCode::kParseError, where + ": expected a decimal string");
}

const nlohmann::json& RequireArray(const nlohmann::json& doc,
                                   const std::string& key) {
  if (!doc.contains(key)) {
    throw Error(ErrorCode::kInvalidScenario, "missing \"" + key + "\"");
  }
  const nlohmann::json& value = doc.at(key);
  if (!value.is_array()) {
    throw Error(ErrorCode::kInvalidScenario, "\"" + key + "\" must be an array");
  }
  return value;
}

std::string OptionalName(const nlohmann::json& entry, const std::string& where,
                         std::string fallback) {
  if (!entry.contains("name")) return fallback;
  if (!entry.at("name").is_string()) {
    throw Error(ErrorCode::kInvalidScenario, where + ".name must be a string");
  }
  return entry.at("name").get<std::string>();
}

Profiles ReadMatrix(const nlohmann::json& doc, const std::string& key, int n,
                    int m, bool contribution_scale) {
  const nlohmann::json& rows = RequireArray(doc, key);
  if (static_cast<int>(rows.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                key + " has " + std::to_string(rows.size()) + " rows for " +
                    std::to_string(n) + " stakeholders");
  }
  Profiles out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const std::string row_where = key + "[" + std::to_string(i) + "]";
    const nlohmann::json& row = rows[i];
    if (!row.is_array()) {
      throw Error(ErrorCode::kInvalidScenario, row_where + " must be an array");
    }
    if (static_cast<int>(row.size()) != m) {
      throw Error(ErrorCode::kDimensionMismatch,
                  row_where + " has " + std::to_string(row.size()) +
                      " values for " + std::to_string(m) + " alternatives");
    }
    BenefitProfile profile{i, {}};
    profile.values.reserve(m);
    for (int j = 0; j < m; ++j) {
      const std::string where = row_where + "[" + std::to_string(j) + "]";
      Rational v = ReadNumber(row[j], where);
      if (contribution_scale) {
        try {
          v = ContributionToBenefit(v);
        } catch (const Error& e) {
          throw Error(e.code(), where + ": " + e.detail());
        }
      }
      profile.values.push_back(v);
    }
    out.push_back(std::move(profile));
  }
  return out;
}

}  // namespace

const Scenario& ValidateScenario(const Scenario& scenario) {
  const int m = scenario.num_alternatives();
  const int n = scenario.num_stakeholders();
  if (m < 1) {
    throw Error(ErrorCode::kInvalidScenario, "at least one alternative needed");
  }
  if (n < 1) {
    throw Error(ErrorCode::kInvalidScenario, "at least one stakeholder needed");
  }
  for (int j = 0; j < m; ++j) {
    const Alternative& a = scenario.alternatives[j];
    if (a.id != j) {
      throw Error(ErrorCode::kInvalidScenario,
                  "alternative ids must be 0..m-1 in order; position " +
                      std::to_string(j) + " has id " + std::to_string(a.id));
    }
    if (a.cost <= 0) {
      throw Error(ErrorCode::kNonPositiveCost,
                  "alternative \"" + a.name + "\" has cost " +
                      ToExactString(a.cost) + "; costs must be positive");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (scenario.stakeholders[i].id != i) {
      throw Error(ErrorCode::kInvalidScenario,
                  "stakeholder ids must be 0..n-1 in order; position " +
                      std::to_string(i) + " has id " +
                      std::to_string(scenario.stakeholders[i].id));
    }
  }
  ValidateProfiles(scenario.reported, n, m, "reported");
  if (scenario.actual.has_value()) {
    ValidateProfiles(*scenario.actual, n, m, "actual");
  }
  return scenario;
}

Scenario ValidateScenario(const nlohmann::json& document) {
  if (!document.is_object()) {
    throw Error(ErrorCode::kInvalidScenario,
                "scenario document must be a JSON object");
  }
  bool contribution_scale = false;
  if (document.contains("scale")) {
    const nlohmann::json& scale = document.at("scale");
    if (scale == "contribution") {
      contribution_scale = true;
    } else if (scale != "benefit") {
      throw Error(ErrorCode::kInvalidScenario,
                  "\"scale\" must be \"benefit\" or \"contribution\"");
    }
  }

  Scenario scenario;
  const nlohmann::json& alternatives = RequireArray(document, "alternatives");
  for (std::size_t j = 0; j < alternatives.size(); ++j) {
    const std::string where = "alternatives[" + std::to_string(j) + "]";
    const nlohmann::json& entry = alternatives[j];
    if (!entry.is_object() || !entry.contains("cost")) {
      throw Error(ErrorCode::kInvalidScenario,
                  where + " must be an object with a \"cost\"");
    }
    scenario.alternatives.push_back(
        {static_cast<int>(j),
         OptionalName(entry, where, "AS" + std::to_string(j + 1)),
         ReadNumber(entry.at("cost"), where + ".cost")});
  }
  const nlohmann::json& stakeholders = RequireArray(document, "stakeholders");
  for (std::size_t i = 0; i < stakeholders.size(); ++i) {
    const std::string where = "stakeholders[" + std::to_string(i) + "]";
    const nlohmann::json& entry = stakeholders[i];
    if (!entry.is_object()) {
      throw Error(ErrorCode::kInvalidScenario, where + " must be an object");
    }
    scenario.stakeholders.push_back(
        {static_cast<int>(i),
         OptionalName(entry, where, "s" + std::to_string(i + 1))});
  }
  if (scenario.alternatives.empty() || scenario.stakeholders.empty()) {
    // Report emptiness before any matrix shape complaint.
    ValidateScenario(scenario);
  }

  const int n = scenario.num_stakeholders();
  const int m = scenario.num_alternatives();
  scenario.reported = ReadMatrix(document, "reported", n, m, contribution_scale);
  if (document.contains("actual") && !document.at("actual").is_null()) {
    scenario.actual = ReadMatrix(document, "actual", n, m, contribution_scale);
  }
  ValidateScenario(scenario);
  return scenario;
}

Scenario ParseScenario(std::string_view json_text) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return ValidateScenario(document);
}

Scenario LoadScenarioFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound, "cannot open scenario file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseScenario(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

nlohmann::json ScenarioToJson(const Scenario& scenario) {
  auto matrix = [](const Profiles& profiles) {
    nlohmann::json rows = nlohmann::json::array();
    for (const BenefitProfile& p : profiles) {
      nlohmann::json row = nlohmann::json::array();
      for (const Rational& v : p.values) row.push_back(ToExactString(v));
      rows.push_back(std::move(row));
    }
    return rows;
  };

  nlohmann::json doc = nlohmann::json::object();
  doc["alternatives"] = nlohmann::json::array();
  for (const Alternative& a : scenario.alternatives) {
    doc["alternatives"].push_back(
        {{"name", a.name}, {"cost", ToExactString(a.cost)}});
  }
  doc["stakeholders"] = nlohmann::json::array();
  for (const Stakeholder& s : scenario.stakeholders) {
    doc["stakeholders"].push_back({{"name", s.name}});
  }
  if (scenario.actual.has_value()) doc["actual"] = matrix(*scenario.actual);
  doc["reported"] = matrix(scenario.reported);
  return doc;
}

Rational ContributionToBenefit(const Rational& score) {
  if (score < -1 || score > 1) {
    throw Error(ErrorCode::kScoreOutOfRange,
                "contribution score " + ToExactString(score) +
                    " is outside [-1, 1]");
  }
  return score * 100;
}

std::vector<int> ArgmaxSet(std::span<const Rational> values) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(values.size()); ++k) {
    if (out.empty() || values[k] > values[out.front()]) {
      out.assign(1, k);
    } else if (values[k] == values[out.front()]) {
      out.push_back(k);
    }
  }
  return out;
}

}  // namespace truthful_arch
