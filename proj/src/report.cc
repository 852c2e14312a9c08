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

#include "truthful_arch/report.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace truthful_arch::report {
namespace {

std::string JoinNames(const std::vector<int>& ids,
                      const std::vector<std::string>& names) {
  std::string out;
  for (int id : ids) {
    if (!out.empty()) out += ", ";
    out += names[id];
  }
  return out;
}

std::vector<std::string> AlternativeNames(const Scenario& scenario) {
  std::vector<std::string> names;
  for (const Alternative& a : scenario.alternatives) names.push_back(a.name);
  return names;
}

std::vector<std::string> StakeholderNames(const Scenario& scenario) {
  std::vector<std::string> names;
  for (const Stakeholder& s : scenario.stakeholders) names.push_back(s.name);
  return names;
}

std::vector<Cell> Cells(const std::vector<Rational>& values) {
  return std::vector<Cell>(values.begin(), values.end());
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json JsonValue(const Cell& cell, int decimals) {
  if (const auto* r = std::get_if<Rational>(&cell)) {
    return nlohmann::json::parse(FormatDecimal(*r, decimals));
  }
  return std::get<std::string>(cell);
}

nlohmann::json JsonExact(const Cell& cell) {
  if (const auto* r = std::get_if<Rational>(&cell)) return ToExactString(*r);
  return std::get<std::string>(cell);
}

std::string RenderText(const Report& report) {
  std::ostringstream out;
  out << "== " << report.title << " ==\n";
  std::size_t key_width = 0;
  for (const Fact& f : report.facts) {
    key_width = std::max(key_width, f.key.size());
  }
  for (const Fact& f : report.facts) {
    out << f.key << ':' << std::string(key_width - f.key.size() + 1, ' ')
        << RenderCell(f.value, report.decimals) << '\n';
  }
  for (const Table& table : report.tables) {
    out << '\n' << table.title << '\n';
    std::size_t label_width = 0;
    for (const Row& row : table.rows) {
      label_width = std::max(label_width, row.label.size());
    }
    std::vector<std::size_t> widths;
    for (const std::string& c : table.columns) widths.push_back(c.size());
    std::vector<std::vector<std::string>> rendered;
    for (const Row& row : table.rows) {
      std::vector<std::string> cells;
      for (std::size_t k = 0; k < row.cells.size(); ++k) {
        cells.push_back(RenderCell(row.cells[k], report.decimals));
        if (k >= widths.size()) widths.push_back(0);
        widths[k] = std::max(widths[k], cells.back().size());
      }
      rendered.push_back(std::move(cells));
    }
    out << std::string(label_width, ' ');
    for (std::size_t k = 0; k < table.columns.size(); ++k) {
      out << "  " << std::string(widths[k] - table.columns[k].size(), ' ')
          << table.columns[k];
    }
    out << '\n';
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const std::string& label = table.rows[r].label;
      out << label << std::string(label_width - label.size(), ' ');
      for (std::size_t k = 0; k < rendered[r].size(); ++k) {
        out << "  " << std::string(widths[k] - rendered[r][k].size(), ' ')
            << rendered[r][k];
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string RenderCsv(const Report& report) {
  std::ostringstream out;
  for (const Fact& f : report.facts) {
    out << "fact," << CsvField(f.key) << ','
        << CsvField(RenderCell(f.value, report.decimals)) << '\n';
  }
  for (const Table& table : report.tables) {
    out << CsvField(table.title) << ",label";
    for (const std::string& c : table.columns) out << ',' << CsvField(c);
    out << '\n';
    for (const Row& row : table.rows) {
      out << CsvField(table.title) << ',' << CsvField(row.label);
      for (const Cell& cell : row.cells) {
        out << ',' << CsvField(RenderCell(cell, report.decimals));
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string RenderJson(const Report& report) {
  nlohmann::json doc;
  doc["title"] = report.title;
  doc["decimals"] = report.decimals;
  doc["facts"] = nlohmann::json::array();
  for (const Fact& f : report.facts) {
    doc["facts"].push_back({{"key", f.key},
                            {"value", JsonValue(f.value, report.decimals)},
                            {"exact", JsonExact(f.value)}});
  }
  doc["tables"] = nlohmann::json::array();
  for (const Table& table : report.tables) {
    nlohmann::json t;
    t["title"] = table.title;
    t["columns"] = table.columns;
    t["rows"] = nlohmann::json::array();
    for (const Row& row : table.rows) {
      nlohmann::json values = nlohmann::json::array();
      nlohmann::json exact = nlohmann::json::array();
      for (const Cell& cell : row.cells) {
        values.push_back(JsonValue(cell, report.decimals));
        exact.push_back(JsonExact(cell));
      }
      t["rows"].push_back(
          {{"label", row.label}, {"values", values}, {"exact", exact}});
    }
    doc["tables"].push_back(std::move(t));
  }
  return doc.dump(2) + "\n";
}

std::string ScoreLabel(const MechanismSpec& mechanism,
                       const std::vector<std::string>& stakeholders) {
  switch (mechanism.kind) {
    case MechanismKind::kCbam: return "desirability";
    case MechanismKind::kDictatorialCbam: return "desirability";
    case MechanismKind::kDictator:
      return "reported benefit of " + stakeholders[mechanism.dictator];
    case MechanismKind::kVcg: return "TRB";
  }
  return "score";
}

}  // namespace

Format ParseFormat(std::string_view text) {
  if (text == "text" || text == "table-text" || text == "table") {
    return Format::kText;
  }
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw Error(ErrorCode::kInvalidArgument,
              "format must be text, csv or json, got \"" + std::string(text) +
                  "\"");
}

std::string RenderCell(const Cell& cell, int decimals) {
  if (const auto* r = std::get_if<Rational>(&cell)) {
    return FormatDecimal(*r, decimals);
  }
  return std::get<std::string>(cell);
}

std::string Render(const Report& report, Format format) {
  switch (format) {
    case Format::kText: return RenderText(report);
    case Format::kCsv: return RenderCsv(report);
    case Format::kJson: return RenderJson(report);
  }
  return {};
}

Report SelectReport(const Scenario& scenario, const MechanismSpec& mechanism,
                    const MechanismOutcome& outcome, NetBenefitBasis basis) {
  const std::vector<std::string> alts = AlternativeNames(scenario);
  const std::vector<std::string> people = StakeholderNames(scenario);

  Report report;
  report.title = "select: " + MechanismName(mechanism);
  report.facts.push_back({"mechanism", MechanismName(mechanism)});
  report.facts.push_back({"selected", alts[outcome.selected]});
  report.facts.push_back({"tie", JoinNames(outcome.tie, alts)});
  report.facts.push_back(
      {"net benefit basis",
       std::string(basis == NetBenefitBasis::kActual ? "actual" : "reported")});

  Table benefits{"alternatives", alts, {}};
  if (scenario.actual.has_value()) {
    for (std::size_t i = 0; i < people.size(); ++i) {
      benefits.rows.push_back(
          {"actual " + people[i], Cells((*scenario.actual)[i].values)});
    }
  }
  for (std::size_t i = 0; i < people.size(); ++i) {
    benefits.rows.push_back(
        {"reported " + people[i], Cells(scenario.reported[i].values)});
  }
  if (mechanism.kind == MechanismKind::kCbam) {
    std::vector<Rational> average;
    const Rational n(static_cast<long long>(people.size()));
    for (std::size_t j = 0; j < alts.size(); ++j) {
      Rational total(0);
      for (const BenefitProfile& p : scenario.reported) total += p.values[j];
      average.push_back(total / n);
    }
    benefits.rows.push_back({"average reported benefit", Cells(average)});
  }
  benefits.rows.push_back({"cost", Cells(scenario.costs())});
  benefits.rows.push_back(
      {ScoreLabel(mechanism, people), Cells(outcome.scores)});
  report.tables.push_back(std::move(benefits));

  Table per_person{"stakeholders", people, {}};
  if (outcome.vcg.has_value()) {
    per_person.rows.push_back({"T+", Cells(outcome.vcg->t_plus)});
    per_person.rows.push_back({"T-", Cells(outcome.vcg->t_minus)});
  }
  per_person.rows.push_back({"payment", Cells(outcome.payments)});
  if (outcome.net_benefits.has_value()) {
    std::vector<Rational> direct;
    for (std::size_t i = 0; i < people.size(); ++i) {
      direct.push_back((*outcome.net_benefits)[i] - outcome.payments[i]);
    }
    per_person.rows.push_back(
        {basis == NetBenefitBasis::kActual ? "actual benefit of selected"
                                           : "reported benefit of selected",
         Cells(direct)});
    per_person.rows.push_back({"net benefit", Cells(*outcome.net_benefits)});
  }
  report.tables.push_back(std::move(per_person));
  return report;
}

Report AnalyzeReport(const strategic::ManipulationQuery& query,
                     const strategic::ManipulationReport& result) {
  const Scenario& scenario = query.scenario;
  const std::vector<std::string> alts = AlternativeNames(scenario);
  const std::vector<std::string> people = StakeholderNames(scenario);

  Report report;
  report.title = "analyze: " + MechanismName(query.mechanism);
  report.facts.push_back({"mechanism", MechanismName(query.mechanism)});
  report.facts.push_back(
      {"objective", std::string(strategic::ObjectiveName(query.objective))});
  report.facts.push_back(
      {"manipulators", JoinNames(query.manipulators, people)});
  report.facts.push_back({"grid step", ToExactString(query.grid_step)});
  report.facts.push_back({"search size", std::to_string(result.search_size)});
  report.facts.push_back(
      {"found", std::string(result.found ? "true" : "false")});
  report.facts.push_back({"truthful value", result.truthful_value});
  report.facts.push_back({"best value", result.best_value});
  report.facts.push_back({"gain", result.gain});
  report.facts.push_back(
      {"truthful selection", alts[result.truthful_outcome.selected]});
  if (result.manipulated_outcome.has_value()) {
    report.facts.push_back(
        {"manipulated selection", alts[result.manipulated_outcome->selected]});
  }

  std::vector<std::string> members;
  for (int id : query.manipulators) members.push_back(people[id]);
  Table values{"manipulator objective", members, {}};
  values.rows.push_back({"truthful", Cells(result.member_truthful)});
  values.rows.push_back({"best", Cells(result.member_best)});
  report.tables.push_back(std::move(values));

  Table witness{"witness", alts, {}};
  const Profiles& actual = scenario.RequireActual();
  for (std::size_t a = 0; a < query.manipulators.size(); ++a) {
    const int id = query.manipulators[a];
    witness.rows.push_back({"actual " + people[id], Cells(actual[id].values)});
    if (result.witness.has_value()) {
      witness.rows.push_back(
          {"misreport " + people[id], Cells((*result.witness)[a].values)});
    }
  }
  report.tables.push_back(std::move(witness));
  return report;
}

Report GsScanReport(const gs::VotingRule& rule, int voters, int alternatives,
                    const gs::GsScanResult& result) {
  Report report;
  report.title = "gs-scan: " + gs::RuleName(rule);
  report.facts.push_back({"rule", gs::RuleName(rule)});
  report.facts.push_back({"voters", std::to_string(voters)});
  report.facts.push_back({"alternatives", std::to_string(alternatives)});
  report.facts.push_back(
      {"total profiles", std::to_string(result.total_profiles)});
  report.facts.push_back(
      {"manipulable profiles", std::to_string(result.manipulable_profiles)});
  if (!result.example.has_value()) return report;

  const gs::GsWitness& w = *result.example;
  auto name = [](int alternative) { return "a" + std::to_string(alternative); };
  report.facts.push_back({"witness voter", std::to_string(w.voter)});
  report.facts.push_back({"truthful winner", name(w.truthful_winner)});
  report.facts.push_back({"manipulated winner", name(w.manipulated_winner)});

  Table table{"witness profile", {}, {}};
  for (int r = 0; r < alternatives; ++r) {
    table.columns.push_back("rank " + std::to_string(r + 1));
  }
  auto cells = [&](const gs::Ordering& o) {
    std::vector<Cell> out;
    for (int a : o) out.push_back(name(a));
    return out;
  };
  for (std::size_t v = 0; v < w.profile.orderings.size(); ++v) {
    table.rows.push_back(
        {"voter " + std::to_string(v), cells(w.profile.orderings[v])});
  }
  table.rows.push_back(
      {"voter " + std::to_string(w.voter) + " misreport", cells(w.misreport)});
  report.tables.push_back(std::move(table));
  return report;
}

}  // namespace truthful_arch::report
