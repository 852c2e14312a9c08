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

#ifndef TRUTHFUL_ARCH_REPORT_H_
#define TRUTHFUL_ARCH_REPORT_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "truthful_arch/core.h"
#include "truthful_arch/gs_demo.h"
#include "truthful_arch/mechanism.h"
#include "truthful_arch/strategic.h"

// Tabular reports. Values stay exact; rounding happens only in Render.
namespace truthful_arch::report {

enum class Format { kText, kCsv, kJson };

Format ParseFormat(std::string_view text);

using Cell = std::variant<Rational, std::string>;

struct Row {
  std::string label;
  std::vector<Cell> cells;
};

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

struct Fact {
  std::string key;
  Cell value;
};

struct Report {
  std::string title;
  std::vector<Fact> facts;
  std::vector<Table> tables;
  int decimals = 2;
};

// Text is an aligned table layout; CSV has one line per fact and per table
// row ("table,label,v1,..."); JSON carries the rounded numbers plus the
// exact values as strings.
std::string Render(const Report& report, Format format);

// Renders one cell with the report's rounding.
std::string RenderCell(const Cell& cell, int decimals);

Report SelectReport(const Scenario& scenario, const MechanismSpec& mechanism,
                    const MechanismOutcome& outcome, NetBenefitBasis basis);

Report AnalyzeReport(const strategic::ManipulationQuery& query,
                     const strategic::ManipulationReport& result);

Report GsScanReport(const gs::VotingRule& rule, int voters, int alternatives,
                    const gs::GsScanResult& result);

}  // namespace truthful_arch::report

#endif  // TRUTHFUL_ARCH_REPORT_H_
