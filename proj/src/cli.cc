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

#include "truthful_arch/cli.h"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "truthful_arch/core.h"
#include "truthful_arch/gs_demo.h"
#include "truthful_arch/mechanism.h"
#include "truthful_arch/report.h"
#include "truthful_arch/strategic.h"

namespace truthful_arch {
namespace {

struct SelectArgs {
  std::string mechanism;
  std::optional<int> dictator;
  std::string scenario;
  std::string basis = "actual";
  std::string format = "text";
  int decimals = 2;
};

struct AnalyzeArgs {
  std::string mechanism;
  std::optional<int> dictator;
  std::string scenario;
  std::vector<int> manipulators;
  std::optional<std::string> objective;
  std::string grid_step = "10";
  unsigned threads = 1;
  bool weak_coalition = false;
  std::string format = "text";
  int decimals = 2;
};

struct ValidateArgs {
  std::string scenario;
};

struct GsArgs {
  std::string rule;
  int dictator = 0;
  int voters = 3;
  int alternatives = 3;
  std::string format = "text";
};

void RunSelect(const SelectArgs& args, std::ostream& out) {
  const MechanismSpec spec = ParseMechanism(args.mechanism, args.dictator);
  const NetBenefitBasis basis = ParseNetBenefitBasis(args.basis);
  const report::Format format = report::ParseFormat(args.format);
  const Scenario scenario = LoadScenarioFile(args.scenario);
  const MechanismOutcome outcome = ApplyMechanism(spec, scenario, basis);
  report::Report r = report::SelectReport(scenario, spec, outcome, basis);
  r.decimals = args.decimals;
  out << report::Render(r, format);
}

void RunAnalyze(const AnalyzeArgs& args, std::ostream& out) {
  strategic::ManipulationQuery query;
  query.mechanism = ParseMechanism(args.mechanism, args.dictator);
  query.manipulators = args.manipulators;
  query.objective = args.objective.has_value()
                        ? strategic::ParseObjective(*args.objective)
                        : strategic::DefaultObjective(query.mechanism);
  query.grid_step = ParseDecimal(args.grid_step);
  const report::Format format = report::ParseFormat(args.format);
  query.scenario = LoadScenarioFile(args.scenario);
  query.scenario.RequireActual();

  strategic::SearchOptions options;
  options.threads = args.threads;
  options.coalition_rule = args.weak_coalition
                               ? strategic::CoalitionRule::kWeakAllStrictOne
                               : strategic::CoalitionRule::kStrictAll;
  const strategic::ManipulationReport result =
      strategic::Search(query, options);
  report::Report r = report::AnalyzeReport(query, result);
  r.decimals = args.decimals;
  out << report::Render(r, format);
}

void RunValidate(const ValidateArgs& args, std::ostream& out) {
  out << ScenarioToJson(LoadScenarioFile(args.scenario)).dump(2) << '\n';
}

void RunGsScan(const GsArgs& args, std::ostream& out) {
  const gs::VotingRule rule = gs::ParseVotingRule(args.rule, args.dictator);
  const report::Format format = report::ParseFormat(args.format);
  const gs::GsScanResult result =
      gs::GsScan(rule, args.voters, args.alternatives);
  out << report::Render(
      report::GsScanReport(rule, args.voters, args.alternatives, result),
      format);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Architecture selection under strategic stakeholders",
               "truthful-arch"};
  app.require_subcommand(1);

  SelectArgs select_args;
  CLI::App* select = app.add_subcommand(
      "select", "Run a selection mechanism on a scenario file");
  select->add_option("--mechanism", select_args.mechanism,
                     "cbam, dictatorial-cbam, dictator or vcg")
      ->required();
  select->add_option("--dictator", select_args.dictator,
                     "Dictator stakeholder index (0-based)");
  select->add_option("--scenario", select_args.scenario, "Scenario JSON file")
      ->required();
  select->add_option("--net-benefit-basis", select_args.basis,
                     "actual or reported");
  select->add_option("--format", select_args.format, "text, csv or json");
  select->add_option("--decimals", select_args.decimals,
                     "Display decimals (values stay exact)");

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Search the benefit grid for profitable misreports");
  analyze->add_option("--mechanism", analyze_args.mechanism,
                      "cbam, dictatorial-cbam, dictator or vcg")
      ->required();
  analyze->add_option("--dictator", analyze_args.dictator,
                      "Dictator stakeholder index (0-based)");
  analyze->add_option("--scenario", analyze_args.scenario,
                      "Scenario JSON file with actual benefits")
      ->required();
  analyze->add_option("--manipulators", analyze_args.manipulators,
                      "Manipulating stakeholder indices (0-based)")
      ->required()
      ->delimiter(',');
  analyze->add_option("--objective", analyze_args.objective,
                      "benefit or net_benefit (default: net_benefit for vcg)");
  analyze->add_option("--grid-step", analyze_args.grid_step,
                      "Grid spacing on [-100, 100]");
  analyze->add_option("--threads", analyze_args.threads, "Worker threads");
  analyze->add_flag("--weak-coalition", analyze_args.weak_coalition,
                    "Accept coalition misreports where nobody loses and "
                    "someone gains");
  analyze->add_option("--format", analyze_args.format, "text, csv or json");
  analyze->add_option("--decimals", analyze_args.decimals,
                      "Display decimals (values stay exact)");

  GsArgs gs_args;
  CLI::App* gs_scan = app.add_subcommand(
      "gs-scan", "Count manipulable profiles of an ordinal voting rule");
  gs_scan->add_option("--rule", gs_args.rule,
                      "plurality, borda or dictatorship")
      ->required();
  gs_scan->add_option("--dictator", gs_args.dictator, "Dictator voter index");
  gs_scan->add_option("--voters", gs_args.voters, "Number of voters");
  gs_scan->add_option("--alternatives", gs_args.alternatives,
                      "Number of alternatives");
  gs_scan->add_option("--format", gs_args.format, "text, csv or json");

  ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand(
      "validate", "Check a scenario file and print its canonical form");
  validate->add_option("--scenario", validate_args.scenario,
                       "Scenario JSON file")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "truthful-arch: " << e.what() << '\n';
    if (const CLI::App* sub = app.get_subcommands().empty()
                                  ? nullptr
                                  : app.get_subcommands().front()) {
      err << sub->help();
    }
    return kExitError;
  }

  try {
    if (select->parsed()) RunSelect(select_args, out);
    if (analyze->parsed()) RunAnalyze(analyze_args, out);
    if (gs_scan->parsed()) RunGsScan(gs_args, out);
    if (validate->parsed()) RunValidate(validate_args, out);
  } catch (const Error& e) {
    err << "truthful-arch: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "truthful-arch: internal error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace truthful_arch
