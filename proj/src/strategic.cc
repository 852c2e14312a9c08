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

#include "truthful_arch/strategic.h"

#include <algorithm>
#include <exception>
#include <limits>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace truthful_arch::strategic {
namespace {

// Best qualifying candidate within one slice of the enumeration.
struct SliceBest {
  bool any = false;
  Rational aggregate;
  std::uint64_t index = 0;
};

class GridSearch {
 public:
  GridSearch(const ManipulationQuery& query, const SearchOptions& options)
      : query_(query), options_(options) {
    const Scenario& scenario = query.scenario;
    ValidateScenario(scenario);
    actual_ = &scenario.RequireActual();
    const int n = scenario.num_stakeholders();
    m_ = scenario.num_alternatives();

    if (query.manipulators.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "no manipulators given");
    }
    std::set<int> seen;
    for (int id : query.manipulators) {
      if (id < 0 || id >= n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "manipulator " + std::to_string(id) +
                        " is not a stakeholder id in 0.." +
                        std::to_string(n - 1));
      }
      if (!seen.insert(id).second) {
        throw Error(ErrorCode::kInvalidArgument,
                    "manipulator " + std::to_string(id) + " listed twice");
      }
    }

    const std::uint64_t points = GridPointCount(query.grid_step);
    for (std::uint64_t t = 0; t < points; ++t) {
      grid_.push_back(kMinBenefit +
                      query.grid_step * Rational(static_cast<long long>(t)));
    }
    dims_ = static_cast<int>(query.manipulators.size()) * m_;
    size_ = 1;
    for (int d = 0; d < dims_; ++d) {
      if (size_ > options.max_candidates / points) {
        throw Error(ErrorCode::kGridTooFine,
                    std::to_string(points) + "^" + std::to_string(dims_) +
                        " candidate reports exceed the budget of " +
                        std::to_string(options.max_candidates) +
                        " (raise TRUTHFUL_ARCH_BUDGET or coarsen the grid)");
      }
      size_ *= points;
    }

    costs_ = scenario.costs();
    truthful_reports_ = scenario.reported;
    for (int id : query.manipulators) {
      truthful_reports_[id].values = (*actual_)[id].values;
    }
  }

  ManipulationReport Run() {
    ManipulationReport report;
    report.search_size = size_;
    report.truthful_outcome =
        RunMechanism(query_.mechanism, costs_, truthful_reports_);
    report.truthful_outcome.net_benefits =
        ComputeNetBenefits(report.truthful_outcome, *actual_);
    report.member_truthful = MemberValues(report.truthful_outcome);
    for (const Rational& v : report.member_truthful) {
      report.truthful_value += v;
    }
    truthful_members_ = report.member_truthful;

    SliceBest best = Scan();
    report.best_value = report.truthful_value;
    report.member_best = report.member_truthful;
    if (best.any) {
      Profiles reports = truthful_reports_;
      std::vector<int> digits = Digits(best.index);
      Assign(reports, digits, 0);
      MechanismOutcome outcome =
          RunMechanism(query_.mechanism, costs_, reports);
      outcome.net_benefits = ComputeNetBenefits(outcome, *actual_);
      if (outcome.vcg.has_value()) {
        outcome.vcg->net_benefits = outcome.net_benefits;
      }
      report.member_best = MemberValues(outcome);
      report.best_value = best.aggregate;

      Profiles witness;
      for (int id : query_.manipulators) witness.push_back(reports[id]);
      report.witness = std::move(witness);
      report.manipulated_outcome = std::move(outcome);
    }
    if (report.truthful_outcome.vcg.has_value()) {
      report.truthful_outcome.vcg->net_benefits =
          report.truthful_outcome.net_benefits;
    }
    report.gain = report.best_value - report.truthful_value;
    report.found = report.gain > 0;
    return report;
  }

 private:
  std::vector<Rational> MemberValues(const MechanismOutcome& outcome) const {
    std::vector<Rational> values;
    values.reserve(query_.manipulators.size());
    for (int id : query_.manipulators) values.push_back(Value(outcome, id));
    return values;
  }

  Rational Value(const MechanismOutcome& outcome, int id) const {
    Rational v = (*actual_)[id].values[outcome.selected];
    if (query_.objective == Objective::kNetBenefit) v += outcome.payments[id];
    return v;
  }

  // Mixed-radix digits of `index`; digit 0 is the most significant.
  std::vector<int> Digits(std::uint64_t index) const {
    const std::uint64_t base = grid_.size();
    std::vector<int> digits(dims_, 0);
    for (int d = dims_ - 1; d >= 0; --d) {
      digits[d] = static_cast<int>(index % base);
      index /= base;
    }
    return digits;
  }

  // Writes digits [from, dims) into the manipulators' rows.
  void Assign(Profiles& reports, const std::vector<int>& digits,
              int from) const {
    for (int d = from; d < dims_; ++d) {
      reports[query_.manipulators[d / m_]].values[d % m_] = grid_[digits[d]];
    }
  }

  SliceBest ScanSlice(std::uint64_t begin, std::uint64_t end) const {
    SliceBest best;
    if (begin >= end) return best;
    Profiles reports = truthful_reports_;
    std::vector<int> digits = Digits(begin);
    Assign(reports, digits, 0);
    const int last = static_cast<int>(grid_.size()) - 1;
    const std::size_t k = query_.manipulators.size();

    for (std::uint64_t index = begin;;) {
      MechanismOutcome outcome =
          RunMechanism(query_.mechanism, costs_, reports);
      bool all_strict = true;
      bool all_weak = true;
      Rational aggregate(0);
      for (std::size_t a = 0; a < k; ++a) {
        Rational v = Value(outcome, query_.manipulators[a]);
        if (!(v > truthful_members_[a])) all_strict = false;
        if (v < truthful_members_[a]) all_weak = false;
        aggregate += v;
      }
      bool qualifies = options_.coalition_rule == CoalitionRule::kStrictAll
                           ? all_strict
                           : (all_weak && aggregate > truthful_total());
      if (qualifies && (!best.any || aggregate > best.aggregate)) {
        best.any = true;
        best.aggregate = aggregate;
        best.index = index;
      }

      if (++index == end) break;
      int d = dims_ - 1;
      while (digits[d] == last) {
        digits[d] = 0;
        --d;
      }
      ++digits[d];
      Assign(reports, digits, d);
    }
    return best;
  }

  Rational truthful_total() const {
    Rational total(0);
    for (const Rational& v : truthful_members_) total += v;
    return total;
  }

  SliceBest Scan() const {
    const unsigned threads = static_cast<unsigned>(std::clamp<std::uint64_t>(
        options_.threads == 0 ? 1 : options_.threads, 1, size_));
    if (threads == 1) return ScanSlice(0, size_);

    std::vector<SliceBest> results(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (size_ + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min<std::uint64_t>(size_, t * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(size_, begin + chunk);
      workers.emplace_back([this, t, begin, end, &results, &errors] {
        try {
          results[t] = ScanSlice(begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (std::thread& w : workers) w.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    // Max aggregate, earliest index on ties: the serial answer.
    SliceBest best;
    for (const SliceBest& r : results) {
      if (!r.any) continue;
      if (!best.any || r.aggregate > best.aggregate ||
          (r.aggregate == best.aggregate && r.index < best.index)) {
        best = r;
      }
    }
    return best;
  }

  const ManipulationQuery& query_;
  const SearchOptions& options_;
  const Profiles* actual_ = nullptr;
  int m_ = 0;
  int dims_ = 0;
  std::uint64_t size_ = 0;
  std::vector<Rational> grid_;
  std::vector<Rational> costs_;
  Profiles truthful_reports_;
  std::vector<Rational> truthful_members_;
};

}  // namespace

Objective ParseObjective(std::string_view text) {
  if (text == "benefit") return Objective::kBenefit;
  if (text == "net_benefit" || text == "net-benefit") {
    return Objective::kNetBenefit;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "objective must be benefit or net_benefit, got \"" +
                  std::string(text) + "\"");
}

std::string_view ObjectiveName(Objective objective) {
  return objective == Objective::kBenefit ? "benefit" : "net_benefit";
}

std::uint64_t GridPointCount(const Rational& step) {
  if (step <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid step must be positive, got " + ToExactString(step));
  }
  const Rational intervals = (kMaxBenefit - kMinBenefit) / step;
  if (intervals.denominator() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid step " + ToExactString(step) +
                    " does not divide [-100, 100] evenly");
  }
  if (intervals.numerator() >= std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kGridTooFine,
                "grid step " + ToExactString(step) + " is too fine");
  }
  return static_cast<std::uint64_t>(intervals.numerator()) + 1;
}

std::vector<Rational> EvaluateObjective(const MechanismSpec& mechanism,
                                        std::span<const Rational> costs,
                                        std::span<const BenefitProfile> reports,
                                        std::span<const BenefitProfile> actual,
                                        Objective objective) {
  MechanismOutcome outcome = RunMechanism(mechanism, costs, reports);
  std::vector<Rational> values;
  values.reserve(actual.size());
  for (std::size_t i = 0; i < actual.size(); ++i) {
    Rational v = actual[i].values[outcome.selected];
    if (objective == Objective::kNetBenefit) v += outcome.payments[i];
    values.push_back(v);
  }
  return values;
}

ManipulationReport SearchUnilateral(const ManipulationQuery& query,
                                    const SearchOptions& options) {
  if (query.manipulators.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "unilateral search takes exactly one manipulator");
  }
  return GridSearch(query, options).Run();
}

ManipulationReport SearchCoalition(const ManipulationQuery& query,
                                   const SearchOptions& options) {
  if (query.manipulators.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "coalition search takes at least two manipulators");
  }
  return GridSearch(query, options).Run();
}

ManipulationReport Search(const ManipulationQuery& query,
                          const SearchOptions& options) {
  return query.manipulators.size() == 1 ? SearchUnilateral(query, options)
                                        : SearchCoalition(query, options);
}

Objective DefaultObjective(const MechanismSpec& mechanism) {
  return mechanism.has_payments() ? Objective::kNetBenefit
                                  : Objective::kBenefit;
}

std::vector<ManipulationReport> VerifyTruthfulness(
    const MechanismSpec& mechanism, const Scenario& scenario,
    const Rational& grid_step, const SearchOptions& options) {
  ValidateScenario(scenario);
  ManipulationQuery query;
  query.mechanism = mechanism;
  query.scenario = scenario;
  query.scenario.reported = scenario.RequireActual();
  query.objective = DefaultObjective(mechanism);
  query.grid_step = grid_step;

  std::vector<ManipulationReport> reports;
  for (int i = 0; i < scenario.num_stakeholders(); ++i) {
    query.manipulators = {i};
    reports.push_back(SearchUnilateral(query, options));
  }
  return reports;
}

}  // namespace truthful_arch::strategic
