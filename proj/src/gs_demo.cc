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

#include "truthful_arch/gs_demo.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>
#include <vector>

namespace truthful_arch::gs {

VotingRule ParseVotingRule(std::string_view id, int dictator) {
  std::string_view base = id;
  if (auto open = id.find('('); open != std::string_view::npos &&
                                id.back() == ')') {
    base = id.substr(0, open);
    std::string_view digits = id.substr(open + 1, id.size() - open - 2);
    auto [ptr, ec] = std::from_chars(digits.data(),
                                     digits.data() + digits.size(), dictator);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "malformed rule \"" + std::string(id) + "\"");
    }
  }
  if (base == "plurality") return {RuleKind::kPlurality, 0};
  if (base == "borda") return {RuleKind::kBorda, 0};
  if (base == "dictatorship") {
    if (dictator < 0) {
      throw Error(ErrorCode::kInvalidDictator,
                  "dictator must be a voter index >= 0");
    }
    return {RuleKind::kDictatorship, dictator};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown rule \"" + std::string(id) +
                  "\"; expected plurality, borda or dictatorship");
}

std::string RuleName(const VotingRule& rule) {
  switch (rule.kind) {
    case RuleKind::kPlurality: return "plurality";
    case RuleKind::kBorda: return "borda";
    case RuleKind::kDictatorship:
      return "dictatorship(" + std::to_string(rule.dictator) + ")";
  }
  return "unknown";
}

void ValidateProfile(const OrdinalProfile& profile) {
  if (profile.orderings.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "profile has no voters");
  }
  const std::size_t m = profile.orderings.front().size();
  if (m == 0) {
    throw Error(ErrorCode::kInvalidArgument, "orderings are empty");
  }
  for (const Ordering& o : profile.orderings) {
    Ordering sorted = o;
    std::sort(sorted.begin(), sorted.end());
    bool permutation = sorted.size() == m;
    for (std::size_t k = 0; permutation && k < m; ++k) {
      permutation = sorted[k] == static_cast<int>(k);
    }
    if (!permutation) {
      throw Error(ErrorCode::kInvalidArgument,
                  "every ordering must be a permutation of 0.." +
                      std::to_string(m - 1));
    }
  }
}

int RankOf(const Ordering& ordering, int alternative) {
  auto it = std::find(ordering.begin(), ordering.end(), alternative);
  return static_cast<int>(it - ordering.begin());
}

namespace {

int Winner(const VotingRule& rule, const std::vector<const Ordering*>& votes,
           std::vector<int>& scores) {
  const int m = static_cast<int>(votes.front()->size());
  if (rule.kind == RuleKind::kDictatorship) {
    return votes[rule.dictator]->front();
  }
  scores.assign(m, 0);
  for (const Ordering* o : votes) {
    if (rule.kind == RuleKind::kPlurality) {
      ++scores[o->front()];
    } else {
      for (int r = 0; r < m; ++r) scores[(*o)[r]] += m - 1 - r;
    }
  }
  return static_cast<int>(std::max_element(scores.begin(), scores.end()) -
                          scores.begin());
}

void CheckDictator(const VotingRule& rule, int voters) {
  if (rule.kind == RuleKind::kDictatorship &&
      (rule.dictator < 0 || rule.dictator >= voters)) {
    throw Error(ErrorCode::kInvalidDictator,
                "dictator " + std::to_string(rule.dictator) +
                    " is not a voter index in 0.." +
                    std::to_string(voters - 1));
  }
}

}  // namespace

int EvaluateRule(const VotingRule& rule, const OrdinalProfile& profile) {
  ValidateProfile(profile);
  CheckDictator(rule, static_cast<int>(profile.orderings.size()));
  std::vector<const Ordering*> votes;
  for (const Ordering& o : profile.orderings) votes.push_back(&o);
  std::vector<int> scores;
  return Winner(rule, votes, scores);
}

std::vector<Ordering> AllOrderings(int alternatives) {
  Ordering o(alternatives);
  std::iota(o.begin(), o.end(), 0);
  std::vector<Ordering> out;
  do {
    out.push_back(o);
  } while (std::next_permutation(o.begin(), o.end()));
  return out;
}

GsScanResult GsScan(const VotingRule& rule, int voters, int alternatives,
                    std::uint64_t budget) {
  if (voters < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one voter");
  }
  if (alternatives < 1 || alternatives > 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "scans support 1 to 4 alternatives, got " +
                    std::to_string(alternatives));
  }
  CheckDictator(rule, voters);

  const std::vector<Ordering> orderings = AllOrderings(alternatives);
  const std::uint64_t per_voter = orderings.size();
  std::uint64_t total = 1;
  for (int v = 0; v < voters; ++v) {
    if (total > budget / per_voter) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "scan of " + std::to_string(voters) + " voters over " +
                      std::to_string(alternatives) +
                      " alternatives exceeds the budget of " +
                      std::to_string(budget));
    }
    total *= per_voter;
  }
  const std::uint64_t work_per_profile =
      static_cast<std::uint64_t>(voters) * (per_voter - 1);
  if (work_per_profile > 0 && total > budget / work_per_profile) {
    throw Error(ErrorCode::kBudgetExceeded,
                "scan needs " + std::to_string(total) + " profiles x " +
                    std::to_string(work_per_profile) +
                    " misreports, over the budget of " +
                    std::to_string(budget));
  }

  GsScanResult result;
  result.total_profiles = total;
  std::vector<int> index(voters, 0);
  std::vector<const Ordering*> votes(voters, &orderings[0]);
  std::vector<int> scores;

  for (std::uint64_t p = 0; p < total; ++p) {
    const int truthful = Winner(rule, votes, scores);
    bool manipulable = false;
    for (int v = 0; v < voters && !manipulable; ++v) {
      const Ordering* truth = votes[v];
      const int truthful_rank = RankOf(*truth, truthful);
      for (std::size_t lie = 0; lie < per_voter && !manipulable; ++lie) {
        if (static_cast<int>(lie) == index[v]) continue;
        votes[v] = &orderings[lie];
        const int elected = Winner(rule, votes, scores);
        votes[v] = truth;
        if (RankOf(*truth, elected) < truthful_rank) {
          manipulable = true;
          if (!result.example.has_value()) {
            GsWitness w;
            for (const Ordering* o : votes) w.profile.orderings.push_back(*o);
            w.voter = v;
            w.misreport = orderings[lie];
            w.truthful_winner = truthful;
            w.manipulated_winner = elected;
            result.example = std::move(w);
          }
        }
      }
    }
    if (manipulable) ++result.manipulable_profiles;

    // Next profile; the last voter varies fastest.
    for (int v = voters - 1; v >= 0; --v) {
      if (++index[v] < static_cast<int>(per_voter)) {
        votes[v] = &orderings[index[v]];
        break;
      }
      index[v] = 0;
      votes[v] = &orderings[0];
    }
  }
  return result;
}

}  // namespace truthful_arch::gs
