// Copyright 2026 The epivote Authors
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

#include "epivote/random_models.h"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "epivote/error.h"

namespace epivote {
namespace {

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Preference RandomPreference(Rng& rng, int m) {
  std::vector<CandidateIndex> ranking(m);
  for (int c = 0; c < m; ++c) ranking[c] = c;
  std::shuffle(ranking.begin(), ranking.end(), rng);
  return Preference(std::move(ranking));
}

Profile RandomProfile(Rng& rng, const Election& e) {
  std::vector<Preference> prefs;
  for (Voter i = 1; i <= e.num_voters(); ++i) {
    prefs.push_back(RandomPreference(rng, e.num_candidates()));
  }
  return Profile(std::move(prefs));
}

}  // namespace

ProfileModel RandomModel(Rng& rng, const Election& e, int max_states,
                         int num_profiles) {
  if (max_states < 1) {
    throw Error(ErrorKind::kInvalidArgument, "need at least one state");
  }
  const int n = Uniform(rng, 1, max_states);
  std::vector<Profile> pool;
  for (int k = 0; k < num_profiles; ++k) pool.push_back(RandomProfile(rng, e));

  std::vector<std::string> labels;
  std::vector<Profile> valuation;
  for (int s = 0; s < n; ++s) {
    labels.push_back("w" + std::to_string(s + 1));
    valuation.push_back(pool.empty()
                            ? RandomProfile(rng, e)
                            : pool[Uniform(rng, 0, num_profiles - 1)]);
  }

  std::vector<Partition> indist;
  for (Voter i = 1; i <= e.num_voters(); ++i) {
    std::map<Preference, std::vector<StateIndex>> groups;
    for (StateIndex s = 0; s < n; ++s) groups[valuation[s].Of(i)].push_back(s);
    Partition partition;
    for (const auto& [pref, states] : groups) {
      const int k = static_cast<int>(states.size());
      std::vector<std::vector<StateIndex>> blocks(k);
      for (StateIndex s : states) blocks[Uniform(rng, 0, k - 1)].push_back(s);
      for (auto& b : blocks) {
        if (!b.empty()) partition.push_back(std::move(b));
      }
    }
    indist.push_back(std::move(partition));
  }
  ProfileModel model(e, std::move(labels), std::move(valuation),
                     std::move(indist));
  ValidateModel(model);
  return model;
}

Formula RandomFormula(Rng& rng, const ProfileModel& m,
                      const FormulaOptions& options) {
  const Election& e = m.election();
  const int nv = e.num_voters();
  const int nc = e.num_candidates();
  auto state_profile = [&]() -> const Profile& {
    return m.valuation(Uniform(rng, 0, m.num_states() - 1));
  };
  auto leaf = [&]() -> Formula {
    const int kinds = 3 + options.profile_atoms + options.winner_atoms;
    int pick = Uniform(rng, 0, kinds - 1);
    if (pick == 0) return Formula::True();
    if (pick == 1) {
      return Formula::CompAtom(Uniform(rng, 1, nv), Uniform(rng, 0, nc - 1),
                               Uniform(rng, 0, nc - 1));
    }
    if (pick == 2) {
      const Voter i = Uniform(rng, 1, nv);
      return Formula::PrefAtom(i, Uniform(rng, 0, 3) == 0
                                      ? RandomPreference(rng, nc)
                                      : state_profile().Of(i));
    }
    if (options.profile_atoms && pick == 3) {
      return Formula::ProfileAtom(Uniform(rng, 0, 3) == 0 ? RandomProfile(rng, e)
                                                          : state_profile());
    }
    return Formula::WinsAtom(Uniform(rng, 0, nc - 1));
  };
  std::function<Formula(int)> build = [&](int depth) -> Formula {
    if (depth == 0 || Uniform(rng, 0, 4) == 0) return leaf();
    const int ops = options.announcements ? 6 : 5;
    switch (Uniform(rng, 0, ops - 1)) {
      case 0:
        return Formula::Not(build(depth - 1));
      case 1:
        return Formula::And(build(depth - 1), build(depth - 1));
      case 2:
        return Formula::Or(build(depth - 1), build(depth - 1));
      case 3:
      case 4:
        return Formula::Know(Uniform(rng, 1, nv), build(depth - 1));
      default:
        return Formula::Announce(build(depth - 1), build(depth - 1));
    }
  };
  return build(options.max_depth);
}

}  // namespace epivote
