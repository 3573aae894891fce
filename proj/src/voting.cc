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

#include "epivote/voting.h"

#include "epivote/error.h"

namespace epivote {

Plurality::Plurality(Election election, Preference tiebreak)
    : election_(std::move(election)), tiebreak_(std::move(tiebreak)) {
  if (tiebreak_.size() != election_.num_candidates()) {
    throw Error(ErrorKind::kInvalidArgument,
                "tie-breaking order must rank every candidate");
  }
}

CandidateIndex Plurality::WinnerOfTops(
    const std::vector<CandidateIndex>& tops) const {
  std::vector<int> tally(election_.num_candidates(), 0);
  for (CandidateIndex c : tops) ++tally[c];
  CandidateIndex best = tiebreak_.At(0);
  for (int pos = 1; pos < tiebreak_.size(); ++pos) {
    const CandidateIndex c = tiebreak_.At(pos);
    if (tally[c] > tally[best]) best = c;
  }
  return best;
}

CandidateIndex Plurality::Winner(const Profile& votes) const {
  std::vector<CandidateIndex> tops;
  tops.reserve(votes.num_voters());
  for (const Preference& p : votes.prefs()) tops.push_back(p.Top());
  return WinnerOfTops(tops);
}

CandidateIndex PluralityWinner(const Election& e, const Preference& tiebreak,
                               const Profile& votes) {
  return Plurality(e, tiebreak).Winner(votes);
}

std::unique_ptr<VotingRule> MakeRule(std::string_view name, const Election& e,
                                     const std::optional<Preference>& tiebreak) {
  if (name == "plurality") {
    if (!tiebreak) {
      throw Error(ErrorKind::kMissingTiebreak,
                  "plurality needs a 'tiebreak:' line");
    }
    return std::make_unique<Plurality>(e, *tiebreak);
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown voting rule '" + std::string(name) + "'");
}

bool ImprovesOn(const VotingRule& rule, const Preference& truth_i,
                const Profile& votes, Voter i, const Preference& alt) {
  const CandidateIndex before = rule.Winner(votes);
  const CandidateIndex after = rule.Winner(votes.With(i, alt));
  return truth_i.Prefers(after, before);
}

bool IsManipulation(const VotingRule& rule, const Profile& truth, Voter i,
                    const Preference& alt) {
  return ImprovesOn(rule, truth.Of(i), truth, i, alt);
}

bool IsDominantPreference(const VotingRule& rule, Voter i,
                          const Preference& truth, const Preference& alt,
                          Dominance mode, std::uint64_t limit) {
  bool some_strict = false;
  for (const Profile& other : AllProfiles(rule.election(), limit)) {
    const CandidateIndex base = rule.Winner(other);
    const CandidateIndex deviated = rule.Winner(other.With(i, alt));
    if (truth.Prefers(deviated, base)) {
      some_strict = true;
    } else if (mode == Dominance::kStrong || deviated != base) {
      return false;
    }
  }
  return some_strict;
}

bool IsEquilibriumVotes(const VotingRule& rule, const Profile& truth,
                        const Profile& votes) {
  const std::vector<Preference> orders =
      AllPreferences(rule.election().num_candidates());
  for (Voter i = 1; i <= votes.num_voters(); ++i) {
    for (const Preference& alt : orders) {
      if (ImprovesOn(rule, truth.Of(i), votes, i, alt)) return false;
    }
  }
  return true;
}

bool IsEquilibriumProfile(const VotingRule& rule, const Profile& truth) {
  return IsEquilibriumVotes(rule, truth, truth);
}

std::vector<Profile> EnumerateEquilibria(const VotingRule& rule,
                                         const Profile& truth, bool by_top,
                                         std::uint64_t limit) {
  const Election& e = rule.election();
  std::vector<Profile> out;
  if (by_top) {
    // m^n vote profiles.
    std::uint64_t count = 1;
    for (int i = 0; i < e.num_voters(); ++i) {
      count *= e.num_candidates();
      if (count > limit) {
        throw Error(ErrorKind::kSizeLimit, "too many vote profiles");
      }
    }
    const std::vector<Preference> tops = TopPreferences(e.num_candidates());
    std::vector<int> digit(e.num_voters(), 0);
    while (true) {
      std::vector<Preference> votes;
      for (int d : digit) votes.push_back(tops[d]);
      Profile p(std::move(votes));
      if (IsEquilibriumVotes(rule, truth, p)) out.push_back(std::move(p));
      int pos = e.num_voters() - 1;
      while (pos >= 0 && ++digit[pos] == e.num_candidates()) {
        digit[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    return out;
  }
  for (Profile& p : AllProfiles(e, limit)) {
    if (IsEquilibriumVotes(rule, truth, p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace epivote
