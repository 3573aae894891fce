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

#ifndef EPIVOTE_VOTING_H_
#define EPIVOTE_VOTING_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epivote/election.h"

namespace epivote {

// A resolute voting rule: total and deterministic over complete vote
// profiles.
class VotingRule {
 public:
  virtual ~VotingRule() = default;

  virtual std::string name() const = 0;
  virtual const Election& election() const = 0;
  virtual CandidateIndex Winner(const Profile& votes) const = 0;
  // True if the winner only depends on each vote's top candidate.
  virtual bool TopOnly() const { return false; }
};

// Most top positions wins; ties go to the co-winner ranked best by the
// tie-breaking order.
class Plurality final : public VotingRule {
 public:
  Plurality(Election election, Preference tiebreak);

  std::string name() const override { return "plurality"; }
  const Election& election() const override { return election_; }
  CandidateIndex Winner(const Profile& votes) const override;
  bool TopOnly() const override { return true; }

  const Preference& tiebreak() const { return tiebreak_; }

  // Winner from top choices alone.
  CandidateIndex WinnerOfTops(const std::vector<CandidateIndex>& tops) const;

 private:
  Election election_;
  Preference tiebreak_;
};

CandidateIndex PluralityWinner(const Election& e, const Preference& tiebreak,
                               const Profile& votes);

// Looks a rule up by name ("plurality"). Throws kMissingTiebreak when the
// rule needs a tie-breaking order and none is given, kInvalidArgument for an
// unknown name.
std::unique_ptr<VotingRule> MakeRule(std::string_view name, const Election& e,
                                     const std::optional<Preference>& tiebreak);

// True iff voter i strictly prefers, by her preference in `truth`, the
// winner after replacing her vote by `alt` to the winner of `truth`.
bool IsManipulation(const VotingRule& rule, const Profile& truth, Voter i,
                    const Preference& alt);

// Same comparison but against an arbitrary vote profile: does deviating
// from `votes` to `alt` strictly help voter i with preference `truth_i`?
bool ImprovesOn(const VotingRule& rule, const Preference& truth_i,
                const Profile& votes, Voter i, const Preference& alt);

enum class Dominance { kWeak, kStrong };

// Quantifies over every profile of the election. Weak: `alt` never does
// worse than voting the profile's own ballot and once does strictly better;
// strong: strictly better everywhere. Comparisons use `truth`.
// Throws kSizeLimit beyond `limit` profiles.
bool IsDominantPreference(const VotingRule& rule, Voter i,
                          const Preference& truth, const Preference& alt,
                          Dominance mode,
                          std::uint64_t limit = kDefaultSizeLimit);

// No voter has a manipulation of `truth` (the profile is both the sincere
// preferences and the votes).
bool IsEquilibriumProfile(const VotingRule& rule, const Profile& truth);

// Nash condition for the vote profile `votes` with payoffs read from
// `truth`.
bool IsEquilibriumVotes(const VotingRule& rule, const Profile& truth,
                        const Profile& votes);

// Every vote profile that is an equilibrium for `truth`, in enumeration
// order (voter 1's vote varies slowest). With `by_top`, votes range over
// the m top-first orders only, which is the quotient by top candidate for
// top-only rules. Throws kSizeLimit.
std::vector<Profile> EnumerateEquilibria(const VotingRule& rule,
                                         const Profile& truth, bool by_top,
                                         std::uint64_t limit = kDefaultSizeLimit);

}  // namespace epivote

#endif  // EPIVOTE_VOTING_H_
