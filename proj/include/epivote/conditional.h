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

#ifndef EPIVOTE_CONDITIONAL_H_
#define EPIVOTE_CONDITIONAL_H_

// The Bayesian game induced by a profile model. Its players are virtual
// voters, one per (voter, information set); a strategy for a voter assigns a
// ballot to each of her information sets, and the payoff of a virtual voter
// is the rank value of the worst winner over the states of its information
// set. A conditional equilibrium is a conditional profile from which no
// virtual voter can raise its payoff by changing its own ballot while every
// other ballot stays as the profile prescribes.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epivote/election.h"
#include "epivote/profile_model.h"
#include "epivote/voting.h"

namespace epivote {

struct VirtualVoter {
  Voter voter = 0;
  int block = 0;  // index into ProfileModel::blocks(voter)

  bool operator==(const VirtualVoter&) const = default;
};

// Voter-major, blocks in model order (by least state).
std::vector<VirtualVoter> VirtualVoters(const ProfileModel& m);

// A ballot per voter per information set.
class ConditionalProfile {
 public:
  ConditionalProfile() = default;
  explicit ConditionalProfile(std::vector<std::vector<Preference>> choices)
      : choices_(std::move(choices)) {}

  const Preference& Choice(Voter i, int block) const {
    return choices_[i - 1][block];
  }
  const std::vector<std::vector<Preference>>& choices() const {
    return choices_;
  }
  ConditionalProfile With(Voter i, int block, const Preference& alt) const;

  auto operator<=>(const ConditionalProfile&) const = default;
  bool operator==(const ConditionalProfile&) const = default;

 private:
  std::vector<std::vector<Preference>> choices_;
};

// Throws kInvalidArgument unless `cp` has one complete ballot per block of
// every voter.
void CheckConditionalProfile(const ProfileModel& m,
                             const ConditionalProfile& cp);

// Every voter votes her true preference in each of her information sets.
ConditionalProfile SincereConditionalProfile(const ProfileModel& m);

// The ballots cast at state s.
Profile InducedVotes(const ProfileModel& m, const ConditionalProfile& cp,
                     StateIndex s);

// Worst rank value, for the virtual voter's true preference, of the winners
// at the states of its information set.
int Payoff(const ProfileModel& m, const VotingRule& rule,
           const ConditionalProfile& cp, const VirtualVoter& vv);

struct BlockingDeviation {
  VirtualVoter who;
  Preference alt;
  int payoff_before = 0;
  int payoff_after = 0;
};

// Checks every virtual voter against all m! alternative ballots. Returns
// the first improving deviation in virtual-voter then ballot order.
std::optional<BlockingDeviation> FindBlockingDeviation(
    const ProfileModel& m, const VotingRule& rule,
    const ConditionalProfile& cp);

bool IsConditionalEquilibrium(const ProfileModel& m, const VotingRule& rule,
                              const ConditionalProfile& cp);

enum class StrategySpace {
  kFullOrders,  // all m! ballots
  kByTop,       // the m top-first ballots; exact for top-only rules
};

// Index-level engine over a fixed strategy space. A conditional profile is
// encoded as one strategy index per virtual voter. Winners of every
// combination of ballots are tabulated up front when the table is small,
// and a deviation only re-evaluates the states of the deviating virtual
// voter's information set.
class ConditionalGame {
 public:
  ConditionalGame(const ProfileModel& m, const VotingRule& rule,
                  StrategySpace space);

  const ProfileModel& model() const { return *model_; }
  const VotingRule& rule() const { return *rule_; }
  StrategySpace space() const { return space_; }
  const std::vector<VirtualVoter>& virtual_voters() const { return vvs_; }
  int num_virtual_voters() const { return static_cast<int>(vvs_.size()); }
  int num_strategies() const { return static_cast<int>(strategies_.size()); }
  const Preference& strategy(int k) const { return strategies_[k]; }
  // Virtual voter index of voter i's block containing s.
  int VirtualVoterAt(Voter i, StateIndex s) const {
    return state_vv_[s * num_voters_ + (i - 1)];
  }

  // Number of conditional profiles, saturating at UINT64_MAX.
  std::uint64_t NumProfiles() const;
  // Throws kSizeLimit when NumProfiles() exceeds `limit`.
  void CheckSize(std::uint64_t limit) const;

  CandidateIndex WinnerAt(std::span<const int> choice, StateIndex s) const;
  int Payoff(std::span<const int> choice, int vv) const;
  // First improving (virtual voter, strategy) pair, if any.
  std::optional<std::pair<int, int>> FindDeviation(
      std::span<const int> choice) const;
  bool IsEquilibrium(std::span<const int> choice) const {
    return !FindDeviation(choice).has_value();
  }

  ConditionalProfile Decode(std::span<const int> choice) const;
  // Empty if some ballot of `cp` lies outside the strategy space.
  std::optional<std::vector<int>> Encode(const ConditionalProfile& cp) const;

  // Calls fn(std::span<const int>) for every conditional profile, the last
  // virtual voter varying fastest.
  template <typename Fn>
  void ForEachProfile(Fn&& fn) const {
    std::vector<int> choice(vvs_.size(), 0);
    const int s = num_strategies();
    while (true) {
      fn(std::span<const int>(choice));
      int pos = static_cast<int>(choice.size()) - 1;
      while (pos >= 0 && ++choice[pos] == s) {
        choice[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }

 private:
  std::size_t VoteCode(std::span<const int> choice, StateIndex s) const;
  CandidateIndex WinnerOfCode(std::size_t code) const;

  const ProfileModel* model_;
  const VotingRule* rule_;
  StrategySpace space_;
  int num_voters_;
  std::vector<Preference> strategies_;
  std::vector<VirtualVoter> vvs_;
  std::vector<int> state_vv_;                 // [state * n + voter - 1]
  std::vector<std::vector<StateIndex>> vv_states_;
  std::vector<std::vector<int>> vv_rank_;     // [vv][candidate]
  std::vector<std::size_t> voter_weight_;     // S^(i-1)
  std::vector<CandidateIndex> winner_table_;  // empty when too large
};

// All conditional equilibria in enumeration order. Throws kSizeLimit.
std::vector<ConditionalProfile> EnumerateConditionalEquilibria(
    const ProfileModel& m, const VotingRule& rule, bool by_top,
    std::uint64_t limit = kDefaultSizeLimit);

// Outcome of one conditional profile, as shown in a payoff matrix.
struct ConditionalOutcome {
  std::vector<int> choice;               // strategy index per virtual voter
  std::vector<CandidateIndex> winners;   // per state, file order
  std::vector<int> payoffs;              // per virtual voter
  bool equilibrium = false;
};

struct PayoffTable {
  std::vector<ConditionalOutcome> outcomes;  // enumeration order
};

PayoffTable BuildPayoffTable(const ConditionalGame& game,
                             std::uint64_t limit = kDefaultSizeLimit);

// Label of voter i's conditional strategy in `choice`: "ac" for by-top
// strategies with one-letter candidates, comma-separated otherwise.
std::string StrategyLabel(const ConditionalGame& game,
                          std::span<const int> choice, Voter i);
std::string WinnersLabel(const ConditionalGame& game,
                         const ConditionalOutcome& outcome);
// "ij.k": voter 1's payoffs per information set, '.', voter 2's, ...
std::string PayoffLabel(const ConditionalGame& game,
                        const ConditionalOutcome& outcome);

// Winners grid and payoff grid, voter 1's conditional strategies as rows and
// voter 2's as columns; equilibria carry a trailing '*'. Two voters only
// (kInvalidArgument otherwise).
std::string FormatMatrix(const ConditionalGame& game, const PayoffTable& table);

// One line per conditional profile:
//   strategies=ac;bc winners=t:b,u:b,v:c payoffs=1@t:1,1@u+v:1,... equilibrium=yes
std::string FormatRecords(const ConditionalGame& game, const PayoffTable& table,
                          bool only_equilibria);

// Parses "ac;bc" (by-top letters, one per information set) or, for full
// orders, "a>b>c,c>b>a;b>a>c" into a conditional profile for `m`.
ConditionalProfile ParseConditionalProfile(const ProfileModel& m,
                                           std::string_view text);
std::string FormatConditionalProfile(const ProfileModel& m,
                                     const ConditionalProfile& cp,
                                     bool by_top);

}  // namespace epivote

#endif  // EPIVOTE_CONDITIONAL_H_
