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

#ifndef EPIVOTE_PROFILE_MODEL_H_
#define EPIVOTE_PROFILE_MODEL_H_

#include <string>
#include <string_view>
#include <vector>

#include "epivote/election.h"

namespace epivote {

using StateIndex = int;

// One block per equivalence class of an indistinguishability relation.
using Partition = std::vector<std::vector<StateIndex>>;

// Per-state membership flags, indexed by StateIndex.
using StateSet = std::vector<bool>;

// A finite S5 Kripke model whose states carry profiles: states, one
// partition per voter, and a valuation assigning a profile to each state.
//
// The constructor only normalizes block order (states ascending inside a
// block, blocks ordered by their least state); it does not validate, so that
// malformed structures can be built and diagnosed. Everything produced by
// the parser, Hypercube() and Restrict() passes ValidateModel().
class ProfileModel {
 public:
  ProfileModel() = default;
  ProfileModel(Election election, std::vector<std::string> labels,
               std::vector<Profile> valuation, std::vector<Partition> indist);

  const Election& election() const { return election_; }
  int num_states() const { return static_cast<int>(labels_.size()); }
  int num_voters() const { return election_.num_voters(); }

  const std::string& label(StateIndex s) const { return labels_[s]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Throws kUnknownState.
  StateIndex FindState(std::string_view label) const;

  const Profile& valuation(StateIndex s) const { return valuation_[s]; }
  const Partition& blocks(Voter i) const { return indist_[i - 1]; }
  const std::vector<Partition>& partitions() const { return indist_; }

  // Index into blocks(i) of the block holding s; -1 if s is uncovered.
  int BlockIndex(Voter i, StateIndex s) const { return block_of_[i - 1][s]; }
  bool Indistinguishable(Voter i, StateIndex s, StateIndex t) const {
    return BlockIndex(i, s) == BlockIndex(i, t) && BlockIndex(i, s) >= 0;
  }

  bool operator==(const ProfileModel&) const = default;

 private:
  Election election_;
  std::vector<std::string> labels_;
  std::vector<Profile> valuation_;
  std::vector<Partition> indist_;
  std::vector<std::vector<int>> block_of_;
};

// Checks that every partition covers the states exactly once, that voters
// only confuse states agreeing on their own preference, that labels are
// unique, and that every valuation is a complete profile of the election.
// Throws kPartitionError, kOwnPreferenceViolation, kDanglingState,
// kDuplicateState or kInvalidArgument.
void ValidateModel(const ProfileModel& m);

// Non-owning view of a model pointed at a state.
class KnowledgeProfile {
 public:
  // Throws kUnknownState if `point` is out of range.
  KnowledgeProfile(const ProfileModel& model, StateIndex point);

  const ProfileModel& model() const { return *model_; }
  StateIndex point() const { return point_; }
  const Profile& profile() const { return model_->valuation(point_); }

 private:
  const ProfileModel* model_;
  StateIndex point_;
};

struct InformationSet {
  Voter voter = 0;
  int block = 0;
  std::vector<StateIndex> states;

  bool operator==(const InformationSet&) const = default;
};

// Throws kUnknownState or kUnknownVoter.
InformationSet GetInformationSet(const ProfileModel& m, Voter i, StateIndex s);

// The distinct profiles over the states of `info`, sorted.
std::vector<Profile> ProfilesOf(const ProfileModel& m,
                                const InformationSet& info);

// The model over all (m!)^n profiles where each voter knows exactly her own
// preference. Throws kSizeLimit beyond `limit` states.
ProfileModel Hypercube(const Election& e,
                       std::uint64_t limit = kDefaultSizeLimit);

// Restriction to the states in `keep`, with every partition intersected.
// `old_to_new`, if given, receives the new index of each old state (-1 when
// dropped).
ProfileModel Restrict(const ProfileModel& m, const StateSet& keep,
                      std::vector<StateIndex>* old_to_new = nullptr);

std::string FormatStateSet(const ProfileModel& m,
                           const std::vector<StateIndex>& states);

}  // namespace epivote

#endif  // EPIVOTE_PROFILE_MODEL_H_
