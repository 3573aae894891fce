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

#ifndef EPIVOTE_DYNAMICS_H_
#define EPIVOTE_DYNAMICS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epivote/conditional.h"
#include "epivote/formula.h"
#include "epivote/profile_model.h"
#include "epivote/strategic.h"
#include "epivote/voting.h"

namespace epivote {

struct UpdateResult {
  ProfileModel model;
  StateSet survived;                    // over the original states
  std::vector<StateIndex> kept;         // original index of each new state
  std::vector<StateIndex> old_to_new;   // -1 for dropped states
  std::optional<StateIndex> point;      // new index of the point, if given
};

std::vector<StateIndex> DroppedStates(const UpdateResult& u);

// Public announcement of `phi`: keeps the states where it holds and
// intersects every partition with them. With a point, `phi` must hold there
// (kPointEliminated). Throws kEmptyResult when no state survives.
UpdateResult Update(const ProfileModel& m, const VotingRule* rule,
                    const Formula& phi,
                    std::optional<StateIndex> point = std::nullopt);

// Each surviving information set keeps the ballot of the information set it
// came from; vanished information sets are dropped.
ConditionalProfile UpdateConditionalProfile(const ProfileModel& m,
                                            const ConditionalProfile& cp,
                                            const UpdateResult& u);

enum class PropertyKind {
  kManipulation,            // point profile admits a manipulation by voter
  kEquilibriumProfile,      // point profile is an equilibrium profile
  kKnowsDeDicto,            // voter knows de dicto at point
  kKnowsDeRe,               // voter knows de re at point
  kDominantManipulation,    // voter has a dominant manipulation of her
                            // information set (`alt`, or any ballot)
  kConditionalEquilibrium,  // `cp` is a conditional equilibrium
};

const char* PropertyKindName(PropertyKind kind);
// Throws kInvalidArgument.
PropertyKind ParsePropertyKind(std::string_view name);

struct PropertyQuery {
  PropertyKind kind = PropertyKind::kManipulation;
  std::optional<StateIndex> point;   // required except for conditional eq.
  Voter voter = 1;
  std::optional<Preference> alt;
  std::optional<ConditionalProfile> cp;
};

struct PropertyVerdict {
  bool holds = false;
  std::string witness;  // human-readable support for the verdict
};

// Throws kInvalidArgument when the query lacks what its kind needs.
PropertyVerdict EvaluateProperty(const ProfileModel& m, const VotingRule& rule,
                                 const PropertyQuery& q);

struct PreservationVerdict {
  PropertyVerdict before;
  PropertyVerdict after;
  UpdateResult update;
  std::optional<ConditionalProfile> updated_cp;
};

PreservationVerdict CheckPreservation(const ProfileModel& m,
                                      const VotingRule& rule,
                                      const Formula& phi,
                                      const PropertyQuery& q);

std::string FormatPreservation(const ProfileModel& m,
                               const PreservationVerdict& v,
                               const PropertyQuery& q);

enum class HuntKind {
  kDominantManipulationNotPreserved,
  kConditionalEquilibriumNotPreserved,
  kNotConditionalEquilibriumNotPreserved,
  kKnowledgeOfManipulationNotPreserved,
};

const char* HuntKindName(HuntKind kind);
HuntKind ParseHuntKind(std::string_view name);

struct HuntOptions {
  std::uint64_t seed = 1;
  int budget = 2000;  // number of random (model, announcement) trials
  int max_states = 4;
};

struct Counterexample {
  ProfileModel model;
  StateIndex point = 0;
  Formula announcement;
  Voter voter = 0;
  std::optional<Preference> alt;
  std::optional<KnowledgeMode> mode;
  std::optional<ConditionalProfile> cp;
  std::optional<ConditionalProfile> updated_cp;
  int trial = 0;
};

struct HuntResult {
  std::uint64_t seed = 0;
  int trials = 0;  // trials run
  std::optional<Counterexample> example;
};

// Deterministic given the seed; returns the first counterexample found.
HuntResult SearchCounterexample(const Election& e, const VotingRule& rule,
                                HuntKind kind, const HuntOptions& options);

std::string FormatHuntResult(const VotingRule& rule, HuntKind kind,
                             const HuntResult& r);

}  // namespace epivote

#endif  // EPIVOTE_DYNAMICS_H_
