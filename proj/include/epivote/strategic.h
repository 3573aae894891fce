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

#ifndef EPIVOTE_STRATEGIC_H_
#define EPIVOTE_STRATEGIC_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "epivote/election.h"
#include "epivote/profile_model.h"
#include "epivote/voting.h"

namespace epivote {

// Strategic notions relative to an information set. In all of them the
// other voters are assumed to vote sincerely in every profile the voter
// considers possible; comparisons use the voter's own preference, which is
// constant on her information set.

// The worst element of `cs` for `pref`. Throws kEmptySet.
CandidateIndex MinCandidate(const Preference& pref,
                            const std::vector<CandidateIndex>& cs);

enum class KnowledgeMode { kDeDicto, kDeRe };

struct KnowledgeVerdict {
  bool holds = false;
  // De dicto: the manipulations available in each profile of the
  // information set. De re: one entry under the key of the point's profile
  // holding the manipulations shared by every profile.
  std::map<Profile, std::vector<Preference>> witnesses;
};

KnowledgeVerdict KnowsManipulation(const KnowledgeProfile& kp,
                                   const VotingRule& rule, Voter i,
                                   KnowledgeMode mode);

// Weakly better than voting sincerely against every profile of i's
// information set, strictly better against at least one.
bool IsDominantManipulationOfInfoset(const KnowledgeProfile& kp,
                                     const VotingRule& rule, Voter i,
                                     const Preference& alt);

// Maximin comparison over i's information set: the worst winner when i
// votes `alt` is strictly better than the worst sincere winner.
bool IsPessimisticManipulation(const KnowledgeProfile& kp,
                               const VotingRule& rule, Voter i,
                               const Preference& alt);

enum class ManipulationKind {
  kNone,
  kHasManipulation,
  kPessimistic,
  kDominantOfInfoset,
  kKnowsDeDicto,
  kKnowsDeRe,
};

const char* ManipulationKindName(ManipulationKind kind);

struct ManipulationReport {
  Voter voter = 0;
  // Strongest label that applies, in declaration order of ManipulationKind.
  ManipulationKind kind = ManipulationKind::kNone;
  std::set<ManipulationKind> labels;
  // Each list only holds preferences passing the named check.
  std::vector<Preference> manipulations;   // of the point's profile
  std::vector<Preference> dominant;        // of i's information set
  std::vector<Preference> pessimistic;     // of i's information set
  KnowledgeVerdict de_dicto;
  KnowledgeVerdict de_re;
};

ManipulationReport Classify(const KnowledgeProfile& kp, const VotingRule& rule,
                            Voter i);

std::string FormatReport(const KnowledgeProfile& kp,
                         const ManipulationReport& report);

}  // namespace epivote

#endif  // EPIVOTE_STRATEGIC_H_
