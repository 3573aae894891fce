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

#ifndef EPIVOTE_SEMANTICS_H_
#define EPIVOTE_SEMANTICS_H_

#include "epivote/formula.h"
#include "epivote/profile_model.h"
#include "epivote/voting.h"

namespace epivote {

// `rule` may be null for formulas without winner atoms; a winner atom
// evaluated without a rule throws kMissingRule. Shared subformulas are
// evaluated once per model.

// States of `m` where `f` holds.
StateSet Denotation(const ProfileModel& m, const VotingRule* rule,
                    const Formula& f);

bool Evaluate(const KnowledgeProfile& kp, const VotingRule* rule,
              const Formula& f);

// True at every state of `m`.
bool ValidOn(const ProfileModel& m, const VotingRule* rule, const Formula& f);

}  // namespace epivote

#endif  // EPIVOTE_SEMANTICS_H_
