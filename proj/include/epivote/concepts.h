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

#ifndef EPIVOTE_CONCEPTS_H_
#define EPIVOTE_CONCEPTS_H_

#include <cstdint>

#include "epivote/conditional.h"
#include "epivote/formula.h"
#include "epivote/profile_model.h"
#include "epivote/strategic.h"
#include "epivote/voting.h"

namespace epivote {

// Strategic notions written as formulas of the logic. Comparisons between
// winners are made with comparison atoms, so they are read against the
// preference that holds at the state of evaluation.

// F(p) beats F(q) for voter i:  ((p -> wins a) & (q -> wins b)) -> i: a>b
// with a = F(p), b = F(q). False when a = b.
Formula WinnerBetter(const VotingRule& rule, Voter i, const Profile& p,
                     const Profile& q);
// F(p) at least as good as F(q) for voter i.
Formula WinnerAtLeast(const VotingRule& rule, Voter i, const Profile& p,
                      const Profile& q);

// Some ballot of voter i improves on p.
Formula HasManipulationFormula(const VotingRule& rule, Voter i,
                               const Profile& p);
// Ballot `alt` of voter i improves on p.
Formula ManipulationWithFormula(const VotingRule& rule, Voter i,
                                const Profile& p, const Preference& alt);
// `alt` is weakly dominant for voter i over all profiles, strictly somewhere.
Formula DominantManipulationFormula(const VotingRule& rule, Voter i,
                                    const Preference& alt,
                                    std::uint64_t limit = kDefaultSizeLimit);
// De dicto:  Ki /\_q (q -> \/_alt F(q[i:=alt]) beats F(q))
// De re:     \/_alt Ki /\_q (q -> F(q[i:=alt]) beats F(q))
Formula KnowsManipulationFormula(const VotingRule& rule, Voter i,
                                 KnowledgeMode mode,
                                 std::uint64_t limit = kDefaultSizeLimit);
Formula EquilibriumProfileFormula(const VotingRule& rule, const Profile& p);

// Valid on `m` exactly when `cp` is a conditional equilibrium. Information
// sets are named by distinguishing formulas; for each voter k, ballot alt
// and candidate x it states
//   Kk Good(x, cp[k:=alt]) -> Kk Good(x, cp)
// where Good(x, c) says that wherever the cells of c apply, the winner is
// not worse than x for k. Throws kIndistinguishable when some information
// set has no distinguishing formula.
Formula ConditionalEquilibriumFormula(const ProfileModel& m,
                                      const VotingRule& rule,
                                      const ConditionalProfile& cp);

}  // namespace epivote

#endif  // EPIVOTE_CONCEPTS_H_
