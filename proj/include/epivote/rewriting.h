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

#ifndef EPIVOTE_REWRITING_H_
#define EPIVOTE_REWRITING_H_

#include <cstdint>

#include "epivote/election.h"
#include "epivote/formula.h"
#include "epivote/voting.h"

namespace epivote {

// Replaces preference, comparison and winner atoms by disjunctions of
// profile atoms over all profiles of `e`. Throws kSizeLimit when the profile
// count exceeds `limit`, kMissingRule for a winner atom without a rule.
Formula ExpandAbbreviations(const Formula& f, const Election& e,
                            const VotingRule* rule,
                            std::uint64_t limit = kDefaultSizeLimit);

// An equivalent announcement-free formula, obtained by pushing announcements
// inward, innermost first:
//   [p]q      ->  p -> q            (q atomic)
//   [p]~q     ->  p -> ~[p]q
//   [p](q&r)  ->  [p]q & [p]r
//   [p]Ki q   ->  p -> Ki(p -> [p]q)
//   [p][q]r   ->  [p & [p]q]r
// The result can be exponentially larger than the input.
Formula ReduceAnnouncements(const Formula& f);

}  // namespace epivote

#endif  // EPIVOTE_REWRITING_H_
