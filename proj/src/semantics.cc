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

#include "epivote/semantics.h"

#include <algorithm>
#include <unordered_map>

#include "epivote/error.h"

namespace epivote {
namespace {

class Evaluator {
 public:
  Evaluator(const ProfileModel& m, const VotingRule* rule)
      : m_(m), rule_(rule) {}

  const StateSet& Eval(const Formula& f) {
    auto it = memo_.find(f.id());
    if (it != memo_.end()) return it->second;
    StateSet result = Compute(f);
    return memo_.emplace(f.id(), std::move(result)).first->second;
  }

 private:
  StateSet Compute(const Formula& f) {
    const int n = m_.num_states();
    StateSet out(n, false);
    switch (f.kind()) {
      case NodeKind::kTrue:
        out.assign(n, true);
        break;
      case NodeKind::kProfile:
        for (StateIndex s = 0; s < n; ++s) {
          out[s] = m_.valuation(s) == f.profile();
        }
        break;
      case NodeKind::kPref:
        CheckVoter(f.voter());
        for (StateIndex s = 0; s < n; ++s) {
          out[s] = m_.valuation(s).Of(f.voter()) == f.preference();
        }
        break;
      case NodeKind::kComp:
        CheckVoter(f.voter());
        for (StateIndex s = 0; s < n; ++s) {
          out[s] = m_.valuation(s).Of(f.voter()).Prefers(f.a(), f.b());
        }
        break;
      case NodeKind::kWins:
        if (rule_ == nullptr) {
          throw Error(ErrorKind::kMissingRule,
                      "winner atoms need a voting rule");
        }
        for (StateIndex s = 0; s < n; ++s) {
          out[s] = rule_->Winner(m_.valuation(s)) == f.a();
        }
        break;
      case NodeKind::kNot: {
        const StateSet& c = Eval(f.child());
        for (StateIndex s = 0; s < n; ++s) out[s] = !c[s];
        break;
      }
      case NodeKind::kAnd: {
        const StateSet l = Eval(f.left());
        const StateSet& r = Eval(f.right());
        for (StateIndex s = 0; s < n; ++s) out[s] = l[s] && r[s];
        break;
      }
      case NodeKind::kKnow: {
        CheckVoter(f.voter());
        const StateSet& c = Eval(f.child());
        for (const auto& block : m_.blocks(f.voter())) {
          const bool all = std::all_of(block.begin(), block.end(),
                                       [&](StateIndex t) { return c[t]; });
          for (StateIndex t : block) out[t] = all;
        }
        break;
      }
      case NodeKind::kAnnounce: {
        const StateSet announced = Eval(f.left());
        out.assign(n, true);
        if (std::none_of(announced.begin(), announced.end(),
                         [](bool b) { return b; })) {
          break;
        }
        std::vector<StateIndex> old_to_new;
        const ProfileModel updated = Restrict(m_, announced, &old_to_new);
        const StateSet after = Denotation(updated, rule_, f.right());
        for (StateIndex s = 0; s < n; ++s) {
          if (announced[s]) out[s] = after[old_to_new[s]];
        }
        break;
      }
    }
    return out;
  }

  void CheckVoter(Voter i) const {
    if (!m_.election().HasVoter(i)) {
      throw Error(ErrorKind::kUnknownVoter,
                  "voter " + std::to_string(i) + " is not in the model");
    }
  }

  const ProfileModel& m_;
  const VotingRule* rule_;
  std::unordered_map<const void*, StateSet> memo_;
};

}  // namespace

StateSet Denotation(const ProfileModel& m, const VotingRule* rule,
                    const Formula& f) {
  return Evaluator(m, rule).Eval(f);
}

bool Evaluate(const KnowledgeProfile& kp, const VotingRule* rule,
              const Formula& f) {
  return Denotation(kp.model(), rule, f)[kp.point()];
}

bool ValidOn(const ProfileModel& m, const VotingRule* rule, const Formula& f) {
  const StateSet d = Denotation(m, rule, f);
  return std::all_of(d.begin(), d.end(), [](bool b) { return b; });
}

}  // namespace epivote
