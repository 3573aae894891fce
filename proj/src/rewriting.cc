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

#include "epivote/rewriting.h"

#include <functional>
#include <unordered_map>
#include <vector>

#include "epivote/error.h"

namespace epivote {
namespace {

class Expander {
 public:
  Expander(const Election& e, const VotingRule* rule, std::uint64_t limit)
      : e_(e), rule_(rule), limit_(limit) {}

  Formula Expand(const Formula& f) {
    auto it = memo_.find(f.id());
    if (it != memo_.end()) return it->second;
    Formula out = Compute(f);
    memo_.emplace(f.id(), out);
    return out;
  }

 private:
  Formula Compute(const Formula& f) {
    switch (f.kind()) {
      case NodeKind::kTrue:
      case NodeKind::kProfile:
        return f;
      case NodeKind::kPref:
        return Matching([&](const Profile& p) {
          return p.Of(f.voter()) == f.preference();
        });
      case NodeKind::kComp:
        return Matching([&](const Profile& p) {
          return p.Of(f.voter()).Prefers(f.a(), f.b());
        });
      case NodeKind::kWins:
        if (rule_ == nullptr) {
          throw Error(ErrorKind::kMissingRule,
                      "winner atoms need a voting rule");
        }
        return Matching([&](const Profile& p) {
          return rule_->Winner(p) == f.a();
        });
      case NodeKind::kNot:
        return Formula::Not(Expand(f.child()));
      case NodeKind::kAnd:
        return Formula::And(Expand(f.left()), Expand(f.right()));
      case NodeKind::kKnow:
        return Formula::Know(f.voter(), Expand(f.child()));
      case NodeKind::kAnnounce:
        return Formula::Announce(Expand(f.left()), Expand(f.right()));
    }
    return f;
  }

  Formula Matching(const std::function<bool(const Profile&)>& pred) {
    if (profiles_.empty()) profiles_ = AllProfiles(e_, limit_);
    std::vector<Formula> disjuncts;
    for (const Profile& p : profiles_) {
      if (pred(p)) disjuncts.push_back(Formula::ProfileAtom(p));
    }
    return Formula::Disj(std::move(disjuncts));
  }

  const Election& e_;
  const VotingRule* rule_;
  std::uint64_t limit_;
  std::vector<Profile> profiles_;
  std::unordered_map<const void*, Formula> memo_;
};

// [a]f for announcement-free f.
Formula Push(const Formula& a, const Formula& f) {
  switch (f.kind()) {
    case NodeKind::kNot:
      return Formula::Implies(a, Formula::Not(Push(a, f.child())));
    case NodeKind::kAnd:
      return Formula::And(Push(a, f.left()), Push(a, f.right()));
    case NodeKind::kKnow:
      return Formula::Implies(
          a, Formula::Know(f.voter(), Formula::Implies(a, Push(a, f.child()))));
    case NodeKind::kAnnounce:
      return ReduceAnnouncements(Formula::Announce(
          Formula::And(a, Formula::Announce(a, f.left())), f.right()));
    default:
      return Formula::Implies(a, f);
  }
}

}  // namespace

Formula ExpandAbbreviations(const Formula& f, const Election& e,
                            const VotingRule* rule, std::uint64_t limit) {
  return Expander(e, rule, limit).Expand(f);
}

Formula ReduceAnnouncements(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::kNot:
      return Formula::Not(ReduceAnnouncements(f.child()));
    case NodeKind::kAnd:
      return Formula::And(ReduceAnnouncements(f.left()),
                          ReduceAnnouncements(f.right()));
    case NodeKind::kKnow:
      return Formula::Know(f.voter(), ReduceAnnouncements(f.child()));
    case NodeKind::kAnnounce:
      return Push(ReduceAnnouncements(f.left()),
                  ReduceAnnouncements(f.right()));
    default:
      return f;
  }
}

}  // namespace epivote
