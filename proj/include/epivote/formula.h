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

#ifndef EPIVOTE_FORMULA_H_
#define EPIVOTE_FORMULA_H_

#include <memory>
#include <string>
#include <vector>

#include "epivote/election.h"

namespace epivote {

// Primitive node kinds. Disjunction, implication, equivalence and falsum are
// built from negation and conjunction; the printer folds them back.
enum class NodeKind {
  kTrue,
  kProfile,  // the profile is exactly p
  kPref,     // voter i's preference is exactly o
  kComp,     // voter i prefers a to b
  kWins,     // F elects a
  kNot,
  kAnd,
  kKnow,
  kAnnounce,  // [left] right
};

class Formula {
 public:
  static Formula True();
  static Formula False();
  static Formula ProfileAtom(Profile p);
  static Formula PrefAtom(Voter i, Preference o);
  static Formula CompAtom(Voter i, CandidateIndex a, CandidateIndex b);
  static Formula WinsAtom(CandidateIndex a);
  static Formula Not(Formula f);
  static Formula And(Formula l, Formula r);
  static Formula Or(Formula l, Formula r);
  static Formula Implies(Formula l, Formula r);
  static Formula Iff(Formula l, Formula r);
  static Formula Know(Voter i, Formula f);
  // Dual of Know: i considers f possible.
  static Formula Possible(Voter i, Formula f);
  static Formula Announce(Formula announced, Formula then);
  // Balanced folds; the empty conjunction is true, the empty disjunction false.
  static Formula Conj(std::vector<Formula> fs);
  static Formula Disj(std::vector<Formula> fs);

  Formula();  // true

  NodeKind kind() const { return node_->kind; }
  Voter voter() const { return node_->voter; }
  CandidateIndex a() const { return node_->a; }
  CandidateIndex b() const { return node_->b; }
  const Profile& profile() const { return node_->profile; }
  const Preference& preference() const { return node_->preference; }
  // Not, Know: child(). And, Announce: left(), right().
  Formula child() const { return Formula(node_->left); }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  bool IsAtom() const;
  bool HasAnnouncement() const;
  // Number of nodes, counting shared subtrees once per occurrence.
  std::size_t Size() const;
  int ModalDepth() const;

  // Stable identity of the node, for memoization.
  const void* id() const { return node_.get(); }

  bool operator==(const Formula& other) const;

 private:
  struct Node {
    NodeKind kind = NodeKind::kTrue;
    Voter voter = 0;
    CandidateIndex a = 0;
    CandidateIndex b = 0;
    Profile profile;
    Preference preference;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula Make(Node node);

  std::shared_ptr<const Node> node_;
};

// Concrete syntax accepted by ParseFormula, with disjunction, implication,
// equivalence and falsum recovered where the tree has their shape.
std::string FormatFormula(const Election& e, const Formula& f);

// Throws kUnknownVoter / kUnknownCandidate / kIncompleteProfileAtom for
// references that do not fit the election.
void CheckFormula(const Election& e, const Formula& f);

}  // namespace epivote

#endif  // EPIVOTE_FORMULA_H_
