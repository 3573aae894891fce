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

#include "epivote/formula.h"

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <utility>

#include "epivote/error.h"

namespace epivote {

Formula Formula::Make(Node node) {
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula::Formula() {
  static const std::shared_ptr<const Node> kTrueNode =
      std::make_shared<const Node>();
  node_ = kTrueNode;
}

Formula Formula::True() { return Formula(); }

Formula Formula::False() { return Not(True()); }

Formula Formula::ProfileAtom(Profile p) {
  Node n;
  n.kind = NodeKind::kProfile;
  n.profile = std::move(p);
  return Make(std::move(n));
}

Formula Formula::PrefAtom(Voter i, Preference o) {
  Node n;
  n.kind = NodeKind::kPref;
  n.voter = i;
  n.preference = std::move(o);
  return Make(std::move(n));
}

Formula Formula::CompAtom(Voter i, CandidateIndex a, CandidateIndex b) {
  Node n;
  n.kind = NodeKind::kComp;
  n.voter = i;
  n.a = a;
  n.b = b;
  return Make(std::move(n));
}

Formula Formula::WinsAtom(CandidateIndex a) {
  Node n;
  n.kind = NodeKind::kWins;
  n.a = a;
  return Make(std::move(n));
}

Formula Formula::Not(Formula f) {
  Node n;
  n.kind = NodeKind::kNot;
  n.left = std::move(f.node_);
  return Make(std::move(n));
}

Formula Formula::And(Formula l, Formula r) {
  Node n;
  n.kind = NodeKind::kAnd;
  n.left = std::move(l.node_);
  n.right = std::move(r.node_);
  return Make(std::move(n));
}

Formula Formula::Or(Formula l, Formula r) {
  return Not(And(Not(std::move(l)), Not(std::move(r))));
}

Formula Formula::Implies(Formula l, Formula r) {
  return Not(And(std::move(l), Not(std::move(r))));
}

Formula Formula::Iff(Formula l, Formula r) {
  return And(Implies(l, r), Implies(r, l));
}

Formula Formula::Know(Voter i, Formula f) {
  Node n;
  n.kind = NodeKind::kKnow;
  n.voter = i;
  n.left = std::move(f.node_);
  return Make(std::move(n));
}

Formula Formula::Possible(Voter i, Formula f) {
  return Not(Know(i, Not(std::move(f))));
}

Formula Formula::Announce(Formula announced, Formula then) {
  Node n;
  n.kind = NodeKind::kAnnounce;
  n.left = std::move(announced.node_);
  n.right = std::move(then.node_);
  return Make(std::move(n));
}

namespace {

template <typename Combine>
Formula Fold(std::vector<Formula>& fs, std::size_t lo, std::size_t hi,
             Combine combine) {
  if (hi - lo == 1) return fs[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return combine(Fold(fs, lo, mid, combine), Fold(fs, mid, hi, combine));
}

}  // namespace

Formula Formula::Conj(std::vector<Formula> fs) {
  if (fs.empty()) return True();
  return Fold(fs, 0, fs.size(), &Formula::And);
}

Formula Formula::Disj(std::vector<Formula> fs) {
  if (fs.empty()) return False();
  return Fold(fs, 0, fs.size(), &Formula::Or);
}

bool Formula::IsAtom() const {
  switch (kind()) {
    case NodeKind::kTrue:
    case NodeKind::kProfile:
    case NodeKind::kPref:
    case NodeKind::kComp:
    case NodeKind::kWins:
      return true;
    default:
      return false;
  }
}

bool Formula::HasAnnouncement() const {
  switch (kind()) {
    case NodeKind::kAnnounce:
      return true;
    case NodeKind::kNot:
    case NodeKind::kKnow:
      return child().HasAnnouncement();
    case NodeKind::kAnd:
      return left().HasAnnouncement() || right().HasAnnouncement();
    default:
      return false;
  }
}

std::size_t Formula::Size() const {
  switch (kind()) {
    case NodeKind::kNot:
    case NodeKind::kKnow:
      return 1 + child().Size();
    case NodeKind::kAnd:
    case NodeKind::kAnnounce:
      return 1 + left().Size() + right().Size();
    default:
      return 1;
  }
}

int Formula::ModalDepth() const {
  switch (kind()) {
    case NodeKind::kNot:
      return child().ModalDepth();
    case NodeKind::kKnow:
      return 1 + child().ModalDepth();
    case NodeKind::kAnd:
      return std::max(left().ModalDepth(), right().ModalDepth());
    case NodeKind::kAnnounce:
      return 1 + std::max(left().ModalDepth(), right().ModalDepth());
    default:
      return 0;
  }
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  const Node& x = *node_;
  const Node& y = *other.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case NodeKind::kTrue:
      return true;
    case NodeKind::kProfile:
      return x.profile == y.profile;
    case NodeKind::kPref:
      return x.voter == y.voter && x.preference == y.preference;
    case NodeKind::kComp:
      return x.voter == y.voter && x.a == y.a && x.b == y.b;
    case NodeKind::kWins:
      return x.a == y.a;
    case NodeKind::kNot:
      return child() == other.child();
    case NodeKind::kKnow:
      return x.voter == y.voter && child() == other.child();
    case NodeKind::kAnd:
    case NodeKind::kAnnounce:
      return left() == other.left() && right() == other.right();
  }
  return false;
}

namespace {

enum Prec { kIff = 1, kImplies, kOr, kAnd, kUnary, kAtom };

std::optional<std::pair<Formula, Formula>> AsOr(const Formula& f) {
  if (f.kind() != NodeKind::kNot) return std::nullopt;
  const Formula c = f.child();
  if (c.kind() != NodeKind::kAnd || c.left().kind() != NodeKind::kNot ||
      c.right().kind() != NodeKind::kNot) {
    return std::nullopt;
  }
  return std::make_pair(c.left().child(), c.right().child());
}

std::optional<std::pair<Formula, Formula>> AsImplies(const Formula& f) {
  if (f.kind() != NodeKind::kNot) return std::nullopt;
  const Formula c = f.child();
  if (c.kind() != NodeKind::kAnd || c.right().kind() != NodeKind::kNot) {
    return std::nullopt;
  }
  return std::make_pair(c.left(), c.right().child());
}

std::optional<std::pair<Formula, Formula>> AsIff(const Formula& f) {
  if (f.kind() != NodeKind::kAnd) return std::nullopt;
  const auto l = AsImplies(f.left());
  const auto r = AsImplies(f.right());
  if (!l || !r || !(l->first == r->second) || !(l->second == r->first)) {
    return std::nullopt;
  }
  return l;
}

class Printer {
 public:
  explicit Printer(const Election& e) : e_(e) {}

  std::string Print(const Formula& f, int min_prec) const {
    int prec = kAtom;
    std::string s = Render(f, prec);
    return prec < min_prec ? "(" + s + ")" : s;
  }

 private:
  std::string Render(const Formula& f, int& prec) const {
    switch (f.kind()) {
      case NodeKind::kTrue:
        return "true";
      case NodeKind::kProfile: {
        std::string s = "profile{";
        for (Voter i = 1; i <= f.profile().num_voters(); ++i) {
          if (i > 1) s += "; ";
          s += std::to_string(i) + ": " +
               FormatPreference(e_, f.profile().Of(i));
        }
        return s + "}";
      }
      case NodeKind::kPref:
        return "pref " + std::to_string(f.voter()) + "(" +
               FormatPreference(e_, f.preference()) + ")";
      case NodeKind::kComp:
        return std::to_string(f.voter()) + ": " + e_.CandidateName(f.a()) +
               ">" + e_.CandidateName(f.b());
      case NodeKind::kWins:
        return "wins " + e_.CandidateName(f.a());
      case NodeKind::kNot:
        if (f.child().kind() == NodeKind::kTrue) return "false";
        if (auto p = AsOr(f)) {
          prec = kOr;
          return Print(p->first, kOr) + " | " + Print(p->second, kAnd);
        }
        if (auto p = AsImplies(f)) {
          prec = kImplies;
          return Print(p->first, kOr) + " -> " + Print(p->second, kImplies);
        }
        prec = kUnary;
        return "~" + Print(f.child(), kUnary);
      case NodeKind::kAnd:
        if (auto p = AsIff(f)) {
          prec = kIff;
          return Print(p->first, kIff) + " <-> " + Print(p->second, kImplies);
        }
        prec = kAnd;
        return Print(f.left(), kAnd) + " & " + Print(f.right(), kUnary);
      case NodeKind::kKnow:
        prec = kUnary;
        return "K" + std::to_string(f.voter()) + " " +
               Print(f.child(), kUnary);
      case NodeKind::kAnnounce:
        prec = kUnary;
        return "[" + Print(f.left(), 0) + "] " + Print(f.right(), kUnary);
    }
    return "?";
  }

  const Election& e_;
};

void CheckVoterRef(const Election& e, Voter i) {
  if (!e.HasVoter(i)) {
    throw Error(ErrorKind::kUnknownVoter,
                "voter " + std::to_string(i) + " is not in 1.." +
                    std::to_string(e.num_voters()));
  }
}

void CheckCandidateRef(const Election& e, CandidateIndex c) {
  if (c < 0 || c >= e.num_candidates()) {
    throw Error(ErrorKind::kUnknownCandidate,
                "candidate index " + std::to_string(c) + " out of range");
  }
}

void CheckOrder(const Election& e, const Preference& o) {
  if (o.size() != e.num_candidates()) {
    throw Error(ErrorKind::kIncompleteProfileAtom,
                "preference must rank all " +
                    std::to_string(e.num_candidates()) + " candidates");
  }
}

void CheckRec(const Election& e, const Formula& f,
              std::unordered_set<const void*>& seen) {
  if (!seen.insert(f.id()).second) return;
  switch (f.kind()) {
    case NodeKind::kTrue:
      return;
    case NodeKind::kProfile:
      if (f.profile().num_voters() != e.num_voters()) {
        throw Error(ErrorKind::kIncompleteProfileAtom,
                    "profile atom must cover all " +
                        std::to_string(e.num_voters()) + " voters");
      }
      for (const Preference& o : f.profile().prefs()) CheckOrder(e, o);
      return;
    case NodeKind::kPref:
      CheckVoterRef(e, f.voter());
      CheckOrder(e, f.preference());
      return;
    case NodeKind::kComp:
      CheckVoterRef(e, f.voter());
      CheckCandidateRef(e, f.a());
      CheckCandidateRef(e, f.b());
      return;
    case NodeKind::kWins:
      CheckCandidateRef(e, f.a());
      return;
    case NodeKind::kKnow:
      CheckVoterRef(e, f.voter());
      CheckRec(e, f.child(), seen);
      return;
    case NodeKind::kNot:
      CheckRec(e, f.child(), seen);
      return;
    case NodeKind::kAnd:
    case NodeKind::kAnnounce:
      CheckRec(e, f.left(), seen);
      CheckRec(e, f.right(), seen);
      return;
  }
}

}  // namespace

std::string FormatFormula(const Election& e, const Formula& f) {
  return Printer(e).Print(f, 0);
}

void CheckFormula(const Election& e, const Formula& f) {
  std::unordered_set<const void*> seen;
  CheckRec(e, f, seen);
}

}  // namespace epivote
