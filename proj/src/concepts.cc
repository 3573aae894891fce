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

#include "epivote/concepts.h"

#include <vector>

#include "epivote/characteristic.h"

namespace epivote {

Formula WinnerBetter(const VotingRule& rule, Voter i, const Profile& p,
                     const Profile& q) {
  const CandidateIndex a = rule.Winner(p);
  const CandidateIndex b = rule.Winner(q);
  return Formula::Implies(
      Formula::And(Formula::Implies(Formula::ProfileAtom(p), Formula::WinsAtom(a)),
                   Formula::Implies(Formula::ProfileAtom(q), Formula::WinsAtom(b))),
      Formula::CompAtom(i, a, b));
}

Formula WinnerAtLeast(const VotingRule& rule, Voter i, const Profile& p,
                      const Profile& q) {
  return Formula::Not(WinnerBetter(rule, i, q, p));
}

Formula HasManipulationFormula(const VotingRule& rule, Voter i,
                               const Profile& p) {
  std::vector<Formula> options;
  for (const Preference& alt :
       AllPreferences(rule.election().num_candidates())) {
    options.push_back(ManipulationWithFormula(rule, i, p, alt));
  }
  return Formula::Disj(std::move(options));
}

Formula ManipulationWithFormula(const VotingRule& rule, Voter i,
                                const Profile& p, const Preference& alt) {
  return WinnerBetter(rule, i, p.With(i, alt), p);
}

Formula DominantManipulationFormula(const VotingRule& rule, Voter i,
                                    const Preference& alt,
                                    std::uint64_t limit) {
  std::vector<Formula> weak;
  std::vector<Formula> strict;
  for (const Profile& q : AllProfiles(rule.election(), limit)) {
    weak.push_back(WinnerAtLeast(rule, i, q.With(i, alt), q));
    strict.push_back(WinnerBetter(rule, i, q.With(i, alt), q));
  }
  return Formula::And(Formula::Conj(std::move(weak)),
                      Formula::Disj(std::move(strict)));
}

Formula KnowsManipulationFormula(const VotingRule& rule, Voter i,
                                 KnowledgeMode mode, std::uint64_t limit) {
  const std::vector<Profile> profiles = AllProfiles(rule.election(), limit);
  const std::vector<Preference> alts =
      AllPreferences(rule.election().num_candidates());
  if (mode == KnowledgeMode::kDeDicto) {
    std::vector<Formula> cases;
    for (const Profile& q : profiles) {
      std::vector<Formula> options;
      for (const Preference& alt : alts) {
        options.push_back(WinnerBetter(rule, i, q.With(i, alt), q));
      }
      cases.push_back(Formula::Implies(Formula::ProfileAtom(q),
                                       Formula::Disj(std::move(options))));
    }
    return Formula::Know(i, Formula::Conj(std::move(cases)));
  }
  std::vector<Formula> options;
  for (const Preference& alt : alts) {
    std::vector<Formula> cases;
    for (const Profile& q : profiles) {
      cases.push_back(Formula::Implies(
          Formula::ProfileAtom(q), WinnerBetter(rule, i, q.With(i, alt), q)));
    }
    options.push_back(Formula::Know(i, Formula::Conj(std::move(cases))));
  }
  return Formula::Disj(std::move(options));
}

Formula EquilibriumProfileFormula(const VotingRule& rule, const Profile& p) {
  std::vector<Formula> parts;
  const std::vector<Preference> alts =
      AllPreferences(rule.election().num_candidates());
  for (Voter i = 1; i <= rule.election().num_voters(); ++i) {
    for (const Preference& alt : alts) {
      parts.push_back(WinnerAtLeast(rule, i, p, p.With(i, alt)));
    }
  }
  return Formula::Conj(std::move(parts));
}

namespace {

struct Cell {
  Formula condition;
  std::vector<int> blocks;  // j(i) per voter
};

std::vector<Cell> Cells(const ProfileModel& m) {
  const auto names = DistinguishingFormulas(m);
  std::vector<Cell> out{{Formula::True(), {}}};
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    std::vector<Cell> next;
    for (const Cell& c : out) {
      for (std::size_t b = 0; b < names[i - 1].size(); ++b) {
        Cell d = c;
        d.condition = i == 1 ? names[0][b]
                             : Formula::And(c.condition, names[i - 1][b]);
        d.blocks.push_back(static_cast<int>(b));
        next.push_back(std::move(d));
      }
    }
    out = std::move(next);
  }
  return out;
}

Profile CellVotes(const ConditionalProfile& cp, const Cell& cell) {
  std::vector<Preference> votes;
  for (std::size_t i = 0; i < cell.blocks.size(); ++i) {
    votes.push_back(cp.Choice(static_cast<Voter>(i + 1), cell.blocks[i]));
  }
  return Profile(std::move(votes));
}

}  // namespace

Formula ConditionalEquilibriumFormula(const ProfileModel& m,
                                      const VotingRule& rule,
                                      const ConditionalProfile& cp) {
  CheckConditionalProfile(m, cp);
  const Election& e = m.election();
  const std::vector<Cell> cells = Cells(m);
  const std::vector<Preference> alts = AllPreferences(e.num_candidates());

  auto good = [&](Voter k, CandidateIndex x, const Preference* alt) {
    std::vector<Formula> parts;
    for (const Cell& cell : cells) {
      Profile votes = CellVotes(cp, cell);
      if (alt != nullptr) votes = votes.With(k, *alt);
      parts.push_back(Formula::Implies(
          cell.condition,
          Formula::Not(Formula::CompAtom(k, x, rule.Winner(votes)))));
    }
    return Formula::Conj(std::move(parts));
  };

  std::vector<Formula> parts;
  for (Voter k = 1; k <= m.num_voters(); ++k) {
    std::vector<Formula> sincere;
    for (CandidateIndex x = 0; x < e.num_candidates(); ++x) {
      sincere.push_back(Formula::Know(k, good(k, x, nullptr)));
    }
    for (const Preference& alt : alts) {
      for (CandidateIndex x = 0; x < e.num_candidates(); ++x) {
        parts.push_back(Formula::Implies(Formula::Know(k, good(k, x, &alt)),
                                         sincere[x]));
      }
    }
  }
  return Formula::Conj(std::move(parts));
}

}  // namespace epivote
