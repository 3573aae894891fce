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

#include "epivote/characteristic.h"

#include <algorithm>
#include <map>
#include <utility>

#include "epivote/error.h"

namespace epivote {
namespace {

using Signature = std::pair<int, std::vector<std::vector<int>>>;

std::vector<std::vector<StateIndex>> Members(const std::vector<int>& class_of,
                                             int num_classes) {
  std::vector<std::vector<StateIndex>> out(num_classes);
  for (StateIndex s = 0; s < static_cast<StateIndex>(class_of.size()); ++s) {
    out[class_of[s]].push_back(s);
  }
  return out;
}

}  // namespace

Bisimulation ComputeBisimulation(const ProfileModel& m) {
  Bisimulation b;
  std::map<Profile, int> seed;
  for (StateIndex s = 0; s < m.num_states(); ++s) {
    auto [it, fresh] = seed.emplace(m.valuation(s), static_cast<int>(seed.size()));
    if (fresh) b.formulas.push_back(Formula::ProfileAtom(m.valuation(s)));
    b.class_of.push_back(it->second);
  }
  b.classes = Members(b.class_of, static_cast<int>(b.formulas.size()));

  while (true) {
    std::map<Signature, int> ids;
    std::vector<Signature> sigs;
    std::vector<int> next(m.num_states());
    for (StateIndex s = 0; s < m.num_states(); ++s) {
      Signature sig{b.class_of[s], {}};
      for (Voter i = 1; i <= m.num_voters(); ++i) {
        std::vector<int> seen;
        const int block = m.BlockIndex(i, s);
        if (block >= 0) {
          for (StateIndex t : m.blocks(i)[block]) seen.push_back(b.class_of[t]);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        sig.second.push_back(std::move(seen));
      }
      auto [it, fresh] = ids.emplace(sig, static_cast<int>(sigs.size()));
      if (fresh) sigs.push_back(std::move(sig));
      next[s] = it->second;
    }
    if (sigs.size() == b.classes.size()) break;

    ++b.rounds;
    const auto members = Members(next, static_cast<int>(sigs.size()));
    std::vector<Formula> formulas;
    for (std::size_t c = 0; c < sigs.size(); ++c) {
      const auto& [old, seen] = sigs[c];
      if (members[c] == b.classes[old]) {
        formulas.push_back(b.formulas[old]);
        continue;
      }
      std::vector<Formula> parts{b.formulas[old]};
      for (Voter i = 1; i <= m.num_voters(); ++i) {
        std::vector<Formula> options;
        for (int d : seen[i - 1]) {
          parts.push_back(Formula::Possible(i, b.formulas[d]));
          options.push_back(b.formulas[d]);
        }
        parts.push_back(Formula::Know(i, Formula::Disj(std::move(options))));
      }
      formulas.push_back(Formula::Conj(std::move(parts)));
    }
    b.class_of = std::move(next);
    b.classes = members;
    b.formulas = std::move(formulas);
  }
  return b;
}

CharacteristicFormula CharacteristicFormulaOf(const ProfileModel& m,
                                              const InformationSet& target) {
  return CharacteristicFormulaOf(m, target, ComputeBisimulation(m));
}

CharacteristicFormula CharacteristicFormulaOf(const ProfileModel& m,
                                              const InformationSet& target,
                                              const Bisimulation& bisim) {
  std::vector<bool> inside(m.num_states(), false);
  for (StateIndex s : target.states) inside[s] = true;
  std::vector<Formula> disjuncts;
  for (std::size_t c = 0; c < bisim.classes.size(); ++c) {
    const auto& members = bisim.classes[c];
    const bool any = std::any_of(members.begin(), members.end(),
                                 [&](StateIndex s) { return inside[s]; });
    const bool all = std::all_of(members.begin(), members.end(),
                                 [&](StateIndex s) { return inside[s]; });
    if (any && !all) {
      throw Error(ErrorKind::kIndistinguishable,
                  "states " + FormatStateSet(m, members) +
                      " are bisimilar but only some lie in " +
                      FormatStateSet(m, target.states));
    }
    if (all) disjuncts.push_back(bisim.formulas[c]);
  }
  return {target, Formula::Disj(std::move(disjuncts))};
}

std::vector<std::vector<Formula>> DistinguishingFormulas(const ProfileModel& m) {
  const Bisimulation bisim = ComputeBisimulation(m);
  std::vector<std::vector<Formula>> out;
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    std::vector<Formula> row;
    for (std::size_t b = 0; b < m.blocks(i).size(); ++b) {
      InformationSet info{i, static_cast<int>(b), m.blocks(i)[b]};
      row.push_back(CharacteristicFormulaOf(m, info, bisim).formula);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace epivote
