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

#include "epivote/dynamics.h"

#include <algorithm>
#include <sstream>

#include "epivote/error.h"
#include "epivote/model_io.h"
#include "epivote/random_models.h"
#include "epivote/semantics.h"

namespace epivote {

std::vector<StateIndex> DroppedStates(const UpdateResult& u) {
  std::vector<StateIndex> out;
  for (StateIndex s = 0; s < static_cast<StateIndex>(u.survived.size()); ++s) {
    if (!u.survived[s]) out.push_back(s);
  }
  return out;
}

UpdateResult Update(const ProfileModel& m, const VotingRule* rule,
                    const Formula& phi, std::optional<StateIndex> point) {
  UpdateResult u;
  u.survived = Denotation(m, rule, phi);
  if (point) {
    if (*point < 0 || *point >= m.num_states()) {
      throw Error(ErrorKind::kUnknownState, "point out of range");
    }
    if (!u.survived[*point]) {
      throw Error(ErrorKind::kPointEliminated,
                  "the announcement is false at " + m.label(*point));
    }
  }
  for (StateIndex s = 0; s < m.num_states(); ++s) {
    if (u.survived[s]) u.kept.push_back(s);
  }
  if (u.kept.empty()) {
    throw Error(ErrorKind::kEmptyResult, "the announcement holds nowhere");
  }
  u.model = Restrict(m, u.survived, &u.old_to_new);
  if (point) u.point = u.old_to_new[*point];
  return u;
}

ConditionalProfile UpdateConditionalProfile(const ProfileModel& m,
                                            const ConditionalProfile& cp,
                                            const UpdateResult& u) {
  CheckConditionalProfile(m, cp);
  std::vector<std::vector<Preference>> choices;
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    std::vector<Preference> row;
    for (const auto& block : u.model.blocks(i)) {
      row.push_back(cp.Choice(i, m.BlockIndex(i, u.kept[block.front()])));
    }
    choices.push_back(std::move(row));
  }
  return ConditionalProfile(std::move(choices));
}

const char* PropertyKindName(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::kManipulation: return "manipulation";
    case PropertyKind::kEquilibriumProfile: return "equilibrium_profile";
    case PropertyKind::kKnowsDeDicto: return "knows_de_dicto";
    case PropertyKind::kKnowsDeRe: return "knows_de_re";
    case PropertyKind::kDominantManipulation: return "dominant_manipulation";
    case PropertyKind::kConditionalEquilibrium:
      return "conditional_equilibrium";
  }
  return "?";
}

PropertyKind ParsePropertyKind(std::string_view name) {
  for (PropertyKind k :
       {PropertyKind::kManipulation, PropertyKind::kEquilibriumProfile,
        PropertyKind::kKnowsDeDicto, PropertyKind::kKnowsDeRe,
        PropertyKind::kDominantManipulation,
        PropertyKind::kConditionalEquilibrium}) {
    if (name == PropertyKindName(k)) return k;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown property '" + std::string(name) + "'");
}

namespace {

std::string ListPreferences(const Election& e,
                            const std::vector<Preference>& prefs) {
  if (prefs.empty()) return "-";
  std::string out;
  for (const Preference& p : prefs) {
    if (!out.empty()) out += ' ';
    out += FormatPreference(e, p);
  }
  return out;
}

StateIndex RequirePoint(const PropertyQuery& q) {
  if (!q.point) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(PropertyKindName(q.kind)) + " needs a point");
  }
  return *q.point;
}

}  // namespace

PropertyVerdict EvaluateProperty(const ProfileModel& m, const VotingRule& rule,
                                 const PropertyQuery& q) {
  const Election& e = m.election();
  PropertyVerdict v;
  if (q.kind == PropertyKind::kConditionalEquilibrium) {
    if (!q.cp) {
      throw Error(ErrorKind::kInvalidArgument,
                  "conditional_equilibrium needs a conditional profile");
    }
    const auto dev = FindBlockingDeviation(m, rule, *q.cp);
    v.holds = !dev.has_value();
    if (dev) {
      v.witness = "voter " + std::to_string(dev->who.voter) + " at " +
                  FormatStateSet(m, m.blocks(dev->who.voter)[dev->who.block]) +
                  " deviates to " + FormatPreference(e, dev->alt) + " (" +
                  std::to_string(dev->payoff_before) + " -> " +
                  std::to_string(dev->payoff_after) + ")";
    }
    return v;
  }
  const KnowledgeProfile kp(m, RequirePoint(q));
  e.CheckVoter(q.voter);
  switch (q.kind) {
    case PropertyKind::kManipulation: {
      std::vector<Preference> found;
      for (const Preference& alt : AllPreferences(e.num_candidates())) {
        if (IsManipulation(rule, kp.profile(), q.voter, alt)) {
          found.push_back(alt);
        }
      }
      v.holds = !found.empty();
      v.witness = ListPreferences(e, found);
      break;
    }
    case PropertyKind::kEquilibriumProfile:
      v.holds = IsEquilibriumProfile(rule, kp.profile());
      break;
    case PropertyKind::kKnowsDeDicto:
    case PropertyKind::kKnowsDeRe: {
      const KnowledgeMode mode = q.kind == PropertyKind::kKnowsDeDicto
                                     ? KnowledgeMode::kDeDicto
                                     : KnowledgeMode::kDeRe;
      const KnowledgeVerdict k = KnowsManipulation(kp, rule, q.voter, mode);
      v.holds = k.holds;
      std::ostringstream out;
      bool first = true;
      for (const auto& [profile, alts] : k.witnesses) {
        if (!first) out << "; ";
        first = false;
        if (mode == KnowledgeMode::kDeDicto) {
          out << "[" << FormatProfile(e, profile) << "] ";
        }
        out << ListPreferences(e, alts);
      }
      v.witness = out.str();
      break;
    }
    case PropertyKind::kDominantManipulation: {
      std::vector<Preference> found;
      for (const Preference& alt : AllPreferences(e.num_candidates())) {
        if (q.alt && !(alt == *q.alt)) continue;
        if (IsDominantManipulationOfInfoset(kp, rule, q.voter, alt)) {
          found.push_back(alt);
        }
      }
      v.holds = !found.empty();
      v.witness = ListPreferences(e, found);
      break;
    }
    case PropertyKind::kConditionalEquilibrium:
      break;
  }
  return v;
}

PreservationVerdict CheckPreservation(const ProfileModel& m,
                                      const VotingRule& rule,
                                      const Formula& phi,
                                      const PropertyQuery& q) {
  PreservationVerdict v;
  v.before = EvaluateProperty(m, rule, q);
  v.update = Update(m, &rule, phi, q.point);
  PropertyQuery after = q;
  after.point = v.update.point;
  if (q.cp) {
    v.updated_cp = UpdateConditionalProfile(m, *q.cp, v.update);
    after.cp = v.updated_cp;
  }
  v.after = EvaluateProperty(v.update.model, rule, after);
  return v;
}

std::string FormatPreservation(const ProfileModel& m,
                               const PreservationVerdict& v,
                               const PropertyQuery& q) {
  std::ostringstream out;
  out << "property: " << PropertyKindName(q.kind) << '\n';
  out << "survived: " << FormatStateSet(m, v.update.kept) << '\n';
  out << "dropped: " << FormatStateSet(m, DroppedStates(v.update)) << '\n';
  if (v.updated_cp) {
    out << "conditional profile: "
        << FormatConditionalProfile(m, *q.cp, false) << " -> "
        << FormatConditionalProfile(v.update.model, *v.updated_cp, false)
        << '\n';
  }
  auto line = [&](const char* when, const PropertyVerdict& p) {
    out << when << ": " << (p.holds ? "holds" : "fails");
    if (!p.witness.empty()) out << " (" << p.witness << ")";
    out << '\n';
  };
  line("before", v.before);
  line("after", v.after);
  out << "preserved: "
      << (!v.before.holds || v.after.holds ? "yes" : "no") << '\n';
  return out.str();
}

const char* HuntKindName(HuntKind kind) {
  switch (kind) {
    case HuntKind::kDominantManipulationNotPreserved:
      return "dominant_manipulation_not_preserved";
    case HuntKind::kConditionalEquilibriumNotPreserved:
      return "conditional_equilibrium_not_preserved";
    case HuntKind::kNotConditionalEquilibriumNotPreserved:
      return "not_conditional_equilibrium_not_preserved";
    case HuntKind::kKnowledgeOfManipulationNotPreserved:
      return "knowledge_of_manipulation_not_preserved";
  }
  return "?";
}

HuntKind ParseHuntKind(std::string_view name) {
  for (HuntKind k : {HuntKind::kDominantManipulationNotPreserved,
                     HuntKind::kConditionalEquilibriumNotPreserved,
                     HuntKind::kNotConditionalEquilibriumNotPreserved,
                     HuntKind::kKnowledgeOfManipulationNotPreserved}) {
    if (name == HuntKindName(k)) return k;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown hunt property '" + std::string(name) + "'");
}

namespace {

std::optional<Counterexample> TryDominant(const ProfileModel& m,
                                          const VotingRule& rule,
                                          StateIndex point,
                                          const UpdateResult& u) {
  const KnowledgeProfile before(m, point);
  const KnowledgeProfile after(u.model, *u.point);
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    for (const Preference& alt :
         AllPreferences(m.election().num_candidates())) {
      if (IsDominantManipulationOfInfoset(before, rule, i, alt) &&
          !IsDominantManipulationOfInfoset(after, rule, i, alt)) {
        Counterexample c;
        c.voter = i;
        c.alt = alt;
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> TryKnowledge(const ProfileModel& m,
                                           const VotingRule& rule,
                                           StateIndex point,
                                           const UpdateResult& u) {
  const KnowledgeProfile before(m, point);
  const KnowledgeProfile after(u.model, *u.point);
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    for (KnowledgeMode mode : {KnowledgeMode::kDeDicto, KnowledgeMode::kDeRe}) {
      if (KnowsManipulation(before, rule, i, mode).holds &&
          !KnowsManipulation(after, rule, i, mode).holds) {
        Counterexample c;
        c.voter = i;
        c.mode = mode;
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> TryConditional(const ProfileModel& m,
                                             const VotingRule& rule,
                                             const UpdateResult& u,
                                             bool equilibrium_before) {
  const StrategySpace space = rule.TopOnly() ? StrategySpace::kByTop
                                             : StrategySpace::kFullOrders;
  const ConditionalGame before(m, rule, space);
  const ConditionalGame after(u.model, rule, space);
  before.CheckSize(kDefaultSizeLimit);
  std::optional<Counterexample> found;
  before.ForEachProfile([&](std::span<const int> choice) {
    if (found || before.IsEquilibrium(choice) != equilibrium_before) return;
    const ConditionalProfile cp = before.Decode(choice);
    const ConditionalProfile updated = UpdateConditionalProfile(m, cp, u);
    const auto code = after.Encode(updated);
    if (after.IsEquilibrium(*code) == equilibrium_before) return;
    Counterexample c;
    c.cp = cp;
    c.updated_cp = updated;
    found = c;
  });
  return found;
}

}  // namespace

HuntResult SearchCounterexample(const Election& e, const VotingRule& rule,
                                HuntKind kind, const HuntOptions& options) {
  HuntResult result;
  result.seed = options.seed;
  Rng rng(options.seed);
  for (int trial = 1; trial <= options.budget; ++trial) {
    result.trials = trial;
    const int pool = std::uniform_int_distribution<int>(0, 3)(rng);
    const ProfileModel m = RandomModel(rng, e, options.max_states, pool);
    const StateIndex point =
        std::uniform_int_distribution<int>(0, m.num_states() - 1)(rng);
    Formula phi;
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
      const Voter i = std::uniform_int_distribution<int>(1, e.num_voters())(rng);
      phi = Formula::PrefAtom(i, m.valuation(point).Of(i));
    } else {
      FormulaOptions fo;
      fo.max_depth = 2;
      phi = RandomFormula(rng, m, fo);
      if (!Denotation(m, &rule, phi)[point]) phi = Formula::Not(phi);
    }
    const UpdateResult u = Update(m, &rule, phi, point);
    if (u.kept.size() == static_cast<std::size_t>(m.num_states())) continue;

    std::optional<Counterexample> c;
    switch (kind) {
      case HuntKind::kDominantManipulationNotPreserved:
        c = TryDominant(m, rule, point, u);
        break;
      case HuntKind::kKnowledgeOfManipulationNotPreserved:
        c = TryKnowledge(m, rule, point, u);
        break;
      case HuntKind::kConditionalEquilibriumNotPreserved:
        c = TryConditional(m, rule, u, true);
        break;
      case HuntKind::kNotConditionalEquilibriumNotPreserved:
        c = TryConditional(m, rule, u, false);
        break;
    }
    if (c) {
      c->model = m;
      c->point = point;
      c->announcement = phi;
      c->trial = trial;
      result.example = std::move(c);
      return result;
    }
  }
  return result;
}

std::string FormatHuntResult(const VotingRule& rule, HuntKind kind,
                             const HuntResult& r) {
  std::ostringstream out;
  out << "hunt " << HuntKindName(kind) << " seed=" << r.seed
      << " trials=" << r.trials << ": ";
  if (!r.example) {
    out << "not found (budget exhausted)\n";
    return out.str();
  }
  const Counterexample& c = *r.example;
  const ProfileModel& m = c.model;
  const Election& e = m.election();
  out << "found\n";
  out << "announcement: " << FormatFormula(e, c.announcement) << '\n';
  if (c.voter != 0) out << "voter: " << c.voter << '\n';
  if (c.alt) out << "ballot: " << FormatPreference(e, *c.alt) << '\n';
  if (c.mode) {
    out << "mode: "
        << (*c.mode == KnowledgeMode::kDeDicto ? "de dicto" : "de re") << '\n';
  }
  if (c.cp) {
    const bool by_top = rule.TopOnly();
    const UpdateResult u = Update(m, &rule, c.announcement, c.point);
    out << "conditional profile: " << FormatConditionalProfile(m, *c.cp, by_top)
        << " -> " << FormatConditionalProfile(u.model, *c.updated_cp, by_top)
        << '\n';
  }
  ModelFile file;
  file.model = m;
  file.point = c.point;
  if (const auto* p = dynamic_cast<const Plurality*>(&rule)) {
    file.tiebreak = p->tiebreak();
  }
  out << "model:\n" << WriteModel(file);
  return out.str();
}

}  // namespace epivote
