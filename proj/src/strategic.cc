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

#include "epivote/strategic.h"

#include <algorithm>
#include <sstream>

#include "epivote/error.h"

namespace epivote {
namespace {

std::vector<Profile> PossibleProfiles(const KnowledgeProfile& kp, Voter i) {
  return ProfilesOf(kp.model(), GetInformationSet(kp.model(), i, kp.point()));
}

std::vector<Preference> ManipulationsOf(const VotingRule& rule,
                                        const Profile& p, Voter i) {
  std::vector<Preference> out;
  for (const Preference& alt : AllPreferences(rule.election().num_candidates())) {
    if (IsManipulation(rule, p, i, alt)) out.push_back(alt);
  }
  return out;
}

}  // namespace

CandidateIndex MinCandidate(const Preference& pref,
                            const std::vector<CandidateIndex>& cs) {
  if (cs.empty()) throw Error(ErrorKind::kEmptySet, "min over no candidates");
  CandidateIndex worst = cs.front();
  for (CandidateIndex c : cs) {
    if (pref.Prefers(worst, c)) worst = c;
  }
  return worst;
}

KnowledgeVerdict KnowsManipulation(const KnowledgeProfile& kp,
                                   const VotingRule& rule, Voter i,
                                   KnowledgeMode mode) {
  kp.model().election().CheckVoter(i);
  KnowledgeVerdict verdict;
  const std::vector<Profile> possible = PossibleProfiles(kp, i);
  if (mode == KnowledgeMode::kDeDicto) {
    verdict.holds = true;
    for (const Profile& p : possible) {
      std::vector<Preference> found = ManipulationsOf(rule, p, i);
      if (found.empty()) verdict.holds = false;
      verdict.witnesses.emplace(p, std::move(found));
    }
    return verdict;
  }
  std::vector<Preference> common =
      AllPreferences(rule.election().num_candidates());
  for (const Profile& p : possible) {
    std::erase_if(common, [&](const Preference& alt) {
      return !IsManipulation(rule, p, i, alt);
    });
  }
  verdict.holds = !common.empty();
  verdict.witnesses.emplace(kp.profile(), std::move(common));
  return verdict;
}

bool IsDominantManipulationOfInfoset(const KnowledgeProfile& kp,
                                     const VotingRule& rule, Voter i,
                                     const Preference& alt) {
  const Preference& truth = kp.profile().Of(i);
  bool some_strict = false;
  for (const Profile& p : PossibleProfiles(kp, i)) {
    const CandidateIndex sincere = rule.Winner(p);
    const CandidateIndex deviated = rule.Winner(p.With(i, alt));
    if (truth.Prefers(sincere, deviated)) return false;
    if (truth.Prefers(deviated, sincere)) some_strict = true;
  }
  return some_strict;
}

bool IsPessimisticManipulation(const KnowledgeProfile& kp,
                               const VotingRule& rule, Voter i,
                               const Preference& alt) {
  const Preference& truth = kp.profile().Of(i);
  std::vector<CandidateIndex> sincere;
  std::vector<CandidateIndex> deviated;
  for (const Profile& p : PossibleProfiles(kp, i)) {
    sincere.push_back(rule.Winner(p));
    deviated.push_back(rule.Winner(p.With(i, alt)));
  }
  return truth.Prefers(MinCandidate(truth, deviated),
                       MinCandidate(truth, sincere));
}

const char* ManipulationKindName(ManipulationKind kind) {
  switch (kind) {
    case ManipulationKind::kNone: return "none";
    case ManipulationKind::kHasManipulation: return "has_manipulation";
    case ManipulationKind::kPessimistic: return "pessimistic";
    case ManipulationKind::kDominantOfInfoset: return "dominant_of_infoset";
    case ManipulationKind::kKnowsDeDicto: return "knows_de_dicto";
    case ManipulationKind::kKnowsDeRe: return "knows_de_re";
  }
  return "?";
}

ManipulationReport Classify(const KnowledgeProfile& kp, const VotingRule& rule,
                            Voter i) {
  ManipulationReport report;
  report.voter = i;
  report.manipulations = ManipulationsOf(rule, kp.profile(), i);
  for (const Preference& alt :
       AllPreferences(rule.election().num_candidates())) {
    if (IsDominantManipulationOfInfoset(kp, rule, i, alt)) {
      report.dominant.push_back(alt);
    }
    if (IsPessimisticManipulation(kp, rule, i, alt)) {
      report.pessimistic.push_back(alt);
    }
  }
  report.de_dicto = KnowsManipulation(kp, rule, i, KnowledgeMode::kDeDicto);
  report.de_re = KnowsManipulation(kp, rule, i, KnowledgeMode::kDeRe);

  if (!report.manipulations.empty()) {
    report.labels.insert(ManipulationKind::kHasManipulation);
  }
  if (!report.pessimistic.empty()) {
    report.labels.insert(ManipulationKind::kPessimistic);
  }
  if (!report.dominant.empty()) {
    report.labels.insert(ManipulationKind::kDominantOfInfoset);
  }
  if (report.de_dicto.holds) report.labels.insert(ManipulationKind::kKnowsDeDicto);
  if (report.de_re.holds) report.labels.insert(ManipulationKind::kKnowsDeRe);
  if (!report.labels.empty()) report.kind = *report.labels.rbegin();
  return report;
}

std::string FormatReport(const KnowledgeProfile& kp,
                         const ManipulationReport& report) {
  const ProfileModel& m = kp.model();
  const Election& e = m.election();
  auto list = [&](const std::vector<Preference>& prefs) {
    std::string out;
    for (const Preference& p : prefs) {
      if (!out.empty()) out += ' ';
      out += FormatPreference(e, p);
    }
    return out.empty() ? std::string("-") : out;
  };
  std::ostringstream out;
  out << "voter " << report.voter << " at " << m.label(kp.point())
      << ": kind=" << ManipulationKindName(report.kind) << '\n';
  out << "  information set: "
      << FormatStateSet(m, GetInformationSet(m, report.voter, kp.point()).states)
      << '\n';
  out << "  manipulations: " << list(report.manipulations) << '\n';
  out << "  knows de dicto: " << (report.de_dicto.holds ? "yes" : "no") << '\n';
  for (const auto& [profile, alts] : report.de_dicto.witnesses) {
    out << "    [" << FormatProfile(e, profile) << "] " << list(alts) << '\n';
  }
  out << "  knows de re: " << (report.de_re.holds ? "yes" : "no");
  if (report.de_re.holds) {
    out << " " << list(report.de_re.witnesses.begin()->second);
  }
  out << '\n';
  out << "  dominant manipulations of information set: " << list(report.dominant)
      << '\n';
  out << "  pessimistic manipulations: " << list(report.pessimistic) << '\n';
  return out.str();
}

}  // namespace epivote
