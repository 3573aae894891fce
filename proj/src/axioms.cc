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

#include "epivote/axioms.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "epivote/formula.h"
#include "epivote/semantics.h"

namespace epivote {

AxiomReport CheckAxioms(const ProfileModel& m) {
  AxiomReport report;
  const Election& e = m.election();

  // Only profiles occurring in the valuation can hold anywhere, so counting
  // over them is the same as counting over every profile of the election.
  std::set<Profile> occurring;
  for (StateIndex s = 0; s < m.num_states(); ++s) {
    occurring.insert(m.valuation(s));
  }
  std::vector<int> count(m.num_states(), 0);
  for (const Profile& p : occurring) {
    const bool complete =
        p.num_voters() == e.num_voters() &&
        std::all_of(p.prefs().begin(), p.prefs().end(), [&](const Preference& o) {
          return o.size() == e.num_candidates();
        });
    if (!complete) continue;
    const StateSet d = Denotation(m, nullptr, Formula::ProfileAtom(p));
    for (StateIndex s = 0; s < m.num_states(); ++s) count[s] += d[s];
  }
  for (StateIndex s = 0; s < m.num_states(); ++s) {
    if (count[s] != 1) {
      report.p_valid = false;
      report.violations.push_back(
          {'P', s, 0,
           std::to_string(count[s]) + " profile atoms hold, expected 1"});
    }
  }

  for (Voter i = 1; i <= m.num_voters(); ++i) {
    std::set<Preference> prefs;
    for (StateIndex s = 0; s < m.num_states(); ++s) {
      prefs.insert(m.valuation(s).Of(i));
    }
    for (const Preference& o : prefs) {
      const Formula atom = Formula::PrefAtom(i, o);
      const StateSet d = Denotation(
          m, nullptr, Formula::Implies(atom, Formula::Know(i, atom)));
      for (StateIndex s = 0; s < m.num_states(); ++s) {
        if (d[s]) continue;
        report.n_valid = false;
        report.violations.push_back(
            {'N', s, i,
             "voter " + std::to_string(i) + " does not know pref " +
                 std::to_string(i) + "(" + FormatPreference(e, o) + ")"});
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const AxiomViolation& x, const AxiomViolation& y) {
              return std::tie(x.axiom, x.state, x.voter) <
                     std::tie(y.axiom, y.state, y.voter);
            });
  return report;
}

std::string FormatAxiomReport(const ProfileModel& m, const AxiomReport& r) {
  std::ostringstream out;
  out << "P: " << (r.p_valid ? "valid" : "invalid") << '\n';
  out << "N: " << (r.n_valid ? "valid" : "invalid") << '\n';
  for (const AxiomViolation& v : r.violations) {
    out << "  " << v.axiom << " fails at " << m.label(v.state) << ": "
        << v.detail << '\n';
  }
  return out.str();
}

}  // namespace epivote
