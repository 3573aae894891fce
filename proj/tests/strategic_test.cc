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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "epivote/error.h"
#include "epivote/random_models.h"
#include "epivote/strategic.h"
#include "test_util.h"

namespace {

using namespace epivote;
using testing::Abc;
using testing::Fixture;
using testing::Pref;
using testing::Prof;

int Val(const Preference& p, int c) { return p.size() - p.Position(c); }

std::set<Preference> RefManipulations(const VotingRule& rule, const Profile& p,
                                      Voter i) {
  std::set<Preference> out;
  const int base = Val(p.Of(i), rule.Winner(p));
  for (const Preference& alt : AllPreferences(p.Of(i).size())) {
    if (Val(p.Of(i), rule.Winner(p.With(i, alt))) > base) out.insert(alt);
  }
  return out;
}

ProfileModel TwoStates(const Election& e, const Profile& p, const Profile& q,
                       Voter confused) {
  std::vector<Partition> parts;
  for (Voter i = 1; i <= e.num_voters(); ++i) {
    if (i == confused) {
      parts.push_back({{0, 1}});
    } else {
      parts.push_back({{0}, {1}});
    }
  }
  return ProfileModel(e, {"p", "q"}, {p, q}, parts);
}

TEST_CASE("worst candidate of a set") {
  const Election e = Abc(1);
  CHECK(MinCandidate(Pref(e, "c>b>a"), {0, 2}) == 0);
  CHECK(MinCandidate(Pref(e, "a>b>c"), {1}) == 1);
  CHECK(MinCandidate(Pref(e, "a>b>c"), {0, 1, 2}) == 2);
  CHECK_THROWS_AS(MinCandidate(Pref(e, "a>b>c"), {}), Error);
}

TEST_CASE("no knowledge of manipulation on the hypercube") {
  const Election e = Abc(2);
  const ProfileModel h = Hypercube(e);
  for (const Preference& tb : AllPreferences(3)) {
    const Plurality rule(e, tb);
    for (StateIndex s = 0; s < h.num_states(); ++s) {
      const KnowledgeProfile kp(h, s);
      for (Voter i = 1; i <= 2; ++i) {
        CHECK_FALSE(KnowsManipulation(kp, rule, i, KnowledgeMode::kDeDicto).holds);
        CHECK_FALSE(KnowsManipulation(kp, rule, i, KnowledgeMode::kDeRe).holds);
        const auto r = Classify(kp, rule, i);
        CHECK((r.kind == ManipulationKind::kNone ||
               r.kind == ManipulationKind::kHasManipulation ||
               r.kind == ManipulationKind::kPessimistic ||
               r.kind == ManipulationKind::kDominantOfInfoset));
      }
    }
  }
}

TEST_CASE("singleton information set with a manipulation") {
  const ModelFile f = Fixture("one_state_opposed.model");
  const auto rule = testing::RuleOf(f);
  const KnowledgeProfile kp(f.model, 0);
  CHECK(KnowsManipulation(kp, *rule, 2, KnowledgeMode::kDeDicto).holds);
  CHECK(KnowsManipulation(kp, *rule, 2, KnowledgeMode::kDeRe).holds);
  CHECK_FALSE(KnowsManipulation(kp, *rule, 1, KnowledgeMode::kDeDicto).holds);
}

TEST_CASE("two-state knowledge agrees with manipulation sets") {
  const Election e = Abc(2);
  const auto profiles = AllProfiles(e);
  for (const Preference& tb : {Pref(e, "b>a>c"), Pref(e, "a>b>c")}) {
    const Plurality rule(e, tb);
    for (const Profile& p : profiles) {
      for (const Profile& q : profiles) {
        if (p.Of(1) != q.Of(1) || !(p < q)) continue;
        const ProfileModel m = TwoStates(e, p, q, 1);
        const KnowledgeProfile kp(m, 0);
        const auto mp = RefManipulations(rule, p, 1);
        const auto mq = RefManipulations(rule, q, 1);
        std::vector<Preference> common;
        std::set_intersection(mp.begin(), mp.end(), mq.begin(), mq.end(),
                              std::back_inserter(common));
        const bool dicto = !mp.empty() && !mq.empty();
        const bool re = !common.empty();
        CHECK(KnowsManipulation(kp, rule, 1, KnowledgeMode::kDeDicto).holds ==
              dicto);
        CHECK(KnowsManipulation(kp, rule, 1, KnowledgeMode::kDeRe).holds == re);
      }
    }
  }
}

TEST_CASE("de dicto without de re") {
  const Election e({"a", "b", "c", "d"}, 3);
  const Plurality rule(e, Pref(e, "d>c>b>a"));
  const Profile p = Prof(e, {"a>b>c>d", "b>a>c>d", "d>a>b>c"});
  const Profile q = Prof(e, {"a>b>c>d", "c>a>b>d", "d>a>b>c"});
  const ProfileModel m = TwoStates(e, p, q, 1);
  const KnowledgeProfile kp(m, 0);
  CHECK(KnowsManipulation(kp, rule, 1, KnowledgeMode::kDeDicto).holds);
  CHECK_FALSE(KnowsManipulation(kp, rule, 1, KnowledgeMode::kDeRe).holds);
  const auto mp = RefManipulations(rule, p, 1);
  const auto mq = RefManipulations(rule, q, 1);
  REQUIRE(!mp.empty());
  REQUIRE(!mq.empty());
  for (const Preference& alt : mp) CHECK(alt.Top() == 1);
  for (const Preference& alt : mq) CHECK(alt.Top() == 2);
}

TEST_CASE("dominant manipulation of a singleton is a manipulation") {
  testing::Gen g(21);
  const Election e = Abc(3);
  for (int trial = 0; trial < 500; ++trial) {
    const Plurality rule(e, g.Order(3));
    const Profile p = g.ProfileOf(3, 3);
    const ProfileModel m(e, {"s"}, {p}, {{{0}}, {{0}}, {{0}}});
    const KnowledgeProfile kp(m, 0);
    const Voter i = 1 + g.Below(3);
    const Preference alt = g.Order(3);
    CHECK(IsDominantManipulationOfInfoset(kp, rule, i, alt) ==
          IsManipulation(rule, p, i, alt));
    CHECK(IsPessimisticManipulation(kp, rule, i, alt) ==
          IsManipulation(rule, p, i, alt));
  }
}

TEST_CASE("uncertain voter 2 in the t,u model") {
  const ModelFile f = Fixture("two_state_uncertain.model");
  const auto rule = testing::RuleOf(f);
  const ProfileModel& m = f.model;
  const Election& e = m.election();
  const Preference b_top = Pref(e, "b>c>a");
  for (const char* point : {"t", "u"}) {
    const KnowledgeProfile kp(m, m.FindState(point));
    // Reference: voting b keeps b in both profiles; sincerely 2 gets a in
    // t and c in u.
    const Profile opposed = Prof(e, {"a>b>c", "c>b>a"});
    const Profile shared = Prof(e, {"c>b>a", "c>b>a"});
    const Preference truth2 = Pref(e, "c>b>a");
    const int gain_t = Val(truth2, rule->Winner(opposed.With(2, b_top))) -
                       Val(truth2, rule->Winner(opposed));
    const int gain_u = Val(truth2, rule->Winner(shared.With(2, b_top))) -
                       Val(truth2, rule->Winner(shared));
    CHECK(gain_t > 0);
    CHECK(gain_u < 0);
    const bool ref_dominant = gain_t >= 0 && gain_u >= 0;
    CHECK(IsDominantManipulationOfInfoset(kp, *rule, 2, b_top) == ref_dominant);
    CHECK(IsPessimisticManipulation(kp, *rule, 2, b_top));
    CHECK_FALSE(IsPessimisticManipulation(kp, *rule, 2, truth2));
  }
}

TEST_CASE("de re knowledge yields a dominant manipulation") {
  testing::Gen g(22);
  const Election e = Abc(2);
  int seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Plurality rule(e, g.Order(3));
    const ProfileModel m = RandomModel(g.engine(), e, 4);
    const StateIndex s = g.Below(m.num_states());
    const KnowledgeProfile kp(m, s);
    for (Voter i = 1; i <= 2; ++i) {
      const auto r = Classify(kp, rule, i);
      if (!r.de_re.holds) continue;
      ++seen;
      for (const auto& [profile, alts] : r.de_re.witnesses) {
        for (const Preference& alt : alts) {
          CHECK(IsDominantManipulationOfInfoset(kp, rule, i, alt));
        }
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("dominant manipulation without manipulation or de dicto knowledge") {
  const Election e = Abc(2);
  const auto profiles = AllProfiles(e);
  bool without_manipulation = false, without_dicto = false;
  for (const Preference& tb : AllPreferences(3)) {
    const Plurality rule(e, tb);
    for (const Profile& p : profiles) {
      for (const Profile& q : profiles) {
        if (p.Of(1) != q.Of(1) || !(p < q)) continue;
        const ProfileModel m = TwoStates(e, p, q, 1);
        const KnowledgeProfile kp(m, 0);
        const Preference& truth = p.Of(1);
        for (const Preference& alt : AllPreferences(3)) {
          bool weak = true, strict = false;
          for (const Profile& r : {p, q}) {
            const int before = Val(truth, rule.Winner(r));
            const int after = Val(truth, rule.Winner(r.With(1, alt)));
            weak &= after >= before;
            strict |= after > before;
          }
          const bool dominant = weak && strict;
          CHECK(IsDominantManipulationOfInfoset(kp, rule, 1, alt) == dominant);
          if (!dominant) continue;
          if (RefManipulations(rule, p, 1).empty()) {
            without_manipulation = true;
          }
          if (!KnowsManipulation(kp, rule, 1, KnowledgeMode::kDeDicto).holds) {
            without_dicto = true;
          }
        }
      }
    }
  }
  CHECK(without_manipulation);
  CHECK(without_dicto);
}

TEST_CASE("dominant manipulation is the same across an information set") {
  testing::Gen g(23);
  const Election e = Abc(2);
  for (int trial = 0; trial < 300; ++trial) {
    const Plurality rule(e, g.Order(3));
    const ProfileModel m = RandomModel(g.engine(), e, 4);
    for (Voter i = 1; i <= 2; ++i) {
      for (const auto& block : m.blocks(i)) {
        for (const Preference& alt : AllPreferences(3)) {
          const bool first =
              IsDominantManipulationOfInfoset(KnowledgeProfile(m, block[0]),
                                              rule, i, alt);
          for (StateIndex s : block) {
            CHECK(IsDominantManipulationOfInfoset(KnowledgeProfile(m, s), rule,
                                                  i, alt) == first);
          }
        }
      }
    }
  }
}

TEST_CASE("single state classification is the classical case") {
  const Election e = Abc(2);
  const Plurality rule(e, Pref(e, "b>a>c"));
  for (const Profile& p : AllProfiles(e)) {
    const ProfileModel m(e, {"s"}, {p}, {{{0}}, {{0}}});
    const KnowledgeProfile kp(m, 0);
    for (Voter i = 1; i <= 2; ++i) {
      const auto r = Classify(kp, rule, i);
      const bool manipulable = !RefManipulations(rule, p, i).empty();
      CHECK((r.kind != ManipulationKind::kNone) == manipulable);
      CHECK(r.labels.count(ManipulationKind::kHasManipulation) ==
            (manipulable ? 1u : 0u));
      if (manipulable) CHECK(r.labels.size() == 5);
    }
  }
}

TEST_CASE("report text") {
  const ModelFile f = Fixture("two_state_uncertain.model");
  const auto rule = testing::RuleOf(f);
  const KnowledgeProfile kp(f.model, f.model.FindState("t"));
  const auto r = Classify(kp, *rule, 2);
  CHECK(r.kind == ManipulationKind::kPessimistic);
  const std::string text = FormatReport(kp, r);
  CHECK(text.find("voter 2 at t: kind=pessimistic") == 0);
}

}  // namespace
