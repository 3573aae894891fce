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

#include <string>
#include <vector>

#include "epivote/conditional.h"
#include "epivote/dynamics.h"
#include "epivote/error.h"
#include "epivote/formula_parser.h"
#include "epivote/random_models.h"
#include "epivote/semantics.h"
#include "epivote/strategic.h"
#include "test_util.h"

namespace {

using namespace epivote;
using testing::Abc;
using testing::Fixture;

Formula Parse(const ModelFile& f, const std::string& src) {
  return ParseFormula(src, f.model.election());
}

std::vector<std::string> Labels(const ProfileModel& m) { return m.labels(); }

TEST_CASE("announcing 1's preference in the t,u model") {
  const ModelFile f = Fixture("two_state_uncertain.model");
  const auto rule = testing::RuleOf(f);
  const StateIndex u = f.model.FindState("u");
  const UpdateResult r =
      Update(f.model, rule.get(), Parse(f, "pref 1(c>b>a)"), u);
  CHECK(Labels(r.model) == std::vector<std::string>{"u"});
  CHECK(DroppedStates(r) == std::vector<StateIndex>{f.model.FindState("t")});
  CHECK(r.point == 0);
  CHECK(IsConditionalEquilibrium(r.model, *rule,
                                 ParseConditionalProfile(r.model, "c;c")));
}

TEST_CASE("true changes nothing") {
  const ModelFile f = Fixture("three_state_stu.model");
  const auto rule = testing::RuleOf(f);
  const UpdateResult r = Update(f.model, rule.get(), Formula::True());
  CHECK(r.model == f.model);
  const ConditionalProfile cp = ParseConditionalProfile(f.model, "ca;bc");
  CHECK(UpdateConditionalProfile(f.model, cp, r) == cp);
}

TEST_CASE("after being told, 2 knows") {
  const ModelFile f = Fixture("three_state_stu.model");
  const StateIndex t = f.model.FindState("t");
  const UpdateResult r = Update(f.model, nullptr, Parse(f, "1: a>c"), t);
  CHECK(Labels(r.model) == std::vector<std::string>{"s", "t"});
  CHECK(Evaluate(KnowledgeProfile(r.model, *r.point), nullptr,
                 Parse(f, "K2(1: a>c)")));
}

TEST_CASE("updated conditional profiles") {
  const ModelFile f = Fixture("two_state_uncertain.model");
  const auto rule = testing::RuleOf(f);
  {
    const ConditionalProfile cp = ParseConditionalProfile(f.model, "bc;b");
    CHECK(IsConditionalEquilibrium(f.model, *rule, cp));
    const UpdateResult r = Update(f.model, rule.get(),
                                  Parse(f, "pref 1(a>b>c)"),
                                  f.model.FindState("t"));
    const ConditionalProfile after = UpdateConditionalProfile(f.model, cp, r);
    CHECK(FormatConditionalProfile(r.model, after, true) == "b;b");
    CHECK(IsConditionalEquilibrium(r.model, *rule, after));
  }
  {
    const ConditionalProfile cp = ParseConditionalProfile(f.model, "ac;b");
    CHECK(IsConditionalEquilibrium(f.model, *rule, cp));
    const UpdateResult r = Update(f.model, rule.get(),
                                  Parse(f, "pref 1(c>b>a)"),
                                  f.model.FindState("u"));
    const ConditionalProfile after = UpdateConditionalProfile(f.model, cp, r);
    CHECK(FormatConditionalProfile(r.model, after, true) == "c;b");
    CHECK_FALSE(IsConditionalEquilibrium(r.model, *rule, after));
  }
}

TEST_CASE("update errors") {
  const ModelFile f = Fixture("two_state_uncertain.model");
  try {
    Update(f.model, nullptr, Parse(f, "pref 1(c>b>a)"), f.model.FindState("t"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPointEliminated);
  }
  try {
    Update(f.model, nullptr, Formula::False());
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEmptyResult);
  }
}

TEST_CASE("both voting c becomes an equilibrium once 1 speaks") {
  const ModelFile f = Fixture("two_state_uncertain.model");
  const auto rule = testing::RuleOf(f);
  PropertyQuery q;
  q.kind = PropertyKind::kConditionalEquilibrium;
  q.point = f.model.FindState("u");
  q.cp = ParseConditionalProfile(f.model, "cc;c");
  const PreservationVerdict v =
      CheckPreservation(f.model, *rule, Parse(f, "pref 1(c>b>a)"), q);
  CHECK_FALSE(v.before.holds);
  CHECK(v.after.holds);
  REQUIRE(v.updated_cp.has_value());
  CHECK(FormatConditionalProfile(v.update.model, *v.updated_cp, true) == "c;c");
  const std::string text = FormatPreservation(f.model, v, q);
  CHECK(text.find("preserved") != std::string::npos);
}

TEST_CASE("identity update preserves every property") {
  const ModelFile f = Fixture("three_state_stu.model");
  const auto rule = testing::RuleOf(f);
  for (StateIndex s = 0; s < f.model.num_states(); ++s) {
    for (PropertyKind k :
         {PropertyKind::kManipulation, PropertyKind::kEquilibriumProfile,
          PropertyKind::kKnowsDeDicto, PropertyKind::kKnowsDeRe,
          PropertyKind::kDominantManipulation,
          PropertyKind::kConditionalEquilibrium}) {
      for (Voter i = 1; i <= 2; ++i) {
        PropertyQuery q;
        q.kind = k;
        q.point = s;
        q.voter = i;
        q.cp = ParseConditionalProfile(f.model, "bc;bc");
        const auto v = CheckPreservation(f.model, *rule, Formula::True(), q);
        CHECK(v.before.holds == v.after.holds);
      }
    }
  }
}

TEST_CASE("knowledge of manipulation survives truthful announcements") {
  testing::Gen g(51);
  const Election e = Abc(2);
  int held = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Plurality rule(e, g.Order(3));
    const ProfileModel m = RandomModel(g.engine(), e, 4);
    const StateIndex s = g.Below(m.num_states());
    FormulaOptions opt;
    opt.max_depth = 2;
    Formula phi = RandomFormula(g.engine(), m, opt);
    if (!Denotation(m, &rule, phi)[s]) phi = Formula::Not(phi);
    for (PropertyKind k :
         {PropertyKind::kKnowsDeDicto, PropertyKind::kKnowsDeRe}) {
      for (Voter i = 1; i <= 2; ++i) {
        PropertyQuery q;
        q.kind = k;
        q.point = s;
        q.voter = i;
        const auto v = CheckPreservation(m, rule, phi, q);
        if (!v.before.holds) continue;
        ++held;
        CHECK(v.after.holds);
      }
    }
  }
  CHECK(held > 0);
}

TEST_CASE("hunts") {
  const Election e = Abc(2);
  const Plurality rule(e, testing::Pref(e, "a>b>c"));
  HuntOptions opt;
  {
    const HuntResult r = SearchCounterexample(
        e, rule, HuntKind::kConditionalEquilibriumNotPreserved, opt);
    REQUIRE(r.example.has_value());
    const Counterexample& c = *r.example;
    CHECK(IsConditionalEquilibrium(c.model, rule, *c.cp));
    const UpdateResult u = Update(c.model, &rule, c.announcement, c.point);
    CHECK_FALSE(IsConditionalEquilibrium(
        u.model, rule, UpdateConditionalProfile(c.model, *c.cp, u)));
  }
  {
    const HuntResult r = SearchCounterexample(
        e, rule, HuntKind::kNotConditionalEquilibriumNotPreserved, opt);
    REQUIRE(r.example.has_value());
    const Counterexample& c = *r.example;
    CHECK_FALSE(IsConditionalEquilibrium(c.model, rule, *c.cp));
    const UpdateResult u = Update(c.model, &rule, c.announcement, c.point);
    CHECK(IsConditionalEquilibrium(
        u.model, rule, UpdateConditionalProfile(c.model, *c.cp, u)));
  }
  {
    const HuntResult r = SearchCounterexample(
        e, rule, HuntKind::kDominantManipulationNotPreserved, opt);
    REQUIRE(r.example.has_value());
    const Counterexample& c = *r.example;
    const UpdateResult u = Update(c.model, &rule, c.announcement, c.point);
    CHECK(IsDominantManipulationOfInfoset(KnowledgeProfile(c.model, c.point),
                                          rule, c.voter, *c.alt));
    CHECK_FALSE(IsDominantManipulationOfInfoset(
        KnowledgeProfile(u.model, *u.point), rule, c.voter, *c.alt));
  }
  {
    opt.budget = 500;
    const HuntResult r = SearchCounterexample(
        e, rule, HuntKind::kKnowledgeOfManipulationNotPreserved, opt);
    CHECK_FALSE(r.example.has_value());
    CHECK(r.trials == 500);
  }
}

TEST_CASE("hunts are reproducible from the seed") {
  const Election e = Abc(2);
  const Plurality rule(e, testing::Pref(e, "b>a>c"));
  HuntOptions opt;
  opt.seed = 9;
  const auto kind = HuntKind::kConditionalEquilibriumNotPreserved;
  CHECK(FormatHuntResult(rule, kind, SearchCounterexample(e, rule, kind, opt)) ==
        FormatHuntResult(rule, kind, SearchCounterexample(e, rule, kind, opt)));
}

TEST_CASE("property names") {
  CHECK(ParsePropertyKind("knows_de_re") == PropertyKind::kKnowsDeRe);
  CHECK_THROWS_AS(ParsePropertyKind("nope"), Error);
  CHECK(ParseHuntKind("dominant_manipulation_not_preserved") ==
        HuntKind::kDominantManipulationNotPreserved);
  CHECK_THROWS_AS(ParseHuntKind("nope"), Error);
  PropertyQuery q;
  q.kind = PropertyKind::kKnowsDeRe;
  const ModelFile f = Fixture("one_state_opposed.model");
  CHECK_THROWS_AS(EvaluateProperty(f.model, *testing::RuleOf(f), q), Error);
}

}  // namespace
