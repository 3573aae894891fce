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

#include <set>
#include <string>
#include <vector>

#include "epivote/conditional.h"
#include "epivote/error.h"
#include "epivote/random_models.h"
#include "test_util.h"

namespace {

using namespace epivote;
using testing::Fixture;

std::set<std::string> EquilibriumLabels(const ModelFile& f) {
  const auto rule = testing::RuleOf(f);
  std::set<std::string> out;
  for (const auto& cp : EnumerateConditionalEquilibria(f.model, *rule, true)) {
    out.insert(FormatConditionalProfile(f.model, cp, true));
  }
  return out;
}

std::vector<int> Order(const Preference& p) { return p.ranking(); }

oracle::Tops TopsOf(const ProfileModel& m, const ConditionalProfile& cp) {
  oracle::Tops t{};
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    for (std::size_t b = 0; b < m.blocks(i).size(); ++b) {
      t[i - 1][b] = cp.Choice(i, static_cast<int>(b)).Top();
    }
  }
  return t;
}

TEST_CASE("induced votes") {
  const ModelFile f = Fixture("three_state_tuv.model");
  const ProfileModel& m = f.model;
  const ConditionalProfile cp = ParseConditionalProfile(m, "ac;bc");
  const Profile at_v = InducedVotes(m, cp, m.FindState("v"));
  CHECK(at_v.Of(1).Top() == 2);
  CHECK(at_v.Of(2).Top() == 2);
  const Profile at_u = InducedVotes(m, cp, m.FindState("u"));
  CHECK(at_u.Of(1).Top() == 2);
  CHECK(at_u.Of(2).Top() == 1);
  const ConditionalProfile sincere = SincereConditionalProfile(m);
  for (StateIndex s = 0; s < m.num_states(); ++s) {
    CHECK(InducedVotes(m, sincere, s) == m.valuation(s));
  }
}

TEST_CASE("payoff labels") {
  {
    const ModelFile f = Fixture("three_state_tuv.model");
    const auto rule = testing::RuleOf(f);
    const ConditionalGame game(f.model, *rule, StrategySpace::kByTop);
    const auto choice =
        game.Encode(ParseConditionalProfile(f.model, "ac;bc")).value();
    std::vector<int> payoffs;
    for (int vv = 0; vv < game.num_virtual_voters(); ++vv) {
      payoffs.push_back(game.Payoff(choice, vv));
    }
    CHECK(payoffs == std::vector<int>{1, 1, 1, 2});
    const PayoffTable table = BuildPayoffTable(game);
    for (const auto& o : table.outcomes) {
      if (o.choice != choice) continue;
      CHECK(WinnersLabel(game, o) == "bbc");
      CHECK(PayoffLabel(game, o) == "11.12");
      CHECK(o.equilibrium);
    }
  }
  {
    const ModelFile f = Fixture("two_state_uncertain.model");
    const auto rule = testing::RuleOf(f);
    const ConditionalGame game(f.model, *rule, StrategySpace::kByTop);
    const auto choice =
        game.Encode(ParseConditionalProfile(f.model, "ba;c")).value();
    ConditionalOutcome o;
    o.choice = choice;
    for (StateIndex s = 0; s < f.model.num_states(); ++s) {
      o.winners.push_back(game.WinnerAt(choice, s));
    }
    for (int vv = 0; vv < game.num_virtual_voters(); ++vv) {
      o.payoffs.push_back(game.Payoff(choice, vv));
    }
    CHECK(WinnersLabel(game, o) == "ba");
    CHECK(PayoffLabel(game, o) == "10.0");
  }
  {
    const ModelFile f = Fixture("one_state_shared.model");
    const auto rule = testing::RuleOf(f);
    const ConditionalProfile cp = ParseConditionalProfile(f.model, "c;c");
    CHECK(Payoff(f.model, *rule, cp, {1, 0}) == 2);
    CHECK(Payoff(f.model, *rule, cp, {2, 0}) == 2);
  }
}

TEST_CASE("single state payoff is the winner's rank") {
  testing::Gen g(31);
  const Election e = testing::Abc(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Preference tb = g.Order(3);
    const Plurality rule(e, tb);
    const Profile p = g.ProfileOf(2, 3);
    const ProfileModel m(e, {"s"}, {p}, {{{0}}, {{0}}});
    const ConditionalProfile cp({{g.Order(3)}, {g.Order(3)}});
    const CandidateIndex w = rule.Winner(InducedVotes(m, cp, 0));
    for (Voter i = 1; i <= 2; ++i) {
      CHECK(Payoff(m, rule, cp, {i, 0}) == p.Of(i).RankValue(w));
    }
  }
}

TEST_CASE("named equilibria") {
  const ModelFile tu_file = Fixture("two_state_uncertain.model");
  const auto rule2 = testing::RuleOf(tu_file);
  CHECK(IsConditionalEquilibrium(tu_file.model, *rule2,
                                 ParseConditionalProfile(tu_file.model, "ac;b")));
  CHECK_FALSE(IsConditionalEquilibrium(
      tu_file.model, *rule2, ParseConditionalProfile(tu_file.model, "cc;c")));
  const ModelFile tuv = Fixture("three_state_tuv.model");
  CHECK(IsConditionalEquilibrium(tuv.model, *testing::RuleOf(tuv),
                                 ParseConditionalProfile(tuv.model, "ac;bc")));
  const ModelFile stu = Fixture("three_state_stu.model");
  CHECK(IsConditionalEquilibrium(stu.model, *testing::RuleOf(stu),
                                 ParseConditionalProfile(stu.model, "bc;bc")));
  const auto dev = FindBlockingDeviation(
      tu_file.model, *rule2, ParseConditionalProfile(tu_file.model, "cc;c"));
  REQUIRE(dev.has_value());
  CHECK(dev->payoff_after > dev->payoff_before);
}

TEST_CASE("enumerated equilibria") {
  CHECK(EquilibriumLabels(Fixture("one_state_opposed.model")) ==
        std::set<std::string>{"a;b", "b;b"});
  CHECK(EquilibriumLabels(Fixture("one_state_shared.model")) ==
        std::set<std::string>{"a;b", "b;a", "b;b", "c;c"});
  std::set<std::string> tu_file;
  for (const std::string& xy : grids::kPairs) {
    if (xy != "cc") tu_file.insert(xy + ";b");
  }
  CHECK(EquilibriumLabels(Fixture("two_state_uncertain.model")) == tu_file);
  const auto tuv = EquilibriumLabels(Fixture("three_state_tuv.model"));
  for (const char* cp : {"ab;bc", "bb;bc", "ac;bc", "bc;bc"}) {
    CHECK(tuv.count(cp) == 1);
  }
  CHECK(tuv.size() == 14);
  CHECK(EquilibriumLabels(Fixture("three_state_stu.model")).size() == 14);
}

TEST_CASE("voter 2 votes c in an equilibrium at v but never at u") {
  const ModelFile f = Fixture("three_state_tuv.model");
  const auto rule = testing::RuleOf(f);
  const StateIndex u = f.model.FindState("u"), v = f.model.FindState("v");
  bool c_at_v = false, c_at_u = false;
  for (const auto& cp : EnumerateConditionalEquilibria(f.model, *rule, true)) {
    c_at_v |= InducedVotes(f.model, cp, v).Of(2).Top() == 2;
    c_at_u |= InducedVotes(f.model, cp, u).Of(2).Top() == 2;
  }
  CHECK(c_at_v);
  CHECK_FALSE(c_at_u);
  CHECK(f.model.valuation(u).Of(2) == f.model.valuation(v).Of(2));
}

TEST_CASE("b wins everywhere in every s,t,u equilibrium but one") {
  const ModelFile f = Fixture("three_state_stu.model");
  const auto rule = testing::RuleOf(f);
  std::set<std::string> exceptions;
  for (const auto& cp : EnumerateConditionalEquilibria(f.model, *rule, true)) {
    for (StateIndex s = 0; s < f.model.num_states(); ++s) {
      if (rule->Winner(InducedVotes(f.model, cp, s)) != 1) {
        exceptions.insert(FormatConditionalProfile(f.model, cp, true));
      }
    }
  }
  CHECK(exceptions == std::set<std::string>{"bc;bc"});
}

TEST_CASE("reference payoff grids") {
  for (const grids::Grid* g :
       {&grids::OpposedGrid(), &grids::SharedGrid(),
        &grids::TwoStateGrid(), &grids::StuGrid(), &grids::TuvGrid()}) {
    CAPTURE(g->name);
    const auto bad = testing::CompareGrid(*g, grids::Errata());
    for (const auto& line : bad) FAIL_CHECK(line);
    CHECK(bad.empty());
  }
}

TEST_CASE("game verdicts agree with the reference on random models") {
  testing::Gen g(32);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + g.Below(2);
    const Election e = testing::Abc(n);
    const Preference tb = g.Order(3);
    const Plurality rule(e, tb);
    const ProfileModel m = RandomModel(g.engine(), e, n == 2 ? 4 : 3);
    const ConditionalGame game(m, rule, StrategySpace::kByTop);
    if (game.NumProfiles() > 20000) continue;
    const oracle::Model om = oracle::FromProfileModel(m, Order(tb));
    int eq = 0;
    game.ForEachProfile([&](std::span<const int> choice) {
      const ConditionalProfile cp = game.Decode(choice);
      const bool ref = oracle::IsEquilibrium(om, TopsOf(m, cp));
      CHECK(game.IsEquilibrium(choice) == ref);
      eq += ref;
    });
    const auto listed = EnumerateConditionalEquilibria(m, rule, true);
    CHECK(static_cast<int>(listed.size()) == eq);
  }
}

TEST_CASE("full-order verdicts agree with the reference") {
  testing::Gen g(33);
  const Election e = testing::Abc(2);
  for (int trial = 0; trial < 400; ++trial) {
    const Preference tb = g.Order(3);
    const Plurality rule(e, tb);
    const ProfileModel m = RandomModel(g.engine(), e, 4);
    const oracle::Model om = oracle::FromProfileModel(m, Order(tb));
    std::vector<std::vector<Preference>> choices(2);
    for (Voter i = 1; i <= 2; ++i) {
      for (std::size_t b = 0; b < m.blocks(i).size(); ++b) {
        choices[i - 1].push_back(g.Order(3));
      }
    }
    const ConditionalProfile cp(choices);
    CHECK(IsConditionalEquilibrium(m, rule, cp) ==
          oracle::IsEquilibrium(om, TopsOf(m, cp)));
  }
}

TEST_CASE("conditional profile text") {
  const ModelFile f = Fixture("three_state_stu.model");
  const ConditionalProfile cp = ParseConditionalProfile(f.model, "ca;bc");
  CHECK(FormatConditionalProfile(f.model, cp, true) == "ca;bc");
  const std::string full = FormatConditionalProfile(f.model, cp, false);
  CHECK(ParseConditionalProfile(f.model, full) == cp);
  CHECK_THROWS_AS(ParseConditionalProfile(f.model, "ca"), Error);
  CHECK_THROWS_AS(ParseConditionalProfile(f.model, "cab;bc"), Error);
  CHECK_THROWS_AS(ParseConditionalProfile(f.model, "cx;bc"), Error);
}

TEST_CASE("size limit") {
  const Election e = testing::Abc(2);
  const ProfileModel h = Hypercube(e);
  const Plurality rule(e, testing::Pref(e, "a>b>c"));
  const ConditionalGame game(h, rule, StrategySpace::kFullOrders);
  try {
    game.CheckSize(1000);
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::kSizeLimit);
  }
  CHECK_THROWS_AS(EnumerateConditionalEquilibria(h, rule, true, 1000), Error);
}

}  // namespace
