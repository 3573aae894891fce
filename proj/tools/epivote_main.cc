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

// Command-line front end. Exit codes: 0 success (or "true"), 1 a negative
// verdict, 2 an error.

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "epivote/axioms.h"
#include "epivote/conditional.h"
#include "epivote/dynamics.h"
#include "epivote/error.h"
#include "epivote/formula.h"
#include "epivote/formula_parser.h"
#include "epivote/model_io.h"
#include "epivote/profile_model.h"
#include "epivote/rewriting.h"
#include "epivote/semantics.h"
#include "epivote/strategic.h"
#include "epivote/voting.h"

namespace epivote {
namespace {

struct Options {
  std::string model_path;
  std::string formula;
  std::string rule = "plurality";
  std::string point;
  std::string output;
  std::string candidates = "a b c";
  int voters = 2;
  std::string tiebreak;
  std::string property;
  std::string alt;
  std::string cp;
  int voter = 0;
  bool everywhere = false;
  bool by_top = false;
  bool matrix = false;
  bool records = false;
  bool all = false;
  bool expand = false;
  std::uint64_t seed = 1;
  int budget = 2000;
  int max_states = 4;
  std::uint64_t limit = kDefaultSizeLimit;
};

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::string word;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '>' || c == '\t') {
      if (!word.empty()) out.push_back(std::move(word));
      word.clear();
    } else {
      word += c;
    }
  }
  if (!word.empty()) out.push_back(std::move(word));
  return out;
}

std::optional<Preference> ParseOrderList(const Election& e,
                                         const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string order;
  for (const std::string& w : SplitList(text)) {
    if (!order.empty()) order += '>';
    order += w;
  }
  return ParsePreference(e, order);
}

void Emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path);
  out << text;
}

std::optional<StateIndex> PointOf(const ModelFile& file, const Options& o) {
  if (!o.point.empty()) return file.model.FindState(o.point);
  return file.point;
}

StateIndex RequirePoint(const ModelFile& file, const Options& o) {
  const auto point = PointOf(file, o);
  if (!point) {
    throw Error(ErrorKind::kInvalidArgument,
                "no point: add a 'point:' line or pass --point");
  }
  return *point;
}

std::unique_ptr<VotingRule> RuleFor(const ModelFile& file, const Options& o) {
  return MakeRule(o.rule, file.model.election(), file.tiebreak);
}

// A rule when the file supplies what it needs, otherwise none.
std::unique_ptr<VotingRule> OptionalRule(const ModelFile& file,
                                         const Options& o) {
  if (o.rule == "plurality" && !file.tiebreak) return nullptr;
  return RuleFor(file, o);
}

int RunCheck(const Options& o) {
  const ModelFile file = LoadModel(o.model_path);
  const ProfileModel& m = file.model;
  const Formula f = ParseFormula(o.formula, m.election());
  const auto rule = OptionalRule(file, o);
  const StateSet d = Denotation(m, rule.get(), f);
  const auto point = PointOf(file, o);
  if (point && !o.everywhere) {
    std::cout << (d[*point] ? "true" : "false") << '\n';
    return d[*point] ? 0 : 1;
  }
  bool all = true;
  for (StateIndex s = 0; s < m.num_states(); ++s) {
    std::cout << m.label(s) << ": " << (d[s] ? "true" : "false") << '\n';
    all = all && d[s];
  }
  return all ? 0 : 1;
}

int RunEquilibria(const Options& o) {
  const ModelFile file = LoadModel(o.model_path);
  const ProfileModel& m = file.model;
  const auto rule = RuleFor(file, o);
  const ConditionalGame game(
      m, *rule, o.by_top ? StrategySpace::kByTop : StrategySpace::kFullOrders);
  game.CheckSize(o.limit);
  if (o.matrix || o.records) {
    const PayoffTable table = BuildPayoffTable(game, o.limit);
    if (o.matrix) std::cout << FormatMatrix(game, table);
    if (o.matrix && o.records) std::cout << '\n';
    if (o.records) std::cout << FormatRecords(game, table, !o.all);
    return 0;
  }
  std::vector<ConditionalProfile> found;
  game.ForEachProfile([&](std::span<const int> choice) {
    if (game.IsEquilibrium(choice)) found.push_back(game.Decode(choice));
  });
  std::cout << "conditional equilibria: " << found.size() << " of "
            << game.NumProfiles() << (o.by_top ? " (by top)" : "") << '\n';
  for (const ConditionalProfile& cp : found) {
    std::cout << FormatConditionalProfile(m, cp, o.by_top) << '\n';
  }
  return 0;
}

int RunManipulations(const Options& o) {
  const ModelFile file = LoadModel(o.model_path);
  const ProfileModel& m = file.model;
  const auto rule = RuleFor(file, o);
  const KnowledgeProfile kp(m, RequirePoint(file, o));
  std::vector<Voter> voters;
  if (o.voter != 0) {
    m.election().CheckVoter(o.voter);
    voters.push_back(o.voter);
  } else {
    for (Voter i = 1; i <= m.num_voters(); ++i) voters.push_back(i);
  }
  for (Voter i : voters) {
    std::cout << FormatReport(kp, Classify(kp, *rule, i));
  }
  return 0;
}

int RunUpdate(const Options& o) {
  const ModelFile file = LoadModel(o.model_path);
  const ProfileModel& m = file.model;
  const Formula f = ParseFormula(o.formula, m.election());
  const auto rule = OptionalRule(file, o);
  const auto point = PointOf(file, o);
  const UpdateResult u = Update(m, rule.get(), f, point);
  ModelFile out;
  out.model = u.model;
  out.tiebreak = file.tiebreak;
  out.point = u.point;
  std::string text = WriteModel(out);
  if (!o.cp.empty()) {
    const bool by_top = o.cp.find('>') == std::string::npos;
    const ConditionalProfile cp = ParseConditionalProfile(m, o.cp);
    text += "# conditional profile: " + FormatConditionalProfile(m, cp, by_top) +
            " -> " +
            FormatConditionalProfile(u.model, UpdateConditionalProfile(m, cp, u),
                                     by_top) +
            "\n";
  }
  Emit(text, o.output);
  return 0;
}

int RunHypercube(const Options& o) {
  const Election e(SplitList(o.candidates), o.voters);
  ModelFile file;
  file.model = Hypercube(e, o.limit);
  file.tiebreak = ParseOrderList(e, o.tiebreak);
  Emit(WriteModel(file), o.output);
  return 0;
}

int RunReduce(const Options& o) {
  std::optional<ModelFile> file;
  Election e;
  if (!o.model_path.empty()) {
    file = LoadModel(o.model_path);
    e = file->model.election();
  } else {
    e = Election(SplitList(o.candidates), o.voters);
  }
  Formula f = ReduceAnnouncements(ParseFormula(o.formula, e));
  if (o.expand) {
    std::unique_ptr<VotingRule> rule;
    if (file) {
      rule = OptionalRule(*file, o);
    } else if (const auto tb = ParseOrderList(e, o.tiebreak)) {
      rule = MakeRule(o.rule, e, tb);
    }
    f = ExpandAbbreviations(f, e, rule.get(), o.limit);
  }
  std::cout << FormatFormula(e, f) << '\n';
  return 0;
}

int RunAxioms(const Options& o) {
  const ModelFile file = LoadModel(o.model_path, /*validate=*/false);
  const AxiomReport r = CheckAxioms(file.model);
  std::cout << FormatAxiomReport(file.model, r);
  return r.p_valid && r.n_valid ? 0 : 1;
}

int RunPreserve(const Options& o) {
  const ModelFile file = LoadModel(o.model_path);
  const ProfileModel& m = file.model;
  const Election& e = m.election();
  const auto rule = RuleFor(file, o);
  PropertyQuery q;
  q.kind = ParsePropertyKind(o.property);
  q.point = PointOf(file, o);
  q.voter = o.voter == 0 ? 1 : o.voter;
  q.alt = ParseOrderList(e, o.alt);
  if (!o.cp.empty()) q.cp = ParseConditionalProfile(m, o.cp);
  const PreservationVerdict v =
      CheckPreservation(m, *rule, ParseFormula(o.formula, e), q);
  std::cout << FormatPreservation(m, v, q);
  return 0;
}

int RunHunt(const Options& o) {
  const Election e(SplitList(o.candidates), o.voters);
  std::optional<Preference> tb = ParseOrderList(e, o.tiebreak);
  if (!tb) {
    std::vector<CandidateIndex> order;
    for (CandidateIndex c = 0; c < e.num_candidates(); ++c) order.push_back(c);
    tb = Preference(order);
  }
  const auto rule = MakeRule(o.rule, e, tb);
  const HuntKind kind = ParseHuntKind(o.property);
  HuntOptions options;
  options.seed = o.seed;
  options.budget = o.budget;
  options.max_states = o.max_states;
  const HuntResult r = SearchCounterexample(e, *rule, kind, options);
  std::cout << FormatHuntResult(*rule, kind, r);
  return r.example ? 0 : 1;
}

}  // namespace
}  // namespace epivote

int main(int argc, char** argv) {
  using namespace epivote;
  Options o;
  CLI::App app{"Strategic voting under higher-order uncertainty"};
  app.require_subcommand(1);
  std::function<int(const Options&)> run;

  auto model_arg = [&](CLI::App* sub) {
    sub->add_option("model", o.model_path, "model file")->required();
  };
  auto election_args = [&](CLI::App* sub) {
    sub->add_option("--candidates", o.candidates,
                    "candidate ids, e.g. \"a,b,c\"");
    sub->add_option("--voters", o.voters, "number of voters");
    sub->add_option("--tiebreak", o.tiebreak, "tie-breaking order, e.g. b,a,c");
  };

  CLI::App* check = app.add_subcommand("check", "evaluate a formula");
  model_arg(check);
  check->add_option("-f,--formula", o.formula, "formula")->required();
  check->add_option("--point", o.point, "state to evaluate at");
  check->add_flag("--everywhere", o.everywhere, "report every state");
  check->add_option("--rule", o.rule, "voting rule");
  check->callback([&] { run = RunCheck; });

  CLI::App* eq = app.add_subcommand("equilibria", "conditional equilibria");
  model_arg(eq);
  eq->add_flag("--by-top", o.by_top, "ballots identified by their top");
  eq->add_flag("--matrix", o.matrix, "winners and payoff grids (two voters)");
  eq->add_flag("--records", o.records, "one record per conditional profile");
  eq->add_flag("--all", o.all, "records for every profile, not only equilibria");
  eq->add_option("--rule", o.rule, "voting rule");
  eq->add_option("--limit", o.limit, "maximum number of conditional profiles");
  eq->callback([&] { run = RunEquilibria; });

  CLI::App* man = app.add_subcommand("manipulations", "strategic report");
  model_arg(man);
  man->add_option("--voter", o.voter, "only this voter");
  man->add_option("--point", o.point, "state to analyse");
  man->add_option("--rule", o.rule, "voting rule");
  man->callback([&] { run = RunManipulations; });

  CLI::App* upd = app.add_subcommand("update", "public announcement");
  model_arg(upd);
  upd->add_option("-f,--formula", o.formula, "announced formula")->required();
  upd->add_option("--point", o.point, "actual state");
  upd->add_option("--cp", o.cp, "conditional profile to carry along");
  upd->add_option("-o,--output", o.output, "output file");
  upd->add_option("--rule", o.rule, "voting rule");
  upd->callback([&] { run = RunUpdate; });

  CLI::App* hyp = app.add_subcommand("hypercube", "model of all profiles");
  election_args(hyp);
  hyp->add_option("-o,--output", o.output, "output file");
  hyp->add_option("--limit", o.limit, "maximum number of states");
  hyp->callback([&] { run = RunHypercube; });

  CLI::App* red = app.add_subcommand("reduce", "remove announcements");
  red->add_option("model", o.model_path, "model file supplying the election");
  red->add_option("-f,--formula", o.formula, "formula")->required();
  election_args(red);
  red->add_flag("--expand", o.expand, "also expand derived atoms");
  red->add_option("--rule", o.rule, "voting rule");
  red->add_option("--limit", o.limit, "maximum number of profiles");
  red->callback([&] { run = RunReduce; });

  CLI::App* ax = app.add_subcommand("axioms", "check axioms P and N");
  model_arg(ax);
  ax->callback([&] { run = RunAxioms; });

  CLI::App* pre = app.add_subcommand("preserve", "property before and after");
  model_arg(pre);
  pre->add_option("-f,--formula", o.formula, "announced formula")->required();
  pre->add_option("--property", o.property,
                  "manipulation | equilibrium_profile | knows_de_dicto | "
                  "knows_de_re | dominant_manipulation | "
                  "conditional_equilibrium")
      ->required();
  pre->add_option("--point", o.point, "actual state");
  pre->add_option("--voter", o.voter, "voter (default 1)");
  pre->add_option("--alt", o.alt, "ballot, e.g. b>a>c");
  pre->add_option("--cp", o.cp, "conditional profile, e.g. \"ac;b\"");
  pre->add_option("--rule", o.rule, "voting rule");
  pre->callback([&] { run = RunPreserve; });

  CLI::App* hunt = app.add_subcommand("hunt", "search for a counterexample");
  hunt->add_option("--property", o.property,
                   "dominant_manipulation_not_preserved | "
                   "conditional_equilibrium_not_preserved | "
                   "not_conditional_equilibrium_not_preserved | "
                   "knowledge_of_manipulation_not_preserved")
      ->required();
  hunt->add_option("--seed", o.seed, "random seed");
  hunt->add_option("--budget", o.budget, "number of trials");
  hunt->add_option("--max-states", o.max_states, "states per model");
  election_args(hunt);
  hunt->add_option("--rule", o.rule, "voting rule");
  hunt->callback([&] { run = RunHunt; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }
  try {
    return run(o);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
}
