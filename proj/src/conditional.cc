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

#include "epivote/conditional.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "epivote/error.h"

namespace epivote {
namespace {

constexpr std::size_t kMaxWinnerTable = std::size_t{1} << 22;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(Trim(s.substr(start, pos == std::string_view::npos
                                           ? std::string_view::npos
                                           : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::vector<VirtualVoter> VirtualVoters(const ProfileModel& m) {
  std::vector<VirtualVoter> out;
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    for (int b = 0; b < static_cast<int>(m.blocks(i).size()); ++b) {
      out.push_back({i, b});
    }
  }
  return out;
}

ConditionalProfile ConditionalProfile::With(Voter i, int block,
                                            const Preference& alt) const {
  ConditionalProfile out = *this;
  out.choices_[i - 1][block] = alt;
  return out;
}

void CheckConditionalProfile(const ProfileModel& m,
                             const ConditionalProfile& cp) {
  if (static_cast<int>(cp.choices().size()) != m.num_voters()) {
    throw Error(ErrorKind::kInvalidArgument,
                "conditional profile needs one entry per voter");
  }
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    const auto& row = cp.choices()[i - 1];
    if (row.size() != m.blocks(i).size()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "voter " + std::to_string(i) + " needs " +
                      std::to_string(m.blocks(i).size()) + " ballots, got " +
                      std::to_string(row.size()));
    }
    for (const Preference& p : row) {
      if (p.size() != m.election().num_candidates()) {
        throw Error(ErrorKind::kInvalidArgument, "incomplete ballot");
      }
    }
  }
}

ConditionalProfile SincereConditionalProfile(const ProfileModel& m) {
  std::vector<std::vector<Preference>> choices;
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    std::vector<Preference> row;
    for (const auto& block : m.blocks(i)) {
      row.push_back(m.valuation(block.front()).Of(i));
    }
    choices.push_back(std::move(row));
  }
  return ConditionalProfile(std::move(choices));
}

Profile InducedVotes(const ProfileModel& m, const ConditionalProfile& cp,
                     StateIndex s) {
  std::vector<Preference> votes;
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    votes.push_back(cp.Choice(i, m.BlockIndex(i, s)));
  }
  return Profile(std::move(votes));
}

int Payoff(const ProfileModel& m, const VotingRule& rule,
           const ConditionalProfile& cp, const VirtualVoter& vv) {
  const auto& block = m.blocks(vv.voter)[vv.block];
  const Preference& truth = m.valuation(block.front()).Of(vv.voter);
  int worst = std::numeric_limits<int>::max();
  for (StateIndex s : block) {
    worst = std::min(worst, truth.RankValue(rule.Winner(InducedVotes(m, cp, s))));
  }
  return worst;
}

std::optional<BlockingDeviation> FindBlockingDeviation(
    const ProfileModel& m, const VotingRule& rule,
    const ConditionalProfile& cp) {
  CheckConditionalProfile(m, cp);
  const std::vector<Preference> alts =
      AllPreferences(m.election().num_candidates());
  for (const VirtualVoter& vv : VirtualVoters(m)) {
    const int before = Payoff(m, rule, cp, vv);
    for (const Preference& alt : alts) {
      if (alt == cp.Choice(vv.voter, vv.block)) continue;
      const int after = Payoff(m, rule, cp.With(vv.voter, vv.block, alt), vv);
      if (after > before) return BlockingDeviation{vv, alt, before, after};
    }
  }
  return std::nullopt;
}

bool IsConditionalEquilibrium(const ProfileModel& m, const VotingRule& rule,
                              const ConditionalProfile& cp) {
  return !FindBlockingDeviation(m, rule, cp).has_value();
}

ConditionalGame::ConditionalGame(const ProfileModel& m, const VotingRule& rule,
                                 StrategySpace space)
    : model_(&m),
      rule_(&rule),
      space_(space),
      num_voters_(m.num_voters()) {
  const int num_c = m.election().num_candidates();
  strategies_ = space == StrategySpace::kByTop ? TopPreferences(num_c)
                                               : AllPreferences(num_c);
  vvs_ = VirtualVoters(m);
  state_vv_.assign(static_cast<std::size_t>(m.num_states()) * num_voters_, -1);
  for (int k = 0; k < num_virtual_voters(); ++k) {
    const VirtualVoter& vv = vvs_[k];
    const auto& block = m.blocks(vv.voter)[vv.block];
    vv_states_.push_back(block);
    for (StateIndex s : block) state_vv_[s * num_voters_ + vv.voter - 1] = k;
    const Preference& truth = m.valuation(block.front()).Of(vv.voter);
    std::vector<int> rank(num_c);
    for (CandidateIndex c = 0; c < num_c; ++c) rank[c] = truth.RankValue(c);
    vv_rank_.push_back(std::move(rank));
  }

  const std::size_t s = strategies_.size();
  std::size_t table = 1;
  bool fits = true;
  for (int i = 0; i < num_voters_; ++i) {
    voter_weight_.push_back(table);
    if (table > kMaxWinnerTable / s) {
      fits = false;
      table = 0;
    } else {
      table *= s;
    }
  }
  if (fits) {
    winner_table_.resize(table);
    for (std::size_t code = 0; code < table; ++code) {
      std::size_t rest = code;
      std::vector<Preference> votes;
      for (int i = 0; i < num_voters_; ++i) {
        votes.push_back(strategies_[rest % s]);
        rest /= s;
      }
      winner_table_[code] = rule.Winner(Profile(std::move(votes)));
    }
  }
}

std::uint64_t ConditionalGame::NumProfiles() const {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  const std::uint64_t s = strategies_.size();
  for (std::size_t k = 0; k < vvs_.size(); ++k) {
    if (total > kMax / s) return kMax;
    total *= s;
  }
  return total;
}

void ConditionalGame::CheckSize(std::uint64_t limit) const {
  const std::uint64_t count = NumProfiles();
  if (count > limit) {
    throw Error(ErrorKind::kSizeLimit,
                std::to_string(count) + " conditional profiles, limit is " +
                    std::to_string(limit));
  }
}

std::size_t ConditionalGame::VoteCode(std::span<const int> choice,
                                      StateIndex s) const {
  std::size_t code = 0;
  for (int i = 0; i < num_voters_; ++i) {
    code += voter_weight_[i] * choice[state_vv_[s * num_voters_ + i]];
  }
  return code;
}

CandidateIndex ConditionalGame::WinnerOfCode(std::size_t code) const {
  if (!winner_table_.empty()) return winner_table_[code];
  const std::size_t s = strategies_.size();
  std::vector<Preference> votes;
  for (int i = 0; i < num_voters_; ++i) {
    votes.push_back(strategies_[code % s]);
    code /= s;
  }
  return rule_->Winner(Profile(std::move(votes)));
}

CandidateIndex ConditionalGame::WinnerAt(std::span<const int> choice,
                                         StateIndex s) const {
  if (winner_table_.empty()) {
    std::vector<Preference> votes;
    for (int i = 0; i < num_voters_; ++i) {
      votes.push_back(strategies_[choice[state_vv_[s * num_voters_ + i]]]);
    }
    return rule_->Winner(Profile(std::move(votes)));
  }
  return winner_table_[VoteCode(choice, s)];
}

int ConditionalGame::Payoff(std::span<const int> choice, int vv) const {
  int worst = std::numeric_limits<int>::max();
  for (StateIndex s : vv_states_[vv]) {
    worst = std::min(worst, vv_rank_[vv][WinnerAt(choice, s)]);
  }
  return worst;
}

std::optional<std::pair<int, int>> ConditionalGame::FindDeviation(
    std::span<const int> choice) const {
  const int num_s = num_strategies();
  // Without the table, deviations fall back to full re-evaluation.
  if (winner_table_.empty()) {
    std::vector<int> trial(choice.begin(), choice.end());
    for (int k = 0; k < num_virtual_voters(); ++k) {
      const int before = Payoff(choice, k);
      for (int alt = 0; alt < num_s; ++alt) {
        if (alt == choice[k]) continue;
        trial[k] = alt;
        const int after = Payoff(trial, k);
        trial[k] = choice[k];
        if (after > before) return std::make_pair(k, alt);
      }
    }
    return std::nullopt;
  }
  for (int k = 0; k < num_virtual_voters(); ++k) {
    const std::vector<StateIndex>& states = vv_states_[k];
    const std::vector<int>& rank = vv_rank_[k];
    const std::size_t weight = voter_weight_[vvs_[k].voter - 1];
    const int current = choice[k];
    int before = std::numeric_limits<int>::max();
    for (StateIndex s : states) {
      before = std::min(before, rank[winner_table_[VoteCode(choice, s)]]);
    }
    for (int alt = 0; alt < num_s; ++alt) {
      if (alt == current) continue;
      int after = std::numeric_limits<int>::max();
      for (StateIndex s : states) {
        const std::size_t code = VoteCode(choice, s) - weight * current +
                                 weight * alt;
        after = std::min(after, rank[winner_table_[code]]);
        if (after <= before) break;
      }
      if (after > before) return std::make_pair(k, alt);
    }
  }
  return std::nullopt;
}

ConditionalProfile ConditionalGame::Decode(std::span<const int> choice) const {
  std::vector<std::vector<Preference>> choices(num_voters_);
  for (int k = 0; k < num_virtual_voters(); ++k) {
    choices[vvs_[k].voter - 1].push_back(strategies_[choice[k]]);
  }
  return ConditionalProfile(std::move(choices));
}

std::optional<std::vector<int>> ConditionalGame::Encode(
    const ConditionalProfile& cp) const {
  CheckConditionalProfile(*model_, cp);
  std::vector<int> choice;
  for (const VirtualVoter& vv : vvs_) {
    const Preference& p = cp.Choice(vv.voter, vv.block);
    auto it = std::find(strategies_.begin(), strategies_.end(), p);
    if (it == strategies_.end()) return std::nullopt;
    choice.push_back(static_cast<int>(it - strategies_.begin()));
  }
  return choice;
}

std::vector<ConditionalProfile> EnumerateConditionalEquilibria(
    const ProfileModel& m, const VotingRule& rule, bool by_top,
    std::uint64_t limit) {
  ConditionalGame game(m, rule,
                       by_top ? StrategySpace::kByTop : StrategySpace::kFullOrders);
  game.CheckSize(limit);
  std::vector<ConditionalProfile> out;
  game.ForEachProfile([&](std::span<const int> choice) {
    if (game.IsEquilibrium(choice)) out.push_back(game.Decode(choice));
  });
  return out;
}

PayoffTable BuildPayoffTable(const ConditionalGame& game, std::uint64_t limit) {
  game.CheckSize(limit);
  PayoffTable table;
  const ProfileModel& m = game.model();
  game.ForEachProfile([&](std::span<const int> choice) {
    ConditionalOutcome outcome;
    outcome.choice.assign(choice.begin(), choice.end());
    for (StateIndex s = 0; s < m.num_states(); ++s) {
      outcome.winners.push_back(game.WinnerAt(choice, s));
    }
    for (int k = 0; k < game.num_virtual_voters(); ++k) {
      outcome.payoffs.push_back(game.Payoff(choice, k));
    }
    outcome.equilibrium = game.IsEquilibrium(choice);
    table.outcomes.push_back(std::move(outcome));
  });
  return table;
}

std::string StrategyLabel(const ConditionalGame& game,
                          std::span<const int> choice, Voter i) {
  const Election& e = game.model().election();
  const bool by_top = game.space() == StrategySpace::kByTop;
  const bool compact = by_top && e.CompactNames();
  std::string out;
  bool first = true;
  for (int k = 0; k < game.num_virtual_voters(); ++k) {
    if (game.virtual_voters()[k].voter != i) continue;
    if (!first && !compact) out += ',';
    first = false;
    const Preference& p = game.strategy(choice[k]);
    out += by_top ? e.CandidateName(p.Top()) : FormatPreference(e, p);
  }
  return out;
}

std::string WinnersLabel(const ConditionalGame& game,
                         const ConditionalOutcome& outcome) {
  return JoinCandidates(game.model().election(), outcome.winners);
}

std::string PayoffLabel(const ConditionalGame& game,
                        const ConditionalOutcome& outcome) {
  const bool wide = game.model().election().num_candidates() > 10;
  std::string out;
  Voter last = 0;
  for (int k = 0; k < game.num_virtual_voters(); ++k) {
    const Voter v = game.virtual_voters()[k].voter;
    if (last != 0 && v != last) {
      out += '.';
    } else if (last != 0 && wide) {
      out += ',';
    }
    last = v;
    out += std::to_string(outcome.payoffs[k]);
  }
  return out;
}

namespace {

std::string PadRight(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

}  // namespace

std::string FormatMatrix(const ConditionalGame& game, const PayoffTable& table) {
  const ProfileModel& m = game.model();
  if (m.num_voters() != 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "matrix display needs exactly two voters");
  }
  std::size_t cols = 1;
  for (std::size_t b = 0; b < m.blocks(2).size(); ++b) {
    cols *= game.num_strategies();
  }
  const std::size_t rows = table.outcomes.size() / cols;

  std::vector<std::string> row_labels, col_labels;
  for (std::size_t r = 0; r < rows; ++r) {
    row_labels.push_back(StrategyLabel(game, table.outcomes[r * cols].choice, 1));
  }
  for (std::size_t c = 0; c < cols; ++c) {
    col_labels.push_back(StrategyLabel(game, table.outcomes[c].choice, 2));
  }

  auto grid = [&](const std::string& title, auto cell) {
    std::vector<std::vector<std::string>> cells(rows, std::vector<std::string>(cols));
    std::size_t width = 0;
    for (const auto& l : col_labels) width = std::max(width, l.size());
    std::size_t head = 3;
    for (const auto& l : row_labels) head = std::max(head, l.size());
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        cells[r][c] = cell(table.outcomes[r * cols + c]);
        width = std::max(width, cells[r][c].size());
      }
    }
    std::ostringstream out;
    std::string header = PadRight("1\\2", head);
    for (const auto& l : col_labels) header += "  " + PadRight(l, width);
    while (!header.empty() && header.back() == ' ') header.pop_back();
    out << title << '\n' << header << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
      std::string line = PadRight(row_labels[r], head);
      for (std::size_t c = 0; c < cols; ++c) {
        line += "  " + PadRight(cells[r][c], width);
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
    return out.str();
  };

  std::string states;
  for (StateIndex s = 0; s < m.num_states(); ++s) states += " " + m.label(s);
  std::string out = grid("winners (states" + states + ")",
                         [&](const ConditionalOutcome& o) {
                           return WinnersLabel(game, o);
                         });
  out += '\n';
  out += grid("payoffs (* = conditional equilibrium)",
              [&](const ConditionalOutcome& o) {
                return PayoffLabel(game, o) + (o.equilibrium ? "*" : "");
              });
  return out;
}

std::string FormatRecords(const ConditionalGame& game, const PayoffTable& table,
                          bool only_equilibria) {
  const ProfileModel& m = game.model();
  const Election& e = m.election();
  std::ostringstream out;
  for (const ConditionalOutcome& o : table.outcomes) {
    if (only_equilibria && !o.equilibrium) continue;
    out << "strategies=";
    for (Voter i = 1; i <= m.num_voters(); ++i) {
      if (i > 1) out << ';';
      out << StrategyLabel(game, o.choice, i);
    }
    out << " winners=";
    for (StateIndex s = 0; s < m.num_states(); ++s) {
      if (s > 0) out << ',';
      out << m.label(s) << ':' << e.CandidateName(o.winners[s]);
    }
    out << " payoffs=";
    for (int k = 0; k < game.num_virtual_voters(); ++k) {
      const VirtualVoter& vv = game.virtual_voters()[k];
      if (k > 0) out << ',';
      out << vv.voter << '@';
      const auto& block = m.blocks(vv.voter)[vv.block];
      for (std::size_t j = 0; j < block.size(); ++j) {
        if (j > 0) out << '+';
        out << m.label(block[j]);
      }
      out << ':' << o.payoffs[k];
    }
    out << " equilibrium=" << (o.equilibrium ? "yes" : "no") << '\n';
  }
  return out.str();
}

ConditionalProfile ParseConditionalProfile(const ProfileModel& m,
                                           std::string_view text) {
  const Election& e = m.election();
  const std::vector<std::string_view> parts = Split(text, ';');
  if (static_cast<int>(parts.size()) != m.num_voters()) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected one ';'-separated strategy per voter in '" +
                    std::string(text) + "'");
  }
  std::vector<std::vector<Preference>> choices;
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    const std::string_view part = parts[i - 1];
    std::vector<Preference> row;
    if (part.find('>') != std::string_view::npos) {
      for (std::string_view order : Split(part, ',')) {
        row.push_back(ParsePreference(e, order));
      }
    } else if (part.find(',') != std::string_view::npos || !e.CompactNames()) {
      for (std::string_view name : Split(part, ',')) {
        row.push_back(Preference::TopFirst(e.num_candidates(),
                                           e.FindCandidate(name)));
      }
    } else {
      for (char ch : part) {
        row.push_back(Preference::TopFirst(
            e.num_candidates(), e.FindCandidate(std::string_view(&ch, 1))));
      }
    }
    choices.push_back(std::move(row));
  }
  ConditionalProfile cp(std::move(choices));
  CheckConditionalProfile(m, cp);
  return cp;
}

std::string FormatConditionalProfile(const ProfileModel& m,
                                     const ConditionalProfile& cp,
                                     bool by_top) {
  const Election& e = m.election();
  std::string out;
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    if (i > 1) out += ';';
    const auto& row = cp.choices()[i - 1];
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (by_top) {
        if (b > 0 && !e.CompactNames()) out += ',';
        out += e.CandidateName(row[b].Top());
      } else {
        if (b > 0) out += ',';
        out += FormatPreference(e, row[b]);
      }
    }
  }
  return out;
}

}  // namespace epivote
