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

#include "epivote/model_io.h"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "epivote/error.h"

namespace epivote {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> SplitWords(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

[[noreturn]] void Fail(int line, const std::string& message) {
  throw Error(ErrorKind::kModelFormat,
              "line " + std::to_string(line) + ": " + message);
}

int ParsePositiveInt(int line, std::string_view text) {
  text = Trim(text);
  if (text.empty()) Fail(line, "expected a number");
  int value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      Fail(line, "expected a number, got '" + std::string(text) + "'");
    }
    value = value * 10 + (ch - '0');
    if (value > 1'000'000) Fail(line, "number too large");
  }
  return value;
}

struct StateLine {
  int line;
  std::string label;
  std::string body;
};

struct IndistLine {
  int line;
  Voter voter;
  std::string body;
};

// Parses "1: a>b>c ; 2: c>b>a" into a complete profile.
Profile ParseStateProfile(const Election& e, int line, std::string_view body) {
  std::vector<std::optional<Preference>> prefs(e.num_voters());
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t semi = body.find(';', start);
    if (semi == std::string_view::npos) semi = body.size();
    const std::string_view item = Trim(body.substr(start, semi - start));
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      Fail(line, "expected 'voter: order', got '" + std::string(item) + "'");
    }
    const int voter = ParsePositiveInt(line, item.substr(0, colon));
    if (!e.HasVoter(voter)) Fail(line, "unknown voter " + std::to_string(voter));
    if (prefs[voter - 1]) {
      Fail(line, "voter " + std::to_string(voter) + " listed twice");
    }
    try {
      prefs[voter - 1] = ParsePreference(e, item.substr(colon + 1));
    } catch (const Error& err) {
      Fail(line, err.message());
    }
    start = semi + 1;
  }
  std::vector<Preference> out;
  for (Voter i = 1; i <= e.num_voters(); ++i) {
    if (!prefs[i - 1]) {
      Fail(line, "voter " + std::to_string(i) + " has no preference");
    }
    out.push_back(*prefs[i - 1]);
  }
  return Profile(std::move(out));
}

Partition ParseBlocks(const std::map<std::string, StateIndex>& index, int line,
                      std::string_view body) {
  Partition partition;
  std::size_t pos = 0;
  while (true) {
    while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) {
      ++pos;
    }
    if (pos == body.size()) break;
    if (body[pos] != '{') Fail(line, "expected '{'");
    const std::size_t close = body.find('}', pos);
    if (close == std::string_view::npos) Fail(line, "unterminated block");
    std::vector<StateIndex> block;
    for (const std::string& label :
         SplitWords(body.substr(pos + 1, close - pos - 1))) {
      auto it = index.find(label);
      if (it == index.end()) {
        throw Error(ErrorKind::kDanglingState,
                    "line " + std::to_string(line) + ": unknown state '" +
                        label + "'");
      }
      block.push_back(it->second);
    }
    if (block.empty()) {
      throw Error(ErrorKind::kPartitionError,
                  "line " + std::to_string(line) + ": empty block");
    }
    partition.push_back(std::move(block));
    pos = close + 1;
  }
  return partition;
}

}  // namespace

ModelFile ParseModel(std::string_view text, bool validate) {
  std::optional<std::vector<std::string>> candidates;
  std::optional<int> voters;
  std::optional<std::pair<int, std::vector<std::string>>> tiebreak_words;
  std::optional<std::pair<int, std::string>> point_label;
  std::vector<StateLine> state_lines;
  std::vector<IndistLine> indist_lines;

  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    auto keyword_end = line.find_first_of(" \t:");
    const std::string keyword(line.substr(0, keyword_end));
    if (keyword == "candidates" || keyword == "voters" ||
        keyword == "tiebreak" || keyword == "point") {
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) Fail(line_no, "expected ':'");
      const std::string_view value = Trim(line.substr(colon + 1));
      if (keyword == "candidates") {
        if (candidates) Fail(line_no, "duplicate candidates line");
        candidates = SplitWords(value);
      } else if (keyword == "voters") {
        if (voters) Fail(line_no, "duplicate voters line");
        voters = ParsePositiveInt(line_no, value);
      } else if (keyword == "tiebreak") {
        if (tiebreak_words) Fail(line_no, "duplicate tiebreak line");
        tiebreak_words.emplace(line_no, SplitWords(value));
      } else {
        if (point_label) Fail(line_no, "duplicate point line");
        point_label.emplace(line_no, std::string(value));
      }
    } else if (keyword == "state") {
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) Fail(line_no, "expected 'state label ='");
      const std::string label(Trim(line.substr(5, eq - 5)));
      if (label.empty() || label.find_first_of(" \t{}") != std::string::npos) {
        Fail(line_no, "bad state label '" + label + "'");
      }
      state_lines.push_back({line_no, label, std::string(line.substr(eq + 1))});
    } else if (keyword == "indist") {
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) Fail(line_no, "expected ':'");
      const int voter = ParsePositiveInt(line_no, line.substr(6, colon - 6));
      indist_lines.push_back({line_no, voter, std::string(line.substr(colon + 1))});
    } else {
      Fail(line_no, "unknown statement '" + keyword + "'");
    }
  }

  if (!candidates) Fail(line_no, "missing candidates line");
  if (!voters) Fail(line_no, "missing voters line");
  Election election;
  try {
    election = Election(*candidates, *voters);
  } catch (const Error& err) {
    Fail(0, err.message());
  }

  std::map<std::string, StateIndex> index;
  std::vector<std::string> labels;
  std::vector<Profile> valuation;
  for (const StateLine& sl : state_lines) {
    if (!index.emplace(sl.label, static_cast<StateIndex>(labels.size())).second) {
      throw Error(ErrorKind::kDuplicateState,
                  "line " + std::to_string(sl.line) + ": " + sl.label);
    }
    labels.push_back(sl.label);
    valuation.push_back(ParseStateProfile(election, sl.line, sl.body));
  }
  if (labels.empty()) Fail(line_no, "a model needs at least one state");

  std::vector<std::optional<Partition>> partitions(election.num_voters());
  std::vector<int> partition_line(election.num_voters(), 0);
  for (const IndistLine& il : indist_lines) {
    if (!election.HasVoter(il.voter)) {
      Fail(il.line, "unknown voter " + std::to_string(il.voter));
    }
    if (partitions[il.voter - 1]) {
      Fail(il.line, "duplicate indist line for voter " + std::to_string(il.voter));
    }
    partitions[il.voter - 1] = ParseBlocks(index, il.line, il.body);
    partition_line[il.voter - 1] = il.line;
  }
  std::vector<Partition> indist;
  for (Voter i = 1; i <= election.num_voters(); ++i) {
    if (partitions[i - 1]) {
      indist.push_back(*partitions[i - 1]);
    } else {
      Partition singletons;
      for (StateIndex s = 0; s < static_cast<StateIndex>(labels.size()); ++s) {
        singletons.push_back({s});
      }
      indist.push_back(std::move(singletons));
    }
  }

  ModelFile file;
  file.model = ProfileModel(election, std::move(labels), std::move(valuation),
                            std::move(indist));
  try {
    if (validate) ValidateModel(file.model);
  } catch (const Error& err) {
    // Point at the indist line of the voter involved, when there is one.
    std::string where;
    const std::string msg = err.message();
    for (Voter i = 1; i <= election.num_voters(); ++i) {
      if (partition_line[i - 1] != 0 &&
          msg.find("voter " + std::to_string(i) + " ") != std::string::npos) {
        where = "line " + std::to_string(partition_line[i - 1]) + ": ";
        break;
      }
    }
    throw Error(err.kind(), where + msg);
  }

  if (tiebreak_words) {
    std::string order;
    for (const std::string& w : tiebreak_words->second) {
      if (!order.empty()) order += '>';
      order += w;
    }
    try {
      file.tiebreak = ParsePreference(election, order);
    } catch (const Error& err) {
      Fail(tiebreak_words->first, err.message());
    }
  }
  if (point_label) {
    auto it = index.find(point_label->second);
    if (it == index.end()) {
      throw Error(ErrorKind::kUnknownState,
                  "line " + std::to_string(point_label->first) + ": " +
                      point_label->second);
    }
    file.point = it->second;
  }
  return file;
}

ModelFile LoadModel(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kInvalidArgument, "cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseModel(buffer.str(), validate);
}

std::string WriteModel(const ModelFile& file) {
  const ProfileModel& m = file.model;
  const Election& e = m.election();
  std::ostringstream out;
  out << "candidates:";
  for (const std::string& c : e.candidates()) out << ' ' << c;
  out << "\nvoters: " << e.num_voters() << '\n';
  if (file.tiebreak) {
    out << "tiebreak:";
    for (CandidateIndex c : file.tiebreak->ranking()) {
      out << ' ' << e.CandidateName(c);
    }
    out << '\n';
  }
  for (StateIndex s = 0; s < m.num_states(); ++s) {
    out << "state " << m.label(s) << " = "
        << FormatProfile(e, m.valuation(s)) << '\n';
  }
  for (Voter i = 1; i <= e.num_voters(); ++i) {
    out << "indist " << i << ':';
    for (const auto& block : m.blocks(i)) out << ' ' << FormatStateSet(m, block);
    out << '\n';
  }
  if (file.point) out << "point: " << m.label(*file.point) << '\n';
  return out.str();
}

}  // namespace epivote
