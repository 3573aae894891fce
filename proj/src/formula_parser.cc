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

#include "epivote/formula_parser.h"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "epivote/error.h"

namespace epivote {
namespace {

enum class Tok {
  kWord,
  kTilde,
  kAmp,
  kBar,
  kArrow,
  kDoubleArrow,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kLBrace,
  kRBrace,
  kColon,
  kSemicolon,
  kGreater,
  kEnd,
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void Fail(ErrorKind kind, std::size_t offset,
                       const std::string& message) {
  throw Error(kind, "offset " + std::to_string(offset) + ": " + message);
}

std::vector<Token> Tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (IsWordChar(c)) {
      std::size_t j = i;
      while (j < src.size() && IsWordChar(src[j])) ++j;
      out.push_back({Tok::kWord, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (src.substr(i, 3) == "<->") {
      out.push_back({Tok::kDoubleArrow, src.substr(i, 3), i});
      i += 3;
      continue;
    }
    if (src.substr(i, 2) == "->") {
      out.push_back({Tok::kArrow, src.substr(i, 2), i});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '~': kind = Tok::kTilde; break;
      case '&': kind = Tok::kAmp; break;
      case '|': kind = Tok::kBar; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '[': kind = Tok::kLBracket; break;
      case ']': kind = Tok::kRBracket; break;
      case '{': kind = Tok::kLBrace; break;
      case '}': kind = Tok::kRBrace; break;
      case ':': kind = Tok::kColon; break;
      case ';': kind = Tok::kSemicolon; break;
      case '>': kind = Tok::kGreater; break;
      default:
        Fail(ErrorKind::kSyntaxError, i,
             std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, src.substr(i, 1), i});
    ++i;
  }
  out.push_back({Tok::kEnd, {}, src.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const Election& e)
      : tokens_(Tokenize(src)), e_(e) {}

  Formula Parse() {
    Formula f = ParseIff();
    if (Peek().kind != Tok::kEnd) Unexpected();
    return f;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_++]; }

  bool Accept(Tok kind) {
    if (Peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  const Token& Expect(Tok kind, const char* what) {
    if (Peek().kind != kind) {
      Fail(ErrorKind::kSyntaxError, Peek().offset,
           std::string("expected ") + what + Found());
    }
    return Next();
  }

  std::string Found() const {
    if (Peek().kind == Tok::kEnd) return ", found end of input";
    return ", found '" + std::string(Peek().text) + "'";
  }

  [[noreturn]] void Unexpected() const {
    if (Peek().kind == Tok::kEnd) {
      Fail(ErrorKind::kSyntaxError, Peek().offset, "unexpected end of input");
    }
    Fail(ErrorKind::kSyntaxError, Peek().offset,
         "unexpected '" + std::string(Peek().text) + "'");
  }

  Formula ParseIff() {
    Formula f = ParseImplies();
    while (Accept(Tok::kDoubleArrow)) f = Formula::Iff(f, ParseImplies());
    return f;
  }

  Formula ParseImplies() {
    Formula f = ParseOr();
    if (Accept(Tok::kArrow)) return Formula::Implies(f, ParseImplies());
    return f;
  }

  Formula ParseOr() {
    Formula f = ParseAnd();
    while (Accept(Tok::kBar)) f = Formula::Or(f, ParseAnd());
    return f;
  }

  Formula ParseAnd() {
    Formula f = ParseUnary();
    while (Accept(Tok::kAmp)) f = Formula::And(f, ParseUnary());
    return f;
  }

  Formula ParseUnary() {
    if (Accept(Tok::kTilde)) return Formula::Not(ParseUnary());
    if (Accept(Tok::kLBracket)) {
      Formula announced = ParseIff();
      Expect(Tok::kRBracket, "']'");
      return Formula::Announce(announced, ParseUnary());
    }
    const Token& t = Peek();
    if (t.kind == Tok::kWord && t.text.front() == 'K') {
      Next();
      std::string_view digits = t.text.substr(1);
      std::size_t offset = t.offset + 1;
      if (digits.empty()) {
        const Token& num = Expect(Tok::kWord, "voter number after 'K'");
        digits = num.text;
        offset = num.offset;
      }
      const Voter i = ParseVoter(digits, offset);
      return Formula::Know(i, ParseUnary());
    }
    return ParseAtom();
  }

  Formula ParseAtom() {
    if (Accept(Tok::kLParen)) {
      Formula f = ParseIff();
      Expect(Tok::kRParen, "')'");
      return f;
    }
    if (Peek().kind != Tok::kWord) Unexpected();
    const Token& t = Next();
    if (t.text == "true") return Formula::True();
    if (t.text == "false") return Formula::False();
    if (t.text == "wins") return Formula::WinsAtom(ParseCandidate());
    if (t.text == "pref") {
      const Token& num = Expect(Tok::kWord, "voter number after 'pref'");
      const Voter i = ParseVoter(num.text, num.offset);
      Expect(Tok::kLParen, "'('");
      Preference o = ParseOrder();
      Expect(Tok::kRParen, "')'");
      return Formula::PrefAtom(i, std::move(o));
    }
    if (t.text == "profile") return ParseProfile(t.offset);
    if (IsDigits(t.text) && Peek().kind == Tok::kColon) {
      const Voter i = ParseVoter(t.text, t.offset);
      Next();
      const CandidateIndex a = ParseCandidate();
      Expect(Tok::kGreater, "'>'");
      const CandidateIndex b = ParseCandidate();
      return Formula::CompAtom(i, a, b);
    }
    Fail(ErrorKind::kSyntaxError, t.offset,
         "unexpected '" + std::string(t.text) + "'");
  }

  Formula ParseProfile(std::size_t start) {
    Expect(Tok::kLBrace, "'{' after 'profile'");
    std::vector<std::optional<Preference>> prefs(e_.num_voters());
    do {
      const Token& num = Expect(Tok::kWord, "voter number");
      const Voter i = ParseVoter(num.text, num.offset);
      Expect(Tok::kColon, "':'");
      if (prefs[i - 1]) {
        Fail(ErrorKind::kIncompleteProfileAtom, num.offset,
             "voter " + std::to_string(i) + " listed twice");
      }
      prefs[i - 1] = ParseOrder();
    } while (Accept(Tok::kSemicolon));
    Expect(Tok::kRBrace, "'}'");
    std::vector<Preference> complete;
    for (Voter i = 1; i <= e_.num_voters(); ++i) {
      if (!prefs[i - 1]) {
        Fail(ErrorKind::kIncompleteProfileAtom, start,
             "profile atom lacks voter " + std::to_string(i));
      }
      complete.push_back(*prefs[i - 1]);
    }
    return Formula::ProfileAtom(Profile(std::move(complete)));
  }

  Preference ParseOrder() {
    const std::size_t start = Peek().offset;
    std::vector<CandidateIndex> ranking{ParseCandidate()};
    while (Accept(Tok::kGreater)) ranking.push_back(ParseCandidate());
    std::vector<bool> seen(e_.num_candidates(), false);
    for (CandidateIndex c : ranking) {
      if (seen[c]) {
        Fail(ErrorKind::kIncompleteProfileAtom, start,
             "candidate '" + e_.CandidateName(c) + "' ranked twice");
      }
      seen[c] = true;
    }
    if (static_cast<int>(ranking.size()) != e_.num_candidates()) {
      Fail(ErrorKind::kIncompleteProfileAtom, start,
           "order must rank all " + std::to_string(e_.num_candidates()) +
               " candidates");
    }
    return Preference(std::move(ranking));
  }

  CandidateIndex ParseCandidate() {
    const Token& t = Expect(Tok::kWord, "candidate");
    const auto c = e_.LookupCandidate(t.text);
    if (!c) {
      Fail(ErrorKind::kUnknownCandidate, t.offset,
           "unknown candidate '" + std::string(t.text) + "'");
    }
    return *c;
  }

  Voter ParseVoter(std::string_view digits, std::size_t offset) {
    if (!IsDigits(digits)) {
      Fail(ErrorKind::kSyntaxError, offset,
           "expected voter number, found '" + std::string(digits) + "'");
    }
    if (digits.size() > 9) {
      Fail(ErrorKind::kUnknownVoter, offset,
           "voter " + std::string(digits) + " out of range");
    }
    const Voter i = std::stoi(std::string(digits));
    if (!e_.HasVoter(i)) {
      Fail(ErrorKind::kUnknownVoter, offset,
           "voter " + std::to_string(i) + " is not in 1.." +
               std::to_string(e_.num_voters()));
    }
    return i;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Election& e_;
};

}  // namespace

Formula ParseFormula(std::string_view src, const Election& e) {
  return Parser(src, e).Parse();
}

}  // namespace epivote
