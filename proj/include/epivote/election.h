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

#ifndef EPIVOTE_ELECTION_H_
#define EPIVOTE_ELECTION_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace epivote {

// Voters are numbered 1..n, as in every input and output format.
using Voter = int;

// Candidates are addressed by their position on the `candidates:` line.
using CandidateIndex = int;

// Default cap on anything that enumerates (m!)^n profiles.
inline constexpr std::uint64_t kDefaultSizeLimit = 1'000'000;

class Election {
 public:
  Election() = default;
  Election(std::vector<std::string> candidates, int num_voters);

  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  int num_voters() const { return num_voters_; }
  const std::vector<std::string>& candidates() const { return candidates_; }
  const std::string& CandidateName(CandidateIndex c) const;

  std::optional<CandidateIndex> LookupCandidate(std::string_view name) const;
  // Throws kUnknownCandidate.
  CandidateIndex FindCandidate(std::string_view name) const;

  bool HasVoter(Voter i) const { return i >= 1 && i <= num_voters_; }
  // Throws kUnknownVoter.
  void CheckVoter(Voter i) const;

  // True when every candidate id is one character long, so that strategy
  // and winner strings can be written without separators.
  bool CompactNames() const;

  bool operator==(const Election&) const = default;

 private:
  std::vector<std::string> candidates_;
  int num_voters_ = 0;
};

bool IsValidCandidateId(std::string_view id);

// A strict total order over the candidates, best first.
class Preference {
 public:
  Preference() = default;
  // Throws kInvalidArgument unless `ranking` is a permutation of 0..m-1.
  explicit Preference(std::vector<CandidateIndex> ranking);

  // `top` first, the others in candidate order.
  static Preference TopFirst(int num_candidates, CandidateIndex top);

  int size() const { return static_cast<int>(ranking_.size()); }
  CandidateIndex Top() const { return ranking_.front(); }
  CandidateIndex At(int position) const { return ranking_[position]; }
  int Position(CandidateIndex c) const { return position_[c]; }
  // m-1 for the most preferred candidate down to 0 for the least.
  int RankValue(CandidateIndex c) const { return size() - 1 - position_[c]; }
  bool Prefers(CandidateIndex a, CandidateIndex b) const {
    return position_[a] < position_[b];
  }
  bool WeaklyPrefers(CandidateIndex a, CandidateIndex b) const {
    return position_[a] <= position_[b];
  }
  const std::vector<CandidateIndex>& ranking() const { return ranking_; }

  bool operator==(const Preference& other) const {
    return ranking_ == other.ranking_;
  }
  std::strong_ordering operator<=>(const Preference& other) const {
    return ranking_ <=> other.ranking_;
  }

 private:
  std::vector<CandidateIndex> ranking_;
  std::vector<int> position_;
};

// All m! orders, lexicographic in candidate indices (so "a>b>c" first).
std::vector<Preference> AllPreferences(int num_candidates);

// The m canonical top-first orders, in candidate order.
std::vector<Preference> TopPreferences(int num_candidates);

// "a>b>c".
std::string FormatPreference(const Election& e, const Preference& p);
// Parses "a>b>c"; the order must list every candidate exactly once.
// Throws kUnknownCandidate or kInvalidArgument.
Preference ParsePreference(const Election& e, std::string_view text);

// One preference per voter.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<Preference> prefs) : prefs_(std::move(prefs)) {}

  int num_voters() const { return static_cast<int>(prefs_.size()); }
  const Preference& Of(Voter i) const { return prefs_[i - 1]; }
  const std::vector<Preference>& prefs() const { return prefs_; }

  // The profile with voter i's preference replaced by `alt`.
  Profile With(Voter i, const Preference& alt) const;

  auto operator<=>(const Profile&) const = default;
  bool operator==(const Profile&) const = default;

 private:
  std::vector<Preference> prefs_;
};

// Number of profiles (m!)^n, saturating at UINT64_MAX.
std::uint64_t CountProfiles(const Election& e);
// Throws kSizeLimit if (m!)^n exceeds `limit`.
void CheckProfileCount(const Election& e, std::uint64_t limit,
                       const char* what);

// All (m!)^n profiles; voter 1's preference varies slowest.
std::vector<Profile> AllProfiles(const Election& e,
                                 std::uint64_t limit = kDefaultSizeLimit);

// "1: a>b>c ; 2: c>b>a".
std::string FormatProfile(const Election& e, const Profile& p);

// Short rendering of a sequence of candidates: "abc" when names are
// compact, "a1,b2,c3" otherwise.
std::string JoinCandidates(const Election& e,
                           const std::vector<CandidateIndex>& cs);

}  // namespace epivote

#endif  // EPIVOTE_ELECTION_H_
