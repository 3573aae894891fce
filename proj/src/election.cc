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

#include "epivote/election.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "epivote/error.h"

namespace epivote {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kPartitionError: return "PartitionError";
    case ErrorKind::kOwnPreferenceViolation: return "OwnPreferenceViolation";
    case ErrorKind::kDanglingState: return "DanglingState";
    case ErrorKind::kDuplicateState: return "DuplicateState";
    case ErrorKind::kUnknownState: return "UnknownState";
    case ErrorKind::kUnknownVoter: return "UnknownVoter";
    case ErrorKind::kUnknownCandidate: return "UnknownCandidate";
    case ErrorKind::kIncompleteProfileAtom: return "IncompleteProfileAtom";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kModelFormat: return "ModelFormat";
    case ErrorKind::kMissingTiebreak: return "MissingTiebreak";
    case ErrorKind::kMissingRule: return "MissingRule";
    case ErrorKind::kSizeLimit: return "SizeLimit";
    case ErrorKind::kEmptySet: return "EmptySet";
    case ErrorKind::kEmptyResult: return "EmptyResult";
    case ErrorKind::kPointEliminated: return "PointEliminated";
    case ErrorKind::kIndistinguishable: return "Indistinguishable";
  }
  return "Unknown";
}

bool IsValidCandidateId(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
  });
}

Election::Election(std::vector<std::string> candidates, int num_voters)
    : candidates_(std::move(candidates)), num_voters_(num_voters) {
  if (candidates_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "an election needs a candidate");
  }
  if (num_voters_ < 1) {
    throw Error(ErrorKind::kInvalidArgument, "an election needs a voter");
  }
  std::set<std::string> seen;
  for (const std::string& c : candidates_) {
    if (!IsValidCandidateId(c)) {
      throw Error(ErrorKind::kInvalidArgument, "bad candidate id '" + c + "'");
    }
    if (!seen.insert(c).second) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate candidate '" + c + "'");
    }
  }
}

const std::string& Election::CandidateName(CandidateIndex c) const {
  return candidates_.at(c);
}

std::optional<CandidateIndex> Election::LookupCandidate(
    std::string_view name) const {
  for (int c = 0; c < num_candidates(); ++c) {
    if (candidates_[c] == name) return c;
  }
  return std::nullopt;
}

CandidateIndex Election::FindCandidate(std::string_view name) const {
  if (auto c = LookupCandidate(name)) return *c;
  throw Error(ErrorKind::kUnknownCandidate, std::string(name));
}

void Election::CheckVoter(Voter i) const {
  if (!HasVoter(i)) {
    throw Error(ErrorKind::kUnknownVoter, std::to_string(i));
  }
}

bool Election::CompactNames() const {
  return std::all_of(candidates_.begin(), candidates_.end(),
                     [](const std::string& c) { return c.size() == 1; });
}

Preference::Preference(std::vector<CandidateIndex> ranking)
    : ranking_(std::move(ranking)), position_(ranking_.size(), -1) {
  const int m = static_cast<int>(ranking_.size());
  if (m == 0) throw Error(ErrorKind::kInvalidArgument, "empty preference");
  for (int pos = 0; pos < m; ++pos) {
    const CandidateIndex c = ranking_[pos];
    if (c < 0 || c >= m || position_[c] != -1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "preference is not a permutation of the candidates");
    }
    position_[c] = pos;
  }
}

Preference Preference::TopFirst(int num_candidates, CandidateIndex top) {
  std::vector<CandidateIndex> ranking{top};
  for (int c = 0; c < num_candidates; ++c) {
    if (c != top) ranking.push_back(c);
  }
  return Preference(std::move(ranking));
}

std::vector<Preference> AllPreferences(int num_candidates) {
  std::vector<CandidateIndex> ranking(num_candidates);
  std::iota(ranking.begin(), ranking.end(), 0);
  std::vector<Preference> out;
  do {
    out.emplace_back(ranking);
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return out;
}

std::vector<Preference> TopPreferences(int num_candidates) {
  std::vector<Preference> out;
  for (int c = 0; c < num_candidates; ++c) {
    out.push_back(Preference::TopFirst(num_candidates, c));
  }
  return out;
}

std::string FormatPreference(const Election& e, const Preference& p) {
  std::string out;
  for (int pos = 0; pos < p.size(); ++pos) {
    if (pos > 0) out += '>';
    out += e.CandidateName(p.At(pos));
  }
  return out;
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Preference ParsePreference(const Election& e, std::string_view text) {
  std::vector<CandidateIndex> ranking;
  std::size_t start = 0;
  while (true) {
    const std::size_t gt = text.find('>', start);
    const std::string_view item =
        Trim(text.substr(start, gt == std::string_view::npos
                                    ? std::string_view::npos
                                    : gt - start));
    ranking.push_back(e.FindCandidate(item));
    if (gt == std::string_view::npos) break;
    start = gt + 1;
  }
  if (static_cast<int>(ranking.size()) != e.num_candidates()) {
    throw Error(ErrorKind::kInvalidArgument,
                "order '" + std::string(text) + "' must list all " +
                    std::to_string(e.num_candidates()) + " candidates");
  }
  return Preference(std::move(ranking));
}

Profile Profile::With(Voter i, const Preference& alt) const {
  Profile out = *this;
  out.prefs_[i - 1] = alt;
  return out;
}

std::uint64_t CountProfiles(const Election& e) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t orders = 1;
  for (int k = 2; k <= e.num_candidates(); ++k) {
    if (orders > kMax / k) return kMax;
    orders *= k;
  }
  std::uint64_t total = 1;
  for (int i = 0; i < e.num_voters(); ++i) {
    if (total > kMax / orders) return kMax;
    total *= orders;
  }
  return total;
}

void CheckProfileCount(const Election& e, std::uint64_t limit,
                       const char* what) {
  const std::uint64_t count = CountProfiles(e);
  if (count > limit) {
    throw Error(ErrorKind::kSizeLimit,
                std::string(what) + " needs " + std::to_string(count) +
                    " profiles, limit is " + std::to_string(limit));
  }
}

std::vector<Profile> AllProfiles(const Election& e, std::uint64_t limit) {
  CheckProfileCount(e, limit, "profile enumeration");
  const std::vector<Preference> orders = AllPreferences(e.num_candidates());
  const int n = e.num_voters();
  std::vector<int> digit(n, 0);
  std::vector<Profile> out;
  out.reserve(CountProfiles(e));
  while (true) {
    std::vector<Preference> prefs;
    prefs.reserve(n);
    for (int i = 0; i < n; ++i) prefs.push_back(orders[digit[i]]);
    out.emplace_back(std::move(prefs));
    int pos = n - 1;
    while (pos >= 0 && ++digit[pos] == static_cast<int>(orders.size())) {
      digit[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::string FormatProfile(const Election& e, const Profile& p) {
  std::string out;
  for (Voter i = 1; i <= p.num_voters(); ++i) {
    if (i > 1) out += " ; ";
    out += std::to_string(i) + ": " + FormatPreference(e, p.Of(i));
  }
  return out;
}

std::string JoinCandidates(const Election& e,
                           const std::vector<CandidateIndex>& cs) {
  const bool compact = e.CompactNames();
  std::string out;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (!compact && k > 0) out += ',';
    out += e.CandidateName(cs[k]);
  }
  return out;
}

}  // namespace epivote
