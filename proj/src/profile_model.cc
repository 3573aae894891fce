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

#include "epivote/profile_model.h"

#include <algorithm>
#include <map>
#include <set>

#include "epivote/error.h"

namespace epivote {

ProfileModel::ProfileModel(Election election, std::vector<std::string> labels,
                           std::vector<Profile> valuation,
                           std::vector<Partition> indist)
    : election_(std::move(election)),
      labels_(std::move(labels)),
      valuation_(std::move(valuation)),
      indist_(std::move(indist)) {
  if (valuation_.size() != labels_.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "one profile per state label is required");
  }
  if (static_cast<int>(indist_.size()) != election_.num_voters()) {
    throw Error(ErrorKind::kInvalidArgument, "one partition per voter");
  }
  const int n_states = num_states();
  block_of_.assign(indist_.size(), std::vector<int>(n_states, -1));
  for (Partition& partition : indist_) {
    for (auto& block : partition) std::sort(block.begin(), block.end());
    std::sort(partition.begin(), partition.end(),
              [](const auto& x, const auto& y) {
                if (x.empty() || y.empty()) return x.size() < y.size();
                return x.front() < y.front();
              });
  }
  for (std::size_t v = 0; v < indist_.size(); ++v) {
    for (std::size_t b = 0; b < indist_[v].size(); ++b) {
      for (StateIndex s : indist_[v][b]) {
        if (s >= 0 && s < n_states) block_of_[v][s] = static_cast<int>(b);
      }
    }
  }
}

StateIndex ProfileModel::FindState(std::string_view label) const {
  for (StateIndex s = 0; s < num_states(); ++s) {
    if (labels_[s] == label) return s;
  }
  throw Error(ErrorKind::kUnknownState, std::string(label));
}

void ValidateModel(const ProfileModel& m) {
  const Election& e = m.election();
  const int n_states = m.num_states();
  if (n_states == 0) {
    throw Error(ErrorKind::kInvalidArgument, "a model needs a state");
  }
  std::set<std::string> seen;
  for (const std::string& label : m.labels()) {
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::kDuplicateState, label);
    }
  }
  for (StateIndex s = 0; s < n_states; ++s) {
    const Profile& p = m.valuation(s);
    if (p.num_voters() != e.num_voters()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "state " + m.label(s) + " does not assign every voter");
    }
    for (const Preference& pref : p.prefs()) {
      if (pref.size() != e.num_candidates()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "state " + m.label(s) + " has an incomplete order");
      }
    }
  }
  for (Voter i = 1; i <= e.num_voters(); ++i) {
    std::vector<int> hits(n_states, 0);
    for (const auto& block : m.blocks(i)) {
      if (block.empty()) {
        throw Error(ErrorKind::kPartitionError,
                    "voter " + std::to_string(i) + " has an empty block");
      }
      for (StateIndex s : block) {
        if (s < 0 || s >= n_states) {
          throw Error(ErrorKind::kDanglingState,
                      "voter " + std::to_string(i) + " block names state #" +
                          std::to_string(s));
        }
        ++hits[s];
      }
    }
    for (StateIndex s = 0; s < n_states; ++s) {
      if (hits[s] != 1) {
        throw Error(ErrorKind::kPartitionError,
                    "voter " + std::to_string(i) + ": state " + m.label(s) +
                        (hits[s] == 0 ? " is in no block" : " is in several blocks"));
      }
    }
    for (const auto& block : m.blocks(i)) {
      const StateIndex s = block.front();
      for (StateIndex t : block) {
        if (m.valuation(s).Of(i) != m.valuation(t).Of(i)) {
          throw Error(ErrorKind::kOwnPreferenceViolation,
                      "voter " + std::to_string(i) + " confuses " +
                          m.label(s) + " and " + m.label(t));
        }
      }
    }
  }
}

KnowledgeProfile::KnowledgeProfile(const ProfileModel& model, StateIndex point)
    : model_(&model), point_(point) {
  if (point < 0 || point >= model.num_states()) {
    throw Error(ErrorKind::kUnknownState, "#" + std::to_string(point));
  }
}

InformationSet GetInformationSet(const ProfileModel& m, Voter i,
                                 StateIndex s) {
  m.election().CheckVoter(i);
  if (s < 0 || s >= m.num_states()) {
    throw Error(ErrorKind::kUnknownState, "#" + std::to_string(s));
  }
  const int b = m.BlockIndex(i, s);
  return InformationSet{i, b, m.blocks(i)[b]};
}

std::vector<Profile> ProfilesOf(const ProfileModel& m,
                                const InformationSet& info) {
  std::vector<Profile> out;
  for (StateIndex t : info.states) out.push_back(m.valuation(t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ProfileModel Hypercube(const Election& e, std::uint64_t limit) {
  CheckProfileCount(e, limit, "hypercube");
  std::vector<Profile> profiles = AllProfiles(e, limit);
  const int n_states = static_cast<int>(profiles.size());
  const bool compact = e.CompactNames();
  std::vector<std::string> labels;
  labels.reserve(n_states);
  for (int s = 0; s < n_states; ++s) {
    if (compact) {
      std::string label;
      for (const Preference& p : profiles[s].prefs()) {
        if (!label.empty()) label += '_';
        label += JoinCandidates(e, p.ranking());
      }
      labels.push_back(std::move(label));
    } else {
      labels.push_back("h" + std::to_string(s));
    }
  }
  std::vector<Partition> indist;
  for (Voter i = 1; i <= e.num_voters(); ++i) {
    std::map<Preference, std::vector<StateIndex>> groups;
    for (StateIndex s = 0; s < n_states; ++s) {
      groups[profiles[s].Of(i)].push_back(s);
    }
    Partition partition;
    for (auto& [pref, block] : groups) partition.push_back(std::move(block));
    indist.push_back(std::move(partition));
  }
  return ProfileModel(e, std::move(labels), std::move(profiles),
                      std::move(indist));
}

ProfileModel Restrict(const ProfileModel& m, const StateSet& keep,
                      std::vector<StateIndex>* old_to_new) {
  std::vector<StateIndex> remap(m.num_states(), -1);
  std::vector<std::string> labels;
  std::vector<Profile> valuation;
  for (StateIndex s = 0; s < m.num_states(); ++s) {
    if (!keep[s]) continue;
    remap[s] = static_cast<StateIndex>(labels.size());
    labels.push_back(m.label(s));
    valuation.push_back(m.valuation(s));
  }
  std::vector<Partition> indist;
  for (Voter i = 1; i <= m.num_voters(); ++i) {
    Partition partition;
    for (const auto& block : m.blocks(i)) {
      std::vector<StateIndex> kept;
      for (StateIndex s : block) {
        if (keep[s]) kept.push_back(remap[s]);
      }
      if (!kept.empty()) partition.push_back(std::move(kept));
    }
    indist.push_back(std::move(partition));
  }
  if (old_to_new != nullptr) *old_to_new = remap;
  return ProfileModel(m.election(), std::move(labels), std::move(valuation),
                      std::move(indist));
}

std::string FormatStateSet(const ProfileModel& m,
                           const std::vector<StateIndex>& states) {
  std::string out = "{";
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (k > 0) out += ' ';
    out += m.label(states[k]);
  }
  return out + "}";
}

}  // namespace epivote
