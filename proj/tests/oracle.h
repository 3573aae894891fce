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

// Brute-force reference computations for the tests. Nothing here calls into
// the library's voting or game code; models are copied into flat arrays.

#ifndef EPIVOTE_TESTS_ORACLE_H_
#define EPIVOTE_TESTS_ORACLE_H_

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "epivote/profile_model.h"

namespace oracle {

inline constexpr int kMaxStates = 8;
inline constexpr int kMaxVoters = 4;
inline constexpr int kMaxCandidates = 4;
inline constexpr int kMaxBlocks = kMaxStates;

struct Model {
  int k = 0;  // states
  int n = 0;  // voters
  int m = 0;  // candidates
  // rank[s][i][c]: m-1 for voter i's top in state s, 0 for the bottom.
  int rank[kMaxStates][kMaxVoters][kMaxCandidates] = {};
  int block[kMaxVoters][kMaxStates] = {};
  int num_blocks[kMaxVoters] = {};
  int block_states[kMaxVoters][kMaxBlocks][kMaxStates] = {};
  int block_size[kMaxVoters][kMaxBlocks] = {};
  // Lower is stronger.
  int tiebreak_pos[kMaxCandidates] = {};
};

// Ballots by top: tops[i][b] is voter i's top choice in its block b.
using Tops = std::array<std::array<int, kMaxBlocks>, kMaxVoters>;

inline Model FromProfileModel(const epivote::ProfileModel& pm,
                              const std::vector<int>& tiebreak) {
  Model o;
  o.k = pm.num_states();
  o.n = pm.num_voters();
  o.m = pm.election().num_candidates();
  for (int s = 0; s < o.k; ++s) {
    for (int i = 0; i < o.n; ++i) {
      const auto& ranking = pm.valuation(s).prefs()[i].ranking();
      for (int pos = 0; pos < o.m; ++pos) {
        o.rank[s][i][ranking[pos]] = o.m - 1 - pos;
      }
    }
  }
  for (int i = 0; i < o.n; ++i) {
    const auto& blocks = pm.partitions()[i];
    o.num_blocks[i] = static_cast<int>(blocks.size());
    for (int b = 0; b < o.num_blocks[i]; ++b) {
      for (int s : blocks[b]) {
        o.block[i][s] = b;
        o.block_states[i][b][o.block_size[i][b]++] = s;
      }
    }
  }
  for (int pos = 0; pos < o.m; ++pos) o.tiebreak_pos[tiebreak[pos]] = pos;
  return o;
}

// Plurality: most top votes, ties to the earliest in the tie-breaking order.
inline int Winner(const Model& o, const int* tops) {
  int count[kMaxCandidates] = {};
  for (int i = 0; i < o.n; ++i) ++count[tops[i]];
  int best = 0;
  for (int c = 1; c < o.m; ++c) {
    if (count[c] > count[best] ||
        (count[c] == count[best] && o.tiebreak_pos[c] < o.tiebreak_pos[best])) {
      best = c;
    }
  }
  return best;
}

inline int WinnerAt(const Model& o, const Tops& cp, int s) {
  int tops[kMaxVoters];
  for (int i = 0; i < o.n; ++i) tops[i] = cp[i][o.block[i][s]];
  return Winner(o, tops);
}

// Worst value, for voter i, of the winners over the states of its block b.
inline int Payoff(const Model& o, const Tops& cp, int i, int b) {
  int worst = o.m;
  for (int j = 0; j < o.block_size[i][b]; ++j) {
    const int s = o.block_states[i][b][j];
    worst = std::min(worst, o.rank[s][i][WinnerAt(o, cp, s)]);
  }
  return worst;
}

inline bool IsEquilibrium(const Model& o, const Tops& cp) {
  Tops dev = cp;
  for (int i = 0; i < o.n; ++i) {
    for (int b = 0; b < o.num_blocks[i]; ++b) {
      const int base = Payoff(o, cp, i, b);
      for (int c = 0; c < o.m; ++c) {
        if (c == cp[i][b]) continue;
        dev[i][b] = c;
        if (Payoff(o, dev, i, b) > base) return false;
      }
      dev[i][b] = cp[i][b];
    }
  }
  return true;
}

// Payoff label "ij.k" computed from a winners string (one candidate letter
// per state) instead of from ballots. Candidates are single letters a, b, ...
inline std::string PayoffLabelFromWinners(const Model& o,
                                          const std::string& winners) {
  std::string out;
  for (int i = 0; i < o.n; ++i) {
    if (i > 0) out += '.';
    for (int b = 0; b < o.num_blocks[i]; ++b) {
      int worst = o.m;
      for (int s = 0; s < o.k; ++s) {
        if (o.block[i][s] != b) continue;
        worst = std::min(worst, o.rank[s][i][winners[s] - 'a']);
      }
      out += static_cast<char>('0' + worst);
    }
  }
  return out;
}

}  // namespace oracle

#endif  // EPIVOTE_TESTS_ORACLE_H_
