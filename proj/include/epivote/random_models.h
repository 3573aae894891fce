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

#ifndef EPIVOTE_RANDOM_MODELS_H_
#define EPIVOTE_RANDOM_MODELS_H_

#include <random>

#include "epivote/election.h"
#include "epivote/formula.h"
#include "epivote/profile_model.h"

namespace epivote {

using Rng = std::mt19937_64;

// A valid profile model with 1..max_states states labelled w1, w2, ...
// Profiles are drawn from `num_profiles` distinct random profiles when that
// is positive (so states repeat profiles more often), uniformly otherwise.
// Each voter's partition is a uniformly random refinement of the grouping by
// her own preference.
ProfileModel RandomModel(Rng& rng, const Election& e, int max_states,
                         int num_profiles = 0);

struct FormulaOptions {
  int max_depth = 3;
  bool announcements = true;
  bool winner_atoms = true;
  bool profile_atoms = true;
};

// Leaves are drawn from the profiles of `m` where possible, so that atoms
// are not trivially false on the model.
Formula RandomFormula(Rng& rng, const ProfileModel& m,
                      const FormulaOptions& options);

}  // namespace epivote

#endif  // EPIVOTE_RANDOM_MODELS_H_
