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

#ifndef EPIVOTE_CHARACTERISTIC_H_
#define EPIVOTE_CHARACTERISTIC_H_

#include <vector>

#include "epivote/formula.h"
#include "epivote/profile_model.h"

namespace epivote {

// Bisimulation classes of a model, computed by partition refinement from the
// profile valuation, with a formula for each class that holds at exactly its
// states.
struct Bisimulation {
  std::vector<int> class_of;                   // per state
  std::vector<std::vector<StateIndex>> classes;
  std::vector<Formula> formulas;               // per class
  int rounds = 0;                              // refinement rounds used
};

Bisimulation ComputeBisimulation(const ProfileModel& m);

struct CharacteristicFormula {
  InformationSet target;
  Formula formula;
};

// A formula true at exactly the states of `target` within `m`. Throws
// kIndistinguishable when some state inside the target is bisimilar to one
// outside it.
CharacteristicFormula CharacteristicFormulaOf(const ProfileModel& m,
                                              const InformationSet& target);
CharacteristicFormula CharacteristicFormulaOf(const ProfileModel& m,
                                              const InformationSet& target,
                                              const Bisimulation& bisim);

// One formula per block of each voter: result[i - 1][block].
std::vector<std::vector<Formula>> DistinguishingFormulas(const ProfileModel& m);

}  // namespace epivote

#endif  // EPIVOTE_CHARACTERISTIC_H_
