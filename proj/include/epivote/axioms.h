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

#ifndef EPIVOTE_AXIOMS_H_
#define EPIVOTE_AXIOMS_H_

#include <string>
#include <vector>

#include "epivote/profile_model.h"

namespace epivote {

struct AxiomViolation {
  char axiom = 'P';  // 'P' or 'N'
  StateIndex state = 0;
  Voter voter = 0;  // N only
  std::string detail;
};

struct AxiomReport {
  bool p_valid = true;
  bool n_valid = true;
  std::vector<AxiomViolation> violations;
};

// P: at every state exactly one profile atom holds.
// N: at every state, each voter knows her own preference.
// Works on models that fail ValidateModel; that is where violations show.
AxiomReport CheckAxioms(const ProfileModel& m);

std::string FormatAxiomReport(const ProfileModel& m, const AxiomReport& r);

}  // namespace epivote

#endif  // EPIVOTE_AXIOMS_H_
