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

#ifndef EPIVOTE_MODEL_IO_H_
#define EPIVOTE_MODEL_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "epivote/election.h"
#include "epivote/profile_model.h"

namespace epivote {

// Contents of a model file. Example:
//
//   candidates: a b c
//   voters: 2
//   tiebreak: b a c
//   state s = 1: a>b>c ; 2: c>b>a
//   state t = 1: a>b>c ; 2: c>b>a
//   state u = 1: c>b>a ; 2: c>b>a
//   indist 1: {s t} {u}
//   indist 2: {s} {t u}
//   point: t
//
// '#' starts a comment. `tiebreak`, `point` and `indist` lines are optional;
// a voter without an `indist` line tells every state apart.
struct ModelFile {
  ProfileModel model;
  std::optional<Preference> tiebreak;
  std::optional<StateIndex> point;

  bool operator==(const ModelFile&) const = default;
};

// Parses and validates. Format problems throw kModelFormat with a
// "line N:" prefix; validation failures keep their own kind and also carry
// the line of the offending statement where one exists. With `validate`
// off, structural checks on partitions and own preferences are skipped.
ModelFile ParseModel(std::string_view text, bool validate = true);
ModelFile LoadModel(const std::string& path, bool validate = true);

// Canonical serialization: fixed line order, every partition written out,
// blocks ordered by their first state. ParseModel(WriteModel(f)) == f.
std::string WriteModel(const ModelFile& file);

}  // namespace epivote

#endif  // EPIVOTE_MODEL_IO_H_
