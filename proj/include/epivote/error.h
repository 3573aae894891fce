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

#ifndef EPIVOTE_ERROR_H_
#define EPIVOTE_ERROR_H_

#include <stdexcept>
#include <string>

namespace epivote {

enum class ErrorKind {
  kInvalidArgument,
  kPartitionError,
  kOwnPreferenceViolation,
  kDanglingState,
  kDuplicateState,
  kUnknownState,
  kUnknownVoter,
  kUnknownCandidate,
  kIncompleteProfileAtom,
  kSyntaxError,
  kModelFormat,
  kMissingTiebreak,
  kMissingRule,
  kSizeLimit,
  kEmptySet,
  kEmptyResult,
  kPointEliminated,
  kIndistinguishable,
};

const char* ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception. `kind()` is
// stable and meant for programmatic dispatch; `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind),
        message_(message) {}

  ErrorKind kind() const { return kind_; }
  // The text without the kind prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace epivote

#endif  // EPIVOTE_ERROR_H_
