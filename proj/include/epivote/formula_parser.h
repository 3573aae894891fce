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

#ifndef EPIVOTE_FORMULA_PARSER_H_
#define EPIVOTE_FORMULA_PARSER_H_

#include <string_view>

#include "epivote/election.h"
#include "epivote/formula.h"

namespace epivote {

// Grammar (whitespace-insensitive):
//
//   formula := iff
//   iff     := implies ("<->" implies)*
//   implies := or ("->" implies)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "K" INT unary | "[" formula "]" unary | atom
//   atom    := "(" formula ")" | "true" | "false"
//            | "profile{" INT ":" order (";" INT ":" order)* "}"
//            | "pref" INT "(" order ")"
//            | INT ":" ID ">" ID
//            | "wins" ID
//   order   := ID (">" ID)+
//
// Error messages start with the byte offset of the offending token.
// Throws kSyntaxError, kUnknownVoter, kUnknownCandidate,
// kIncompleteProfileAtom.
Formula ParseFormula(std::string_view src, const Election& e);

}  // namespace epivote

#endif  // EPIVOTE_FORMULA_PARSER_H_
