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

// Reference game grids for the fixture models, tiebreak b>a>c. Rows are
// voter 1's conditional ballots, columns voter 2's. A leading '*' marks an
// equilibrium.

#ifndef EPIVOTE_TESTS_REFERENCE_GRIDS_H_
#define EPIVOTE_TESTS_REFERENCE_GRIDS_H_

#include <sstream>
#include <string>
#include <vector>

namespace grids {

struct Grid {
  const char* name;
  const char* fixture;
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::string> winners;  // one line per row
  std::vector<std::string> payoffs;  // one line per row
};

// Cells whose printed payoff disagrees with the printed winners of the same
// cell. The corrected value follows from those winners.
struct Erratum {
  const char* grid;
  const char* row;
  const char* col;
  const char* printed;
  const char* corrected;
};

inline std::vector<std::string> Split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

inline const std::vector<std::string> kTop3 = {"a", "b", "c"};
inline const std::vector<std::string> kPairs = {"aa", "ab", "ac", "ba", "bb",
                                                "bc", "ca", "cb", "cc"};

inline const Grid& OpposedGrid() {
  static const Grid g{
      "single state, opposed",
      "one_state_opposed.model",
      kTop3,
      kTop3,
      {"a b a", "b b b", "a b c"},
      {"2.0 *1.1 2.0", "1.1 *1.1 1.1", "2.0 1.1 0.2"}};
  return g;
}

inline const Grid& SharedGrid() {
  static const Grid g{
      "single state, shared",
      "one_state_shared.model",
      kTop3,
      kTop3,
      {"a b a", "b b b", "a b c"},
      {"0.0 *1.1 0.0", "*1.1 *1.1 1.1", "0.0 1.1 *2.2"}};
  return g;
}

inline const Grid& TwoStateGrid() {
  static const Grid g{"t,u",
                      "two_state_uncertain.model",
                      kPairs,
                      kTop3,
                      {"aa bb aa", "ab bb ab", "aa bb ac", "ba bb ba",
                       "bb bb bb", "ba bb bc", "aa bb ca", "ab bb cb",
                       "aa bb cc"},
                      {"20.0 *11.1 20.0", "21.0 *11.1 21.0", "20.0 *11.1 21.0",
                       "10.0 *11.1 10.0", "11.1 *11.1 11.1", "10.0 *11.1 12.1",
                       "20.0 *11.1 00.0", "21.0 *11.1 01.1",
                       "20.0 11.1 02.2"}};
  return g;
}

inline const Grid& StuGrid() {
  static const Grid g{
      "s,t,u",
      "three_state_stu.model",
      kPairs,
      kPairs,
      {"aaa abb aaa baa bbb baa aaa abb aaa",
       "aab abb aab bab bbb bab aab abb aab",
       "aaa abb aac baa bbb bac aaa abb aac",
       "bba bbb bba bba bbb bba bba bbb bba",
       "bbb bbb bbb bbb bbb bbb bbb bbb bbb",
       "bba bbb bbc bba bbb bbc bba bbb bbc",
       "aaa abb aca baa bbb bca caa cbb cca",
       "aab abb acb bab bbb bcb cab cbb ccb",
       "aaa abb acc baa bbb bcc caa cbb ccc"},
      {"20.00 11.01 20.00 10.10 *11.11 10.10 20.00 11.01 20.00",
       "21.00 11.01 21.00 11.10 *11.11 11.10 21.00 11.01 21.00",
       "20.00 11.01 22.00 10.10 *11.11 12.10 20.00 11.01 22.00",
       "10.10 *11.11 10.10 10.10 *11.11 10.10 10.10 *11.11 10.10",
       "11.11 *11.11 11.11 *11.11 *11.11 11.11 11.11 *11.11 11.11",
       "10.10 *11.11 12.11 10.10 *11.11 *12.11 10.10 *11.11 12.11",
       "20.00 11.01 00.00 10.10 11.11 10.10 00.20 01.21 00.20",
       "21.00 11.01 01.01 11.10 11.11 01.11 01.20 01.21 01.21",
       "20.00 11.01 02.02 10.10 11.11 02.12 00.20 01.21 02.22"}};
  return g;
}

inline const Grid& TuvGrid() {
  static const Grid g{
      "t,u,v",
      "three_state_tuv.model",
      kPairs,
      kPairs,
      {"aaa aab aaa bba bbb bba aaa aab aaa",
       "abb abb abb bbb bbb bbb abb abb abb",
       "aaa aab aac bba bbb bbc aca acb acc",
       "baa bab baa bba bbb bba baa bab baa",
       "bbb bbb bbb bbb bbb bbb bbb bbb bbb",
       "baa bab bac bba bbb bbc bca bcb bcc",
       "aaa aab aaa bba bbb bba caa cab caa",
       "abb abb abb bbb bbb bbb cbb cbb cbb",
       "aaa aab aac bba bbb bbc cca ccb ccc"},
      {"20.00 20.01 20.00 10.10 *11.11 10.10 20.00 20.01 20.00",
       "21.01 21.01 21.01 *11.11 *11.11 *11.11 21.01 21.01 21.01",
       "20.00 20.01 20.02 10.10 11.11 *11.12 20.00 21.01 22.02",
       "10.00 10.01 10.00 10.10 *11.11 10.10 10.00 10.01 10.00",
       "11.11 11.11 11.11 *11.11 *11.11 *11.11 11.11 11.11 11.11",
       "10.00 10.01 10.02 10.10 11.11 *11.12 10.10 11.11 12.12",
       "20.00 20.01 20.00 10.10 *11.11 10.10 00.00 00.01 00.00",
       "21.01 21.01 21.01 *11.11 *11.11 *11.11 01.11 01.11 01.11",
       "20.00 20.01 20.02 10.10 11.11 11.12 00.20 01.21 02.22"}};
  return g;
}

inline const std::vector<Erratum>& Errata() {
  static const std::vector<Erratum> e = {
      {"t,u", "ac", "c", "21.0", "22.0"},
      {"s,t,u", "ca", "bc", "10.10", "00.10"},
  };
  return e;
}

}  // namespace grids

#endif  // EPIVOTE_TESTS_REFERENCE_GRIDS_H_
