// Copyright 2026 The scsolve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Problem and solution files.
//
// The structured form is a JSON object:
//
//   {
//     "name": "example",
//     "m": 2,
//     "n": 3,
//     "A": [[1, 0, 2], [0, 1, 1]],
//     "b": [4, 3],
//     "c": [1, 1, 1],
//     "z_star": 7
//   }
//
// "A" may also be a flat row-major array of m*n numbers. "name" and "z_star"
// are optional. The plain form is whitespace-delimited numbers with '#'
// comments and an optional leading `name <word>`:
//
//   m n  A (m*n, row-major)  b (m)  c (n)  [z_star]
//
// Serialization always writes the structured form with nested rows and
// shortest round-trip numbers.

#ifndef SCSOLVE_PROBLEM_IO_H_
#define SCSOLVE_PROBLEM_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "scsolve/core_model.h"

namespace scs {

struct ProblemFile {
  std::string name;
  std::size_t m = 0;
  std::size_t n = 0;
  Vector a;  // row-major, m * n
  Vector b;
  std::optional<Vector> c;
  std::optional<double> z_star;

  CanonicalLp to_canonical() const;  // requires c
  EqualityPolyhedron to_polyhedron() const;
};

struct ParseOptions {
  // When false, "c" may be omitted (the file describes {x | Ax = b, x >= 0}).
  bool require_objective = true;
};

// Throws ParseError (with line/column or field) on malformed text and
// Error(kValidationError) on non-finite numbers or dimension mismatches.
ProblemFile parse_problem(std::string_view text,
                          const ParseOptions& opts = {});

std::string serialize_problem(const ProblemFile& problem);

// {"x": [...], "u": [...], "y": [...], "v": [...]}, optional "z_star".
// Dimensions are checked against the problem.
ScsResult parse_solution(std::string_view text, const ProblemFile& problem);

// Shortest decimal text that reads back as the same double; "-0" prints as
// "0".
std::string format_shortest(double value);

}  // namespace scs

#endif  // SCSOLVE_PROBLEM_IO_H_
