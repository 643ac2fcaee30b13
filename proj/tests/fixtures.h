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


// The worked degenerate example bundled in data/ and helpers shared by the
// test binaries.

#ifndef SCSOLVE_TESTS_FIXTURES_H_
#define SCSOLVE_TESTS_FIXTURES_H_

#include <fstream>
#include <sstream>
#include <string>

#include "scsolve/core_model.h"

namespace scs::testing {

inline std::string data_path(const std::string& file) {
  return std::string(SCSOLVE_DATA_DIR) + "/" + file;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CanonicalLp example_lp() {
  return CanonicalLp{DenseMatrix(5, 4,
                                 {-1, 1, -2, 1,   //
                                  4, -4, 1, -2,   //
                                  0, 0, -3, 1,    //
                                  -1, 1, -2, 1,   //
                                  -2, 5, -9, 3}),
                     {1, 0, 2, 1, 7},
                     {-4, 4, -8, 4}};
}

inline constexpr double kExampleZStar = 4.0;

// The published strictly complementary pair, at full precision.
inline ScsResult example_solution() {
  ScsResult r;
  r.x_bar = {8.0 / 3.0, 5.0 / 3.0, 1, 4};
  r.u_bar = {0, 3, 1, 0, 1};
  r.y_bar = {3, 0, 0, 1, 0};
  r.v_bar = {0, 0, 0, 0};
  r.z_star = kExampleZStar;
  return r;
}

inline OptimalPartition example_partition() {
  return OptimalPartition{Support({1, 2, 3, 4}), Support(), Support({2, 3, 5}),
                          Support({1, 4})};
}

inline EqualityPolyhedron polyhedron(std::size_t rows, std::size_t cols,
                                     std::vector<double> a, Vector b) {
  return EqualityPolyhedron{DenseMatrix(rows, cols, std::move(a)),
                            std::move(b)};
}

}  // namespace scs::testing

#endif  // SCSOLVE_TESTS_FIXTURES_H_
