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

#include "scsolve/relative_interior.h"

#include "scsolve/error.h"

namespace scs {

MaximalResult relative_interior_point(const EqualityPolyhedron& p,
                                      const Options& opts) {
  return maximal_element_lp(p, opts);
}

bool verify_relative_interior(const EqualityPolyhedron& p,
                              std::span<const double> x,
                              const Options& opts) {
  p.validate();
  if (!is_feasible(p, x, opts.simplex.eps_feas)) {
    throw_error(ErrorCode::kInfeasibleInput,
                "point is not feasible for the polyhedron");
  }
  const MaximalResult maximal = maximal_support_iterative(p, opts);
  return !maximal.empty && support_of(x, opts.eps_supp) == maximal.support;
}

}  // namespace scs
