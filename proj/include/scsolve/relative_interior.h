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

// For a polyhedron in standard form the relative interior is exactly the set
// of maximal elements, so membership reduces to a support comparison.

#ifndef SCSOLVE_RELATIVE_INTERIOR_H_
#define SCSOLVE_RELATIVE_INTERIOR_H_

#include <span>

#include "scsolve/maximal_element.h"

namespace scs {

MaximalResult relative_interior_point(const EqualityPolyhedron& p,
                                      const Options& opts = {});

// True iff x is positive (above opts.eps_supp) on exactly the maximal support
// of p. Throws Error(kInfeasibleInput) if x is not feasible for p within
// opts.simplex.eps_feas.
bool verify_relative_interior(const EqualityPolyhedron& p,
                              std::span<const double> x,
                              const Options& opts = {});

}  // namespace scs

#endif  // SCSOLVE_RELATIVE_INTERIOR_H_
