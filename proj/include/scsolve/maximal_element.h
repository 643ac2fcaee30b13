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

// Maximal elements of P = {x | Ax = b, x >= 0}: points with the largest
// number of positive coordinates.
//
// maximal_element_lp solves one LP over the closed characteristic cone of P,
// with every homogenized variable z = (x; w) split as z = z1 + z2 where
// z1 >= 0 and 0 <= z2 <= 1:
//
//   max  sum(x2) + w2
//   s.t. [A | -b] (x1 + x2; w1 + w2) = 0
//
// At any optimum each entry of (x2; w2) is 0 or 1, w2 = 0 exactly when P is
// empty, and otherwise (x1 + x2) / (w1 + 1) is a maximal element.
//
// maximal_support_iterative grows the support one LP at a time and serves as
// an independent check of the single-LP method.

#ifndef SCSOLVE_MAXIMAL_ELEMENT_H_
#define SCSOLVE_MAXIMAL_ELEMENT_H_

#include "scsolve/core_model.h"
#include "scsolve/simplex.h"

namespace scs {

struct Options {
  SimplexConfig simplex;
  // Coordinates above this count as positive.
  double eps_supp = kDefaultSupportTol;
};

// The bounded-variable LP described above, variables ordered (x1, w1, x2, w2).
BoundedLp maximal_element_model(const EqualityPolyhedron& p);

// Throws Error(kInvariantViolation) if the model solve is not Optimal, or if
// w2 lands strictly between 0 and 1 (which only numerical trouble can cause).
// Simplex failures propagate unchanged.
MaximalResult maximal_element_lp(const EqualityPolyhedron& p,
                                 const Options& opts = {});

// Repeatedly maximizes the positive part of the not-yet-covered coordinates
// (each capped at 1 so every subproblem is bounded) until no new coordinate
// becomes positive. x_bar is the uniform average of the iterates. Returns
// empty = true for an infeasible P.
MaximalResult maximal_support_iterative(const EqualityPolyhedron& p,
                                        const Options& opts = {});

// True iff the bounded block is within tol of {0, 1} componentwise and the
// unbounded block is >= -tol.
bool audit_theorem31(const SplitVariables& split, double tol);

}  // namespace scs

#endif  // SCSOLVE_MAXIMAL_ELEMENT_H_
