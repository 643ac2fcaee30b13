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

// Two-phase primal revised simplex for BoundedLp.
//
// Upper bounds are handled implicitly: a nonbasic variable sits at either
// bound, and the ratio test considers a bound flip of the entering variable
// alongside the usual basis change. The basis inverse is a dense LU of the
// last refactorized basis plus an eta file, refactorized every
// kRefactorizationPeriod pivots or when the primal residual drifts.
//
// Pricing is Dantzig (largest reduced cost) until a streak of degenerate
// pivots, then Bland's smallest-index rule until the objective moves again.

#ifndef SCSOLVE_SIMPLEX_H_
#define SCSOLVE_SIMPLEX_H_

#include <cstddef>

#include "scsolve/core_model.h"

namespace scs {

enum class PivotRule { kDantzigWithBlandFallback, kBland };

struct SimplexConfig {
  double eps_feas = kDefaultFeasibilityTol;
  double eps_opt = 1e-9;
  std::size_t max_iterations = 50000;
  PivotRule pivot_rule = PivotRule::kDantzigWithBlandFallback;
  std::size_t degenerate_streak_threshold = 50;

  // Throws ValidationError on non-positive tolerances or limits.
  void validate() const;
};

inline constexpr std::size_t kRefactorizationPeriod = 64;
inline constexpr double kResidualDriftTol = 1e-8;

struct Phase1Result {
  bool feasible = false;
  // Sum of artificial values at the phase-1 optimum.
  double infeasibility = 0.0;
  BasisState basis;
  std::size_t iterations = 0;
};

// Throws Error(kIterationLimit) when cfg.max_iterations is exhausted and
// Error(kNumericalBreakdown) when the basis cannot be refactorized.
SolveOutcome solve(const BoundedLp& lp, const SimplexConfig& cfg = {});

// Phase 1 alone: a feasible basis for lp, or the positive artificial optimum
// proving infeasibility.
Phase1Result phase1(const BoundedLp& lp, const SimplexConfig& cfg = {});

}  // namespace scs

#endif  // SCSOLVE_SIMPLEX_H_
