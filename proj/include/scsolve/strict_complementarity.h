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

// Strictly complementary solutions of the canonical pair
//
//   (P) max c'x  s.t. Ax + u = b,   x, u >= 0
//   (D) min b'y  s.t. A'y - v = c,  y, v >= 0
//
// i.e. optimal pairs with x + v > 0 and y + u > 0. Such a pair is exactly a
// pair of relative-interior points of the two optimal faces, so every method
// here reduces to maximal_element_lp on a suitable polyhedron:
//
//   TwoPhase   the primal and dual optimal faces separately (needs z*)
//   SingleLp   the product of both faces, tied by c'x - b'y = 0
//   MaxMin     primal face as above, then the dual point by maximizing the
//              smallest of the dual entries left free by the primal point

#ifndef SCSOLVE_STRICT_COMPLEMENTARITY_H_
#define SCSOLVE_STRICT_COMPLEMENTARITY_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "scsolve/core_model.h"
#include "scsolve/maximal_element.h"

namespace scs {

enum class ScsMethod { kTwoPhase, kSingleLp, kMaxMinDualFace };

std::string_view method_name(ScsMethod method);

// Which dual entries the max-min problem pushes up. kLiteral takes
// i in supp(u), j in supp(x); kComplement takes i not in supp(u),
// j not in supp(x), the entries strict complementarity allows to be positive.
enum class MaxMinReading { kLiteral, kComplement };

struct OptimalFaces {
  EqualityPolyhedron primal_face;  // over (x, u), m + 1 rows
  EqualityPolyhedron dual_face;    // over (y, v), n + 1 rows
  double z_star = 0.0;
};

struct OptimalValue {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<double> z_star;
  std::size_t iterations = 0;
};

struct ScsRun {
  ScsResult result;
  // Split blocks of every maximal-element solve the method performed.
  std::vector<SplitVariables> model_splits;
};

struct MaxMinResult {
  Vector y;
  Vector v;
  double t_star = 0.0;
  // True if t had to be capped at 1 because the max-min was unbounded.
  bool capped = false;
  std::size_t iterations = 0;
};

struct ScsVerification {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool zero_gap = false;
  bool strictly_positive = false;
  bool complementary = false;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double gap = 0.0;

  bool ok() const {
    return primal_feasible && dual_feasible && zero_gap && strictly_positive &&
           complementary;
  }
};

// Solves (P) in standard form. Infeasible/Unbounded come back as statuses.
OptimalValue optimal_value(const CanonicalLp& lp, const Options& opts = {});

OptimalFaces build_optimal_faces(const CanonicalLp& lp, double z_star);

// Product of both optimal faces over (x, u, y, v): m + n + 1 rows.
EqualityPolyhedron build_primal_dual_face(const CanonicalLp& lp);

// Throws Error(kNoOptimalFace) if either face is empty.
ScsRun scs_two_phase(const CanonicalLp& lp, double z_star,
                     const Options& opts = {});

// nullopt means no optimal pair exists: (P) is infeasible or unbounded.
std::optional<ScsRun> scs_single(const CanonicalLp& lp,
                                 const Options& opts = {});

// max t  s.t. (y, v) in the dual face, y_i >= t and v_j >= t on the index
// sets selected by `reading`, t >= 0. Throws Error(kNoOptimalFace) if the
// dual face is empty and Error(kDegenerateCertificate) if t* <= eps_supp.
MaxMinResult scs_maxmin_dual_face(const CanonicalLp& lp, double z_star,
                                  std::span<const double> x_bar,
                                  std::span<const double> u_bar,
                                  MaxMinReading reading,
                                  const Options& opts = {});

// Primal face by maximal_element_lp, dual point by scs_maxmin_dual_face.
ScsRun scs_maxmin(const CanonicalLp& lp, double z_star, MaxMinReading reading,
                  const Options& opts = {});

// Throws Error(kPartitionViolation) if some complementary pair has both or
// neither member above tol.
OptimalPartition optimal_partition(std::span<const double> x_bar,
                                   std::span<const double> u_bar,
                                   std::span<const double> y_bar,
                                   std::span<const double> v_bar, double tol);

ScsVerification verify_scs_detailed(const CanonicalLp& lp,
                                    const ScsResult& result,
                                    double tol = kDefaultSupportTol);

bool verify_scs(const CanonicalLp& lp, const ScsResult& result,
                double tol = kDefaultSupportTol);

// Constraint i of (P) is binding over the optimal face iff u_i = 0 there;
// constraint j of (D) iff v_j = 0.
Support binding_primal(const OptimalPartition& partition, std::size_t m);
Support binding_dual(const OptimalPartition& partition, std::size_t n);

}  // namespace scs

#endif  // SCSOLVE_STRICT_COMPLEMENTARITY_H_
