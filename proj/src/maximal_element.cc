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

#include "scsolve/maximal_element.h"

#include <cmath>
#include <string>
#include <vector>

#include "scsolve/error.h"

namespace scs {

BoundedLp maximal_element_model(const EqualityPolyhedron& p) {
  const DenseMatrix h = homogenize(p);
  const std::size_t rows = h.rows();
  const std::size_t k = h.cols();  // q + 1
  std::vector<double> a(rows * 2 * k);
  for (std::size_t i = 0; i < rows; ++i) {
    auto src = h.row(i);
    std::copy(src.begin(), src.end(), a.begin() + i * 2 * k);
    std::copy(src.begin(), src.end(), a.begin() + i * 2 * k + k);
  }
  Vector objective(2 * k, 0.0);
  Vector upper(2 * k, kInfinity);
  for (std::size_t j = k; j < 2 * k; ++j) {
    objective[j] = 1.0;
    upper[j] = 1.0;
  }
  return BoundedLp{DenseMatrix(rows, 2 * k, std::move(a)),
                   Vector(rows, 0.0),
                   std::move(objective),
                   Sense::kMaximize,
                   Vector(2 * k, 0.0),
                   std::move(upper)};
}

MaximalResult maximal_element_lp(const EqualityPolyhedron& p,
                                 const Options& opts) {
  p.validate();
  const std::size_t q = p.num_vars();
  const BoundedLp model = maximal_element_model(p);
  const SolveOutcome out = solve(model, opts.simplex);
  if (!out.optimal()) {
    // The origin is feasible and the objective is at most q + 1.
    throw_error(ErrorCode::kInvariantViolation,
                "maximal-element model returned " +
                    std::string(status_name(out.status)));
  }
  if (*out.objective_value > static_cast<double>(q + 1) + opts.eps_supp) {
    throw_error(ErrorCode::kInvariantViolation,
                "maximal-element objective exceeds the bounded block size");
  }

  const Vector& z = *out.x;
  SplitVariables split;
  split.x1.assign(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(q));
  split.w1 = z[q];
  split.x2.assign(z.begin() + static_cast<std::ptrdiff_t>(q + 1),
                  z.begin() + static_cast<std::ptrdiff_t>(2 * q + 1));
  split.w2 = z[2 * q + 1];

  MaximalResult result;
  result.w1_star = split.w1;
  result.w2_star = split.w2;
  result.lp_solves = 1;
  result.simplex_iterations = out.iterations;

  if (split.w2 <= opts.eps_supp) {
    result.empty = true;
    result.split = std::move(split);
    return result;
  }
  if (std::fabs(split.w2 - 1.0) > opts.eps_supp) {
    throw_error(ErrorCode::kInvariantViolation,
                "w2 = " + std::to_string(split.w2) +
                    " is neither 0 nor 1 at the maximal-element optimum");
  }

  // w1 + w2 equals w1 + 1 here; dividing by the actual homogenizing weight
  // keeps a_eq x_bar = b_eq to rounding.
  const double weight = split.w1 + split.w2;
  Vector x_bar(q);
  for (std::size_t j = 0; j < q; ++j) {
    x_bar[j] = (split.x1[j] + split.x2[j]) / weight;
  }
  result.empty = false;
  result.support = support_of(x_bar, opts.eps_supp);
  result.x_bar = std::move(x_bar);
  result.split = std::move(split);
  return result;
}

namespace {

// max sum_{j in open} min(x_j, 1) over P, linearized as x_j = s_j + t_j with
// 0 <= s_j <= 1, t_j >= 0, maximizing sum(s).
BoundedLp capped_coverage_model(const EqualityPolyhedron& p,
                                const std::vector<std::size_t>& open) {
  const std::size_t rows = p.num_rows();
  const std::size_t q = p.num_vars();
  const std::size_t k = open.size();
  const std::size_t cols = q + 2 * k;
  const std::size_t total_rows = rows + k;
  std::vector<double> a(total_rows * cols, 0.0);
  Vector b(total_rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    auto src = p.a_eq.row(i);
    std::copy(src.begin(), src.end(), a.begin() + i * cols);
    b[i] = p.b_eq[i];
  }
  Vector objective(cols, 0.0);
  Vector upper(cols, kInfinity);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t row = rows + r;
    a[row * cols + open[r]] = 1.0;
    a[row * cols + q + r] = -1.0;
    a[row * cols + q + k + r] = -1.0;
    objective[q + r] = 1.0;
    upper[q + r] = 1.0;
  }
  return BoundedLp{DenseMatrix(total_rows, cols, std::move(a)),
                   std::move(b),
                   std::move(objective),
                   Sense::kMaximize,
                   Vector(cols, 0.0),
                   std::move(upper)};
}

}  // namespace

MaximalResult maximal_support_iterative(const EqualityPolyhedron& p,
                                        const Options& opts) {
  p.validate();
  const std::size_t q = p.num_vars();
  std::vector<std::size_t> open(q);
  for (std::size_t j = 0; j < q; ++j) open[j] = j;
  Support covered;
  std::vector<Vector> iterates;

  MaximalResult result;
  while (!open.empty()) {
    const SolveOutcome out =
        solve(capped_coverage_model(p, open), opts.simplex);
    ++result.lp_solves;
    result.simplex_iterations += out.iterations;
    if (out.status == SolveStatus::kInfeasible) {
      if (!iterates.empty()) {
        throw_error(ErrorCode::kInvariantViolation,
                    "coverage subproblem became infeasible after the first");
      }
      result.empty = true;
      return result;
    }
    if (!out.optimal()) {
      throw_error(ErrorCode::kInvariantViolation,
                  "coverage subproblem is unbounded");
    }
    Vector xk(out.x->begin(), out.x->begin() + static_cast<std::ptrdiff_t>(q));
    const Support sk = support_of(xk, opts.eps_supp);
    iterates.push_back(std::move(xk));
    covered = covered.united(sk);

    std::vector<std::size_t> next;
    for (std::size_t j : open) {
      if (!sk.contains(j + 1)) next.push_back(j);
    }
    if (next.size() == open.size()) break;
    open = std::move(next);
  }

  if (iterates.empty()) {
    // q == 0: P is either {()} or empty.
    const SolveOutcome out =
        solve(BoundedLp::over(p, Vector{}, Sense::kMaximize), opts.simplex);
    ++result.lp_solves;
    result.empty = !out.optimal();
    if (!result.empty) {
      result.x_bar = Vector{};
      result.w2_star = 1.0;
    }
    return result;
  }

  Vector x_bar(q, 0.0);
  const double k = static_cast<double>(iterates.size());
  for (const Vector& xk : iterates) {
    for (std::size_t j = 0; j < q; ++j) x_bar[j] += xk[j];
  }
  for (double& v : x_bar) v /= k;

  result.empty = false;
  result.w2_star = 1.0;
  result.support = covered;
  result.x_bar = std::move(x_bar);
  return result;
}

bool audit_theorem31(const SplitVariables& split, double tol) {
  auto zero_or_one = [tol](double v) {
    return std::fabs(v) <= tol || std::fabs(v - 1.0) <= tol;
  };
  for (double v : split.x2) {
    if (!zero_or_one(v)) return false;
  }
  if (!zero_or_one(split.w2)) return false;
  for (double v : split.x1) {
    if (v < -tol) return false;
  }
  return split.w1 >= -tol;
}

}  // namespace scs
