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

#include "scsolve/core_model.h"

#include <algorithm>
#include <iterator>
#include <cmath>
#include <string>

#include "scsolve/error.h"
#include "scsolve/simd/kernels.h"

namespace scs {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw_error(ErrorCode::kValidationError, what);
}

void require_finite(std::span<const double> v, const std::string& name) {
  for (double x : v) require(std::isfinite(x), name + " has a non-finite entry");
}

}  // namespace

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIterationLimit:
      return "IterationLimit";
    case ErrorCode::kNumericalBreakdown:
      return "NumericalBreakdown";
    case ErrorCode::kInvariantViolation:
      return "InvariantViolation";
    case ErrorCode::kNoOptimalFace:
      return "NoOptimalFace";
    case ErrorCode::kDegenerateCertificate:
      return "DegenerateCertificate";
    case ErrorCode::kPartitionViolation:
      return "PartitionViolation";
    case ErrorCode::kInfeasibleInput:
      return "InfeasibleInput";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kValidationError:
      return "ValidationError";
  }
  return "Unknown";
}

std::string_view status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "OPTIMAL";
    case SolveStatus::kInfeasible:
      return "INFEASIBLE";
    case SolveStatus::kUnbounded:
      return "UNBOUNDED";
  }
  return "UNKNOWN";
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(entries_.size() == rows_ * cols_,
          "matrix entries length " + std::to_string(entries_.size()) +
              " does not match " + std::to_string(rows_) + " x " +
              std::to_string(cols_));
  require_finite(entries_, "matrix");
}

DenseMatrix DenseMatrix::zeros(std::size_t rows, std::size_t cols) {
  return DenseMatrix(rows, cols, std::vector<double>(rows * cols, 0.0));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return DenseMatrix(n, n, std::move(e));
}

DenseMatrix DenseMatrix::transposed() const {
  std::vector<double> t(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t[j * rows_ + i] = (*this)(i, j);
  }
  return DenseMatrix(cols_, rows_, std::move(t));
}

Vector DenseMatrix::multiply(std::span<const double> x) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = simd::dot(row(i), x);
  return out;
}

void CanonicalLp::validate() const {
  require(b.size() == a.rows(), "b length " + std::to_string(b.size()) +
                                    " does not match m = " +
                                    std::to_string(a.rows()));
  require(c.size() == a.cols(), "c length " + std::to_string(c.size()) +
                                    " does not match n = " +
                                    std::to_string(a.cols()));
  require_finite(a.entries(), "A");
  require_finite(b, "b");
  require_finite(c, "c");
}

void EqualityPolyhedron::validate() const {
  require(b_eq.size() == a_eq.rows(),
          "b_eq length " + std::to_string(b_eq.size()) +
              " does not match row count " + std::to_string(a_eq.rows()));
  require_finite(a_eq.entries(), "a_eq");
  require_finite(b_eq, "b_eq");
}

void BoundedLp::validate() const {
  const std::size_t n = a_eq.cols();
  require(b_eq.size() == a_eq.rows(), "b_eq length does not match row count");
  require(objective.size() == n, "objective length does not match columns");
  require(lower.size() == n, "lower length does not match columns");
  require(upper.size() == n, "upper length does not match columns");
  require_finite(a_eq.entries(), "a_eq");
  require_finite(b_eq, "b_eq");
  require_finite(objective, "objective");
  require_finite(lower, "lower");
  for (std::size_t j = 0; j < n; ++j) {
    require(!std::isnan(upper[j]) && upper[j] != -kInfinity,
            "upper bound " + std::to_string(j + 1) + " is invalid");
    require(lower[j] <= upper[j],
            "lower bound exceeds upper bound for variable " +
                std::to_string(j + 1));
  }
}

BoundedLp BoundedLp::over(const EqualityPolyhedron& p, Vector objective,
                          Sense sense) {
  const std::size_t n = p.num_vars();
  return BoundedLp{p.a_eq,        p.b_eq,         std::move(objective), sense,
                   Vector(n, 0.0), Vector(n, kInfinity)};
}

Support::Support(std::vector<std::size_t> one_based)
    : indices_(std::move(one_based)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  require(indices_.empty() || indices_.front() >= 1,
          "support indices are 1-based");
}

bool Support::contains(std::size_t one_based) const {
  return std::binary_search(indices_.begin(), indices_.end(), one_based);
}

Support Support::complement(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= n; ++j) {
    if (!contains(j)) out.push_back(j);
  }
  return Support(std::move(out));
}

Support Support::united(const Support& other) const {
  std::vector<std::size_t> out;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(out));
  return Support(std::move(out));
}

bool Support::is_subset_of(const Support& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(),
                       indices_.begin(), indices_.end());
}

std::pair<EqualityPolyhedron, EqualityPolyhedron> canonical_to_standard(
    const CanonicalLp& lp) {
  const std::size_t m = lp.m();
  const std::size_t n = lp.n();

  std::vector<double> primal(m * (n + m), 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) primal[i * (n + m) + j] = lp.a(i, j);
    primal[i * (n + m) + n + i] = 1.0;
  }

  std::vector<double> dual(n * (m + n), 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) dual[j * (m + n) + i] = lp.a(i, j);
    dual[j * (m + n) + m + j] = -1.0;
  }

  return {EqualityPolyhedron{DenseMatrix(m, n + m, std::move(primal)), lp.b},
          EqualityPolyhedron{DenseMatrix(n, m + n, std::move(dual)), lp.c}};
}

DenseMatrix homogenize(const EqualityPolyhedron& p) {
  const std::size_t rows = p.num_rows();
  const std::size_t q = p.num_vars();
  std::vector<double> h(rows * (q + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    auto src = p.a_eq.row(i);
    std::copy(src.begin(), src.end(), h.begin() + i * (q + 1));
    // 0.0 - b keeps -0.0 out of the matrix for zero right-hand sides.
    h[i * (q + 1) + q] = 0.0 - p.b_eq[i];
  }
  return DenseMatrix(rows, q + 1, std::move(h));
}

Support support_of(std::span<const double> x, double tol) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] > tol) idx.push_back(j + 1);
  }
  return Support(std::move(idx));
}

double inf_norm(std::span<const double> x) { return simd::max_abs(x); }

bool is_feasible(const EqualityPolyhedron& p, std::span<const double> x,
                 double tol) {
  if (x.size() != p.num_vars()) return false;
  for (double v : x) {
    if (!(v >= -tol)) return false;
  }
  const Vector ax = p.a_eq.multiply(x);
  const double scale = 1.0 + inf_norm(p.b_eq);
  for (std::size_t i = 0; i < ax.size(); ++i) {
    if (std::fabs(ax[i] - p.b_eq[i]) > tol * scale) return false;
  }
  return true;
}

}  // namespace scs
