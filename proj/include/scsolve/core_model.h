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

// Domain types shared by the solver and the strict-complementarity layer:
// dense matrices, canonical primal/dual LP data, equality polyhedra in
// standard form, bounded-variable LPs, and the result records.
//
// Internally every index is 0-based. Support sets store 1-based indices so
// that anything printed from them matches the usual x_1..x_n notation.

#ifndef SCSOLVE_CORE_MODEL_H_
#define SCSOLVE_CORE_MODEL_H_

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace scs {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultFeasibilityTol = 1e-9;
inline constexpr double kDefaultSupportTol = 1e-6;

using Vector = std::vector<double>;

// Row-major dense matrix with finite entries. Immutable once built.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  // Throws ValidationError if entries.size() != rows * cols or any entry is
  // not finite.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static DenseMatrix zeros(std::size_t rows, std::size_t cols);
  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const double> entries() const { return entries_; }

  DenseMatrix transposed() const;
  Vector multiply(std::span<const double> x) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

// max c'x s.t. Ax <= b, x >= 0, paired with min b'y s.t. A'y >= c, y >= 0.
struct CanonicalLp {
  DenseMatrix a;
  Vector b;
  Vector c;

  std::size_t m() const { return a.rows(); }
  std::size_t n() const { return a.cols(); }
  // Throws ValidationError on dimension mismatch or non-finite data.
  void validate() const;
};

// P = {x | a_eq x = b_eq, x >= 0}.
struct EqualityPolyhedron {
  DenseMatrix a_eq;
  Vector b_eq;

  std::size_t num_rows() const { return a_eq.rows(); }
  std::size_t num_vars() const { return a_eq.cols(); }
  void validate() const;
};

enum class Sense { kMaximize, kMinimize };

// Native form of the simplex solver: optimize objective'x subject to
// a_eq x = b_eq and lower <= x <= upper. Lower bounds are finite; upper bounds
// may be +infinity.
struct BoundedLp {
  DenseMatrix a_eq;
  Vector b_eq;
  Vector objective;
  Sense sense = Sense::kMaximize;
  Vector lower;
  Vector upper;

  std::size_t num_rows() const { return a_eq.rows(); }
  std::size_t num_vars() const { return a_eq.cols(); }
  void validate() const;

  // Maximize/minimize objective over P with x in [0, +inf).
  static BoundedLp over(const EqualityPolyhedron& p, Vector objective,
                        Sense sense);
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view status_name(SolveStatus status);

// Partition of variable indices (0-based) at the end of a simplex solve.
// Indices >= num_structural name the artificial variable of row
// (index - num_structural); they only remain basic on redundant rows and are
// pinned to zero.
struct BasisState {
  std::size_t num_structural = 0;
  std::vector<std::size_t> basic;
  std::vector<std::size_t> nonbasic_at_lower;
  std::vector<std::size_t> nonbasic_at_upper;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Vector> x;
  std::optional<double> objective_value;
  std::optional<BasisState> basis;
  std::size_t iterations = 0;
  std::size_t phase1_iterations = 0;

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

// Sorted set of 1-based indices.
class Support {
 public:
  Support() = default;
  // Sorts and deduplicates. Indices must be >= 1.
  explicit Support(std::vector<std::size_t> one_based);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t one_based) const;

  // {1..n} minus this set.
  Support complement(std::size_t n) const;
  Support united(const Support& other) const;
  bool is_subset_of(const Support& other) const;

  friend bool operator==(const Support&, const Support&) = default;

 private:
  std::vector<std::size_t> indices_;
};

// The split blocks of the homogenized maximal-element model: the unbounded
// block (x1, w1) and the [0, 1]-bounded block (x2, w2).
struct SplitVariables {
  Vector x1;
  Vector x2;
  double w1 = 0.0;
  double w2 = 0.0;
};

struct MaximalResult {
  bool empty = true;
  std::optional<Vector> x_bar;
  Support support;
  double w1_star = 0.0;
  double w2_star = 0.0;
  // Populated by the single-LP method; the iterative method leaves it unset.
  std::optional<SplitVariables> split;
  std::size_t lp_solves = 0;
  std::size_t simplex_iterations = 0;
};

struct OptimalPartition {
  Support sigma_x;
  Support sigma_v;
  Support sigma_u;
  Support sigma_y;

  friend bool operator==(const OptimalPartition&,
                         const OptimalPartition&) = default;
};

struct ScsResult {
  Vector x_bar;
  Vector u_bar;
  Vector y_bar;
  Vector v_bar;
  OptimalPartition partition;
  double z_star = 0.0;
  std::size_t simplex_iterations = 0;
};

// Standard form of the canonical pair: primal [A, I_m](x; u) = b over (x, u),
// dual [A', -I_n](y; v) = c over (y, v).
std::pair<EqualityPolyhedron, EqualityPolyhedron> canonical_to_standard(
    const CanonicalLp& lp);

// [a_eq | -b_eq], the constraint block of the closed characteristic cone
// {(x; w) >= 0 | a_eq x - b_eq w = 0}.
DenseMatrix homogenize(const EqualityPolyhedron& p);

// {j | x_j > tol}, 1-based.
Support support_of(std::span<const double> x, double tol = kDefaultSupportTol);

// True iff ||a_eq x - b_eq||_inf <= tol * (1 + ||b_eq||_inf) and x >= -tol.
bool is_feasible(const EqualityPolyhedron& p, std::span<const double> x,
                 double tol = kDefaultFeasibilityTol);

double inf_norm(std::span<const double> x);

}  // namespace scs

#endif  // SCSOLVE_CORE_MODEL_H_
