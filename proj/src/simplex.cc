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

#include "scsolve/simplex.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "scsolve/dense_lu.h"
#include "scsolve/error.h"
#include "scsolve/simd/kernels.h"

namespace scs {

void SimplexConfig::validate() const {
  if (!(eps_feas > 0.0) || !(eps_opt > 0.0)) {
    throw_error(ErrorCode::kValidationError,
                "simplex tolerances must be positive");
  }
  if (max_iterations == 0) {
    throw_error(ErrorCode::kValidationError,
                "max_iterations must be positive");
  }
}

namespace {

enum class VarState { kBasic, kAtLower, kAtUpper };

// Pivot elements smaller than this (relative to the largest entry of the
// entering column) are never chosen in the ratio test.
constexpr double kPivotTol = 1e-9;
constexpr double kDegenerateStep = 1e-12;
constexpr double kBreakdownResidual = 1e-6;
constexpr double kDriveOutPivotTol = 1e-7;
constexpr int kScalingPasses = 4;

class BoundedSimplex {
 public:
  BoundedSimplex(const BoundedLp& lp, const SimplexConfig& cfg)
      : lp_(lp),
        cfg_(cfg),
        m_(lp.num_rows()),
        n_(lp.num_vars()),
        total_(n_ + m_),
        cols_(total_ * m_, 0.0),
        b_(lp.b_eq),
        lower_(total_, 0.0),
        upper_(total_, 0.0),
        cost_(total_, 0.0),
        state_(total_, VarState::kAtLower),
        head_(m_, 0),
        x_(total_, 0.0),
        work_(m_, 0.0) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i < m_; ++i) cols_[j * m_ + i] = lp.a_eq(i, j);
    }
    equilibrate();
    for (std::size_t i = 0; i < m_; ++i) b_[i] *= row_scale_[i];
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i < m_; ++i) {
        cols_[j * m_ + i] *= row_scale_[i] * col_scale_[j];
      }
      lower_[j] = lp.lower[j] / col_scale_[j];
      upper_[j] = lp.upper[j] / col_scale_[j];
    }
    const double sign = lp.sense == Sense::kMaximize ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n_; ++j) {
      objective_.push_back(sign * lp.objective[j] * col_scale_[j]);
    }
    b_scale_ = 1.0 + (m_ == 0 ? 0.0 : simd::max_abs(b_));
  }

  Phase1Result run_phase1() {
    crash_initial_basis();
    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t art = n_ + i;
      if (state_[art] == VarState::kBasic) cost_[art] = 1.0;
    }
    refactorize_or_throw();
    const std::size_t start = iterations_;
    iterate(/*phase_one=*/true);

    Phase1Result result;
    result.iterations = iterations_ - start;
    compute_primal();
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < m_; ++i) infeasibility += std::fabs(x_[n_ + i]);
    result.infeasibility = infeasibility;
    result.feasible = infeasibility <= cfg_.eps_feas * b_scale_;
    phase1_iterations_ = result.iterations;
    if (result.feasible) {
      for (std::size_t i = 0; i < m_; ++i) upper_[n_ + i] = 0.0;
      drive_out_artificials();
      compute_primal();
    }
    result.basis = basis_state();
    return result;
  }

  SolveOutcome run_phase2() {
    std::fill(cost_.begin(), cost_.end(), 0.0);
    std::copy(objective_.begin(), objective_.end(), cost_.begin());
    const bool bounded = iterate(/*phase_one=*/false);

    SolveOutcome out;
    out.iterations = iterations_;
    out.phase1_iterations = phase1_iterations_;
    if (!bounded) {
      out.status = SolveStatus::kUnbounded;
      return out;
    }
    refactorize_or_throw();
    compute_primal();
    snap_to_bounds();

    out.status = SolveStatus::kOptimal;
    Vector x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = x_[j] * col_scale_[j];
    audit_primal(x);
    double obj = 0.0;
    for (std::size_t j = 0; j < n_; ++j) obj += lp_.objective[j] * x[j];
    out.objective_value = obj;
    out.x = std::move(x);
    out.basis = basis_state();
    return out;
  }


 private:
  std::span<const double> column(std::size_t j) const {
    return {cols_.data() + j * m_, m_};
  }

  bool is_fixed(std::size_t j) const { return !(upper_[j] > lower_[j]); }

  // Geometric-mean row and column scaling rounded to powers of two, so that
  // scaled data and bounds stay exact and x = col_scale * x' loses nothing.
  void equilibrate() {
    row_scale_.assign(m_, 1.0);
    col_scale_.assign(n_, 1.0);
    auto pow2 = [](double lo, double hi) {
      return std::ldexp(1.0, -static_cast<int>(std::lround(0.5 * std::log2(lo * hi))));
    };
    for (int pass = 0; pass < kScalingPasses; ++pass) {
      for (std::size_t i = 0; i < m_; ++i) {
        double lo = kInfinity;
        double hi = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
          const double a = std::fabs(cols_[j * m_ + i]) * col_scale_[j];
          if (a == 0.0) continue;
          lo = std::min(lo, a);
          hi = std::max(hi, a);
        }
        if (hi > 0.0) row_scale_[i] = pow2(lo, hi);
      }
      for (std::size_t j = 0; j < n_; ++j) {
        double lo = kInfinity;
        double hi = 0.0;
        for (std::size_t i = 0; i < m_; ++i) {
          const double a = std::fabs(cols_[j * m_ + i]) * row_scale_[i];
          if (a == 0.0) continue;
          lo = std::min(lo, a);
          hi = std::max(hi, a);
        }
        if (hi > 0.0) col_scale_[j] = pow2(lo, hi);
      }
    }
  }

  void crash_initial_basis() {
    for (std::size_t j = 0; j < n_; ++j) {
      state_[j] = VarState::kAtLower;
      x_[j] = lower_[j];
    }
    Vector residual = b_;
    for (std::size_t j = 0; j < n_; ++j) {
      if (x_[j] != 0.0) simd::axpy(-x_[j], column(j), residual);
    }
    std::vector<bool> used(n_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t art = n_ + i;
      std::size_t chosen = n_;
      for (std::size_t j = 0; j < n_ && chosen == n_; ++j) {
        if (used[j]) continue;
        const auto col = column(j);
        const double a = col[i];
        if (a == 0.0) continue;
        bool singleton = true;
        for (std::size_t k = 0; k < m_ && singleton; ++k) {
          if (k != i && col[k] != 0.0) singleton = false;
        }
        if (!singleton) continue;
        const double value = lower_[j] + residual[i] / a;
        if (value >= lower_[j] && value <= upper_[j]) {
          chosen = j;
          x_[j] = value;
        }
      }
      if (chosen < n_) {
        used[chosen] = true;
        state_[chosen] = VarState::kBasic;
        head_[i] = chosen;
        cols_[art * m_ + i] = 1.0;
        lower_[art] = upper_[art] = 0.0;
        state_[art] = VarState::kAtLower;
        x_[art] = 0.0;
      } else {
        cols_[art * m_ + i] = residual[i] >= 0.0 ? 1.0 : -1.0;
        lower_[art] = 0.0;
        upper_[art] = kInfinity;
        state_[art] = VarState::kBasic;
        x_[art] = std::fabs(residual[i]);
        head_[i] = art;
      }
    }
  }

  void refactorize_or_throw() {
    std::vector<double> basis(m_ * m_);
    for (std::size_t r = 0; r < m_; ++r) {
      auto col = column(head_[r]);
      std::copy(col.begin(), col.end(), basis.begin() + r * m_);
    }
    if (!factor_.refactorize(basis, m_)) {
      throw_error(ErrorCode::kNumericalBreakdown,
                  "basis matrix is numerically singular");
    }
  }

  // x_B := B^{-1} (b - N x_N)
  void compute_primal() {
    std::copy(b_.begin(), b_.end(), work_.begin());
    for (std::size_t j = 0; j < total_; ++j) {
      if (state_[j] != VarState::kBasic && x_[j] != 0.0) {
        simd::axpy(-x_[j], column(j), work_);
      }
    }
    factor_.ftran(work_);
    for (std::size_t r = 0; r < m_; ++r) x_[head_[r]] = work_[r];
  }

  double primal_residual() const {
    Vector res = b_;
    for (std::size_t j = 0; j < total_; ++j) {
      if (x_[j] != 0.0) simd::axpy(-x_[j], column(j), res);
    }
    return m_ == 0 ? 0.0 : simd::max_abs(res);
  }

  void refresh_primal() {
    compute_primal();
    if (primal_residual() <= kResidualDriftTol * b_scale_) return;
    if (factor_.num_updates() > 0) {
      refactorize_or_throw();
      compute_primal();
    }
    if (primal_residual() > kBreakdownResidual * b_scale_) {
      throw_error(ErrorCode::kNumericalBreakdown,
                  "primal residual drifted beyond recovery");
    }
  }

  void snap_to_bounds() {
    for (std::size_t r = 0; r < m_; ++r) {
      const std::size_t k = head_[r];
      const double lo = lower_[k];
      const double up = upper_[k];
      if (std::fabs(x_[k] - lo) <= 1e-12 * (1.0 + std::fabs(lo))) {
        x_[k] = lo;
      } else if (std::isfinite(up) &&
                 std::fabs(x_[k] - up) <= 1e-12 * (1.0 + std::fabs(up))) {
        x_[k] = up;
      }
    }
  }

  // The postcondition is checked in the caller's units, since scaled
  // variables can be far larger than the originals.
  void audit_primal(const Vector& x) const {
    Vector res = lp_.b_eq;
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i < m_; ++i) res[i] -= lp_.a_eq(i, j) * x[j];
    }
    const double scale = 1.0 + (m_ == 0 ? 0.0 : simd::max_abs(lp_.b_eq));
    if (m_ > 0 && simd::max_abs(res) > cfg_.eps_feas * scale) {
      throw_error(ErrorCode::kNumericalBreakdown,
                  "final primal residual exceeds feasibility tolerance");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      const double tol = cfg_.eps_feas * (1.0 + std::fabs(x[j]));
      if (x[j] < lp_.lower[j] - tol || x[j] > lp_.upper[j] + tol) {
        throw_error(ErrorCode::kNumericalBreakdown,
                    "final point violates bound of variable " +
                        std::to_string(j + 1));
      }
    }
  }

  // Runs pivots until no improving reduced cost remains. Returns false if an
  // unbounded improving ray was found.
  bool iterate(bool phase_one) {
    std::size_t degenerate_streak = 0;
    Vector y(m_);
    Vector w(m_);
    for (;;) {
      if (factor_.num_updates() >= kRefactorizationPeriod) {
        refactorize_or_throw();
      }
      refresh_primal();
      // Phase 1 is done once the artificials are at zero; pricing further
      // would only make degenerate pivots.
      if (phase_one) {
        double infeasibility = 0.0;
        for (std::size_t i = 0; i < m_; ++i) infeasibility += std::fabs(x_[n_ + i]);
        if (infeasibility <= cfg_.eps_feas * b_scale_) return true;
      }

      for (std::size_t r = 0; r < m_; ++r) y[r] = cost_[head_[r]];
      factor_.btran(y);

      const bool bland = cfg_.pivot_rule == PivotRule::kBland ||
                         degenerate_streak >= cfg_.degenerate_streak_threshold;
      std::size_t entering = total_;
      double best = 0.0;
      for (std::size_t j = 0; j < total_; ++j) {
        if (state_[j] == VarState::kBasic || is_fixed(j)) continue;
        const double d = cost_[j] - simd::dot(y, column(j));
        const bool improving =
            (state_[j] == VarState::kAtLower && d < -cfg_.eps_opt) ||
            (state_[j] == VarState::kAtUpper && d > cfg_.eps_opt);
        if (!improving) continue;
        if (bland) {
          entering = j;
          break;
        }
        if (std::fabs(d) > best) {
          best = std::fabs(d);
          entering = j;
        }
      }

      if (entering == total_) {
        // Re-price once on a fresh factorization before declaring optimality.
        if (factor_.num_updates() == 0) return true;
        refactorize_or_throw();
        continue;
      }

      if (iterations_ >= cfg_.max_iterations) {
        throw_error(ErrorCode::kIterationLimit,
                    "simplex iteration limit of " +
                        std::to_string(cfg_.max_iterations) + " reached");
      }
      ++iterations_;

      auto col = column(entering);
      std::copy(col.begin(), col.end(), w.begin());
      factor_.ftran(w);
      const double dir = state_[entering] == VarState::kAtLower ? 1.0 : -1.0;
      const double piv_tol =
          kPivotTol * std::max(1.0, m_ == 0 ? 0.0 : simd::max_abs(w));

      std::size_t leave_row = m_;
      double step = kInfinity;
      double leave_delta = 0.0;
      for (std::size_t r = 0; r < m_; ++r) {
        const double delta = -dir * w[r];
        const std::size_t k = head_[r];
        double ratio;
        if (delta < -piv_tol) {
          ratio = (x_[k] - lower_[k]) / (-delta);
        } else if (delta > piv_tol && std::isfinite(upper_[k])) {
          ratio = (upper_[k] - x_[k]) / delta;
        } else {
          continue;
        }
        ratio = std::max(ratio, 0.0);
        const bool tie = leave_row < m_ &&
                         std::fabs(ratio - step) <= 1e-12 * (1.0 + step);
        bool take = false;
        if (leave_row == m_ || (ratio < step && !tie)) {
          take = true;
        } else if (tie) {
          take = bland ? k < head_[leave_row]
                       : std::fabs(delta) > std::fabs(leave_delta);
        }
        if (take) {
          leave_row = r;
          step = ratio;
          leave_delta = delta;
        }
      }

      const double flip = upper_[entering] - lower_[entering];
      if (leave_row == m_ && !std::isfinite(flip)) {
        if (phase_one) {
          throw_error(ErrorCode::kNumericalBreakdown,
                      "phase 1 reported an unbounded direction");
        }
        return false;
      }

      if (leave_row == m_ || flip <= step) {
        // Bound flip: no basis change.
        if (state_[entering] == VarState::kAtLower) {
          state_[entering] = VarState::kAtUpper;
          x_[entering] = upper_[entering];
        } else {
          state_[entering] = VarState::kAtLower;
          x_[entering] = lower_[entering];
        }
        degenerate_streak = 0;
        continue;
      }

      const std::size_t leaving = head_[leave_row];
      if (leave_delta < 0.0 || !std::isfinite(upper_[leaving])) {
        state_[leaving] = VarState::kAtLower;
        x_[leaving] = lower_[leaving];
      } else {
        state_[leaving] = VarState::kAtUpper;
        x_[leaving] = upper_[leaving];
      }
      if (leaving >= n_) {
        // Artificials never re-enter once they leave.
        upper_[leaving] = 0.0;
        state_[leaving] = VarState::kAtLower;
        x_[leaving] = 0.0;
      }
      state_[entering] = VarState::kBasic;
      head_[leave_row] = entering;
      factor_.replace_column(leave_row, w);

      degenerate_streak = step <= kDegenerateStep ? degenerate_streak + 1 : 0;
    }
  }

  // After a feasible phase 1, pivot zero-valued artificials out of the basis
  // where some structural column has a usable entry in their row. Rows where
  // none does are redundant and keep their artificial pinned at zero.
  void drive_out_artificials() {
    Vector rho(m_);
    Vector w(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      if (head_[r] < n_) continue;
      std::fill(rho.begin(), rho.end(), 0.0);
      rho[r] = 1.0;
      factor_.btran(rho);
      std::size_t best_j = n_;
      double best = kDriveOutPivotTol;
      bool best_fixed = true;
      for (std::size_t j = 0; j < n_; ++j) {
        if (state_[j] == VarState::kBasic) continue;
        const double alpha = std::fabs(simd::dot(rho, column(j)));
        const bool fixed = is_fixed(j);
        // Prefer columns that can still move.
        const bool better = (best_fixed && !fixed && alpha > kDriveOutPivotTol) ||
                            (fixed == best_fixed && alpha > best);
        if (better) {
          best = alpha;
          best_j = j;
          best_fixed = fixed;
        }
      }
      if (best_j == n_) continue;
      auto col = column(best_j);
      std::copy(col.begin(), col.end(), w.begin());
      factor_.ftran(w);
      const std::size_t art = head_[r];
      state_[art] = VarState::kAtLower;
      x_[art] = 0.0;
      state_[best_j] = VarState::kBasic;
      head_[r] = best_j;
      factor_.replace_column(r, w);
      if (factor_.num_updates() >= kRefactorizationPeriod) {
        refactorize_or_throw();
      }
    }
    refactorize_or_throw();
  }

  BasisState basis_state() const {
    BasisState s;
    s.num_structural = n_;
    s.basic = head_;
    for (std::size_t j = 0; j < total_; ++j) {
      if (state_[j] == VarState::kAtLower) s.nonbasic_at_lower.push_back(j);
      if (state_[j] == VarState::kAtUpper) s.nonbasic_at_upper.push_back(j);
    }
    return s;
  }

  const BoundedLp& lp_;
  const SimplexConfig& cfg_;
  std::size_t m_;
  std::size_t n_;
  std::size_t total_;
  std::vector<double> cols_;  // column-major, artificials after structurals
  Vector b_;
  double b_scale_ = 1.0;
  Vector lower_;
  Vector upper_;
  Vector cost_;
  Vector objective_;  // minimization form, scaled
  Vector row_scale_;
  Vector col_scale_;
  std::vector<VarState> state_;
  std::vector<std::size_t> head_;
  Vector x_;
  Vector work_;
  BasisFactorization factor_;
  std::size_t iterations_ = 0;
  std::size_t phase1_iterations_ = 0;
};

}  // namespace

Phase1Result phase1(const BoundedLp& lp, const SimplexConfig& cfg) {
  lp.validate();
  cfg.validate();
  BoundedSimplex engine(lp, cfg);
  return engine.run_phase1();
}

SolveOutcome solve(const BoundedLp& lp, const SimplexConfig& cfg) {
  lp.validate();
  cfg.validate();
  BoundedSimplex engine(lp, cfg);
  const Phase1Result p1 = engine.run_phase1();
  if (!p1.feasible) {
    SolveOutcome out;
    out.status = SolveStatus::kInfeasible;
    out.iterations = p1.iterations;
    out.phase1_iterations = p1.iterations;
    return out;
  }
  return engine.run_phase2();
}

}  // namespace scs
