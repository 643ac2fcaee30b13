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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "fixtures.h"
#include "oracles.h"
#include "scsolve/error.h"
#include "scsolve/simplex.h"

namespace scs {
namespace {

using testing::Generator;
using testing::Q;
using testing::QBox;
using testing::QMatrix;
using testing::QVector;
using testing::RandomBoxLp;
using testing::random_box_lp;
using testing::to_bounded;

// Recomputes feasibility and reduced costs from the returned basis, in
// exact arithmetic, without touching solver state.
void audit_optimal(const RandomBoxLp& r, const BoundedLp& lp, const SolveOutcome& out) {
  ASSERT_TRUE(out.x.has_value());
  ASSERT_TRUE(out.basis.has_value());
  const Vector& x = *out.x;
  const std::size_t m = lp.num_rows(), n = lp.num_vars();
  const Vector ax = lp.a_eq.multiply(x);
  for (std::size_t i = 0; i < m; ++i) {
    EXPECT_LE(std::fabs(ax[i] - lp.b_eq[i]), 1e-9 * (1 + inf_norm(lp.b_eq)));
  }
  for (std::size_t j = 0; j < n; ++j) {
    EXPECT_GE(x[j], lp.lower[j] - 1e-9);
    EXPECT_LE(x[j], lp.upper[j] + 1e-9);
  }
  const BasisState& bs = *out.basis;
  ASSERT_EQ(bs.basic.size(), m);
  // Structurals and artificials together, each exactly once.
  std::vector<int> seen(n + m, 0);
  for (const auto* set : {&bs.basic, &bs.nonbasic_at_lower, &bs.nonbasic_at_upper}) {
    for (std::size_t j : *set) ++seen[j];
  }
  EXPECT_EQ(std::count(seen.begin(), seen.end(), 1), static_cast<long>(n + m));
  // Exact at bounds, bit for bit.
  for (std::size_t j : bs.nonbasic_at_upper) {
    ASSERT_LT(j, n);
    EXPECT_EQ(std::memcmp(&x[j], &lp.upper[j], sizeof(double)), 0);
  }
  for (std::size_t j : bs.nonbasic_at_lower) {
    if (j >= n) continue;
    EXPECT_EQ(std::memcmp(&x[j], &lp.lower[j], sizeof(double)), 0);
  }
  // B^T y = c_B; artificial columns are unit vectors with zero cost.
  QMatrix bt(m, QVector(m));
  QVector cb(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t j = bs.basic[k];
    for (std::size_t i = 0; i < m; ++i) {
      bt[k][i] = j < n ? r.box.a[i][j] : Q(i == j - n ? 1 : 0);
    }
    cb[k] = j < n ? r.objective[j] : Q(0);
  }
  const auto y = testing::solve_unique(bt, cb);
  ASSERT_TRUE(y.has_value()) << "singular basis";
  const Q sign = r.sense == Sense::kMaximize ? 1 : -1;
  auto reduced = [&](std::size_t j) {
    Q d = r.objective[j];
    for (std::size_t i = 0; i < m; ++i) d -= (*y)[i] * r.box.a[i][j];
    return Q(sign * d).get_d();
  };
  for (std::size_t j : bs.nonbasic_at_lower) {
    if (j < n && lp.lower[j] < lp.upper[j]) EXPECT_LE(reduced(j), 1e-9) << "j=" << j;
  }
  for (std::size_t j : bs.nonbasic_at_upper) EXPECT_GE(reduced(j), -1e-9) << "j=" << j;
}

TEST(Simplex, ExampleObjectiveIsFour) {
  const auto [primal, dual] = canonical_to_standard(testing::example_lp());
  Vector obj{-4, 4, -8, 4, 0, 0, 0, 0, 0};
  const SolveOutcome out = solve(BoundedLp::over(primal, obj, Sense::kMaximize));
  ASSERT_TRUE(out.optimal());
  EXPECT_NEAR(*out.objective_value, 4.0, 1e-9);
}

TEST(Simplex, ForcedSinglePoint) {
  BoundedLp lp{DenseMatrix(1, 1, {1}), {1}, {0}, Sense::kMaximize, {0}, {2}};
  const SolveOutcome out = solve(lp);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(*out.objective_value, 0.0);
  EXPECT_EQ((*out.x)[0], 1.0);
}

TEST(Simplex, UnboundedRay) {
  BoundedLp lp{DenseMatrix(1, 2, {-1, 1}), {1}, {1, 0}, Sense::kMaximize,
               {0, 0}, {kInfinity, kInfinity}};
  const SolveOutcome out = solve(lp);
  EXPECT_EQ(out.status, SolveStatus::kUnbounded);
  EXPECT_FALSE(out.x.has_value());
}

TEST(Simplex, BoundFlipWithoutBasisChange) {
  // max x1 + x2 s.t. x1 - x2 + s = 0.5 with 0 <= x <= 1, s >= 0: optimum at
  // the upper corner, reached by flipping bounds.
  BoundedLp lp{DenseMatrix(1, 3, {1, -1, 1}), {0.5}, {1, 1, 0},
               Sense::kMaximize, {0, 0, 0}, {1, 1, kInfinity}};
  const SolveOutcome out = solve(lp);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(*out.objective_value, 2.0);
  EXPECT_EQ((*out.x)[2], 0.5);
}

BoundedLp cycling_prone_lp() {
  // A classic instance on which textbook Dantzig pricing cycles.
  const DenseMatrix a(3, 7, {1, 0, 0, 0.25, -60, -0.04, 9,  //
                             0, 1, 0, 0.5, -90, -0.02, 3,   //
                             0, 0, 1, 0, 0, 1, 0});
  Vector obj{0, 0, 0, -0.75, 150, -0.02, 6};
  return BoundedLp::over(EqualityPolyhedron{a, {0, 0, 1}}, obj, Sense::kMinimize);
}

TEST(Simplex, IterationLimitIsAnError) {
  // The slack basis is the crash basis; the optimum has x4 and x6 basic.
  SimplexConfig cfg;
  cfg.max_iterations = 1;
  try {
    solve(cycling_prone_lp(), cfg);
    FAIL() << "expected IterationLimit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIterationLimit);
  }
}

TEST(Simplex, CyclingProneExampleTerminates) {
  for (PivotRule rule : {PivotRule::kDantzigWithBlandFallback, PivotRule::kBland}) {
    SimplexConfig cfg;
    cfg.pivot_rule = rule;
    cfg.degenerate_streak_threshold = 3;
    const SolveOutcome out = solve(cycling_prone_lp(), cfg);
    ASSERT_TRUE(out.optimal());
    EXPECT_NEAR(*out.objective_value, -0.05, 1e-12);
  }
}

TEST(Simplex, KleeMintyCube) {
  // max sum 2^(n-j) x_j s.t. sum_{j<i} 2^(i-j+1) x_j + x_i <= 5^i.
  const std::size_t n = 7;
  std::vector<double> a(n * 2 * n, 0.0);
  Vector b(n), obj(2 * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) a[i * 2 * n + j] = std::ldexp(1.0, static_cast<int>(i - j + 1));
    a[i * 2 * n + i] = 1.0;
    a[i * 2 * n + n + i] = 1.0;
    b[i] = std::pow(5.0, static_cast<double>(i + 1));
    obj[i] = std::ldexp(1.0, static_cast<int>(n - i - 1));
  }
  const BoundedLp lp = BoundedLp::over(
      EqualityPolyhedron{DenseMatrix(n, 2 * n, a), b}, obj, Sense::kMaximize);
  for (PivotRule rule : {PivotRule::kDantzigWithBlandFallback, PivotRule::kBland}) {
    SimplexConfig cfg;
    cfg.pivot_rule = rule;
    const SolveOutcome out = solve(lp, cfg);
    ASSERT_TRUE(out.optimal());
    EXPECT_EQ(*out.objective_value, std::pow(5.0, 7.0));
  }
}

TEST(Simplex, ConfigValidation) {
  SimplexConfig cfg;
  cfg.eps_feas = 0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.max_iterations = 0;
  EXPECT_THROW(cfg.validate(), Error);
  BoundedLp lp{DenseMatrix(1, 1, {1}), {1}, {0}, Sense::kMaximize, {1}, {0}};
  EXPECT_THROW(solve(lp), Error);  // lower > upper
}

TEST(Phase1, OriginFeasible) {
  BoundedLp lp{DenseMatrix(2, 3, {1, 2, 3, -1, 0, 4}), {0, 0}, {1, 1, 1},
               Sense::kMaximize, {0, 0, 0}, {kInfinity, kInfinity, kInfinity}};
  const Phase1Result r = phase1(lp);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_EQ(r.infeasibility, 0.0);
}

TEST(Phase1, SignContradiction) {
  BoundedLp lp{DenseMatrix(1, 1, {1}), {-1}, {0}, Sense::kMaximize, {0}, {kInfinity}};
  const Phase1Result r = phase1(lp);
  EXPECT_FALSE(r.feasible);
  EXPECT_GT(r.infeasibility, 0.5);
  EXPECT_EQ(solve(lp).status, SolveStatus::kInfeasible);
}

TEST(Phase1, ExampleSlackBasis) {
  const auto [primal, dual] = canonical_to_standard(testing::example_lp());
  const Phase1Result r = phase1(BoundedLp::over(primal, Vector(9, 0.0), Sense::kMaximize));
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.infeasibility, 0.0);
}

TEST(Simplex, RedundantRowsKeepArtificialAtZero) {
  // Second row duplicates the first.
  BoundedLp lp{DenseMatrix(2, 2, {1, 1, 2, 2}), {1, 2}, {1, 2}, Sense::kMaximize,
               {0, 0}, {kInfinity, kInfinity}};
  const SolveOutcome out = solve(lp);
  ASSERT_TRUE(out.optimal());
  EXPECT_NEAR(*out.objective_value, 2.0, 1e-12);
}

class RandomCorpus : public ::testing::TestWithParam<PivotRule> {};

// Exhaustive-enumeration oracle over finite boxes, plus a second corpus with
// some unbounded coordinates to exercise the Unbounded classification.
TEST_P(RandomCorpus, MatchesBruteForce) {
  SimplexConfig cfg;
  cfg.pivot_rule = GetParam();
  Generator g(31);
  int counts[3] = {0, 0, 0};
  for (int trial = 0; trial < 120; ++trial) {
    const bool finite = trial < 60;
    const RandomBoxLp r = random_box_lp(g, finite);
    const BoundedLp lp = to_bounded(r.box, r.objective, r.sense);
    const testing::OracleOutcome want = testing::brute_force_lp(r.box, r.objective, r.sense);
    const SolveOutcome got = solve(lp, cfg);
    ASSERT_EQ(got.status, want.status) << "trial " << trial;
    ++counts[static_cast<int>(got.status)];
    if (got.optimal()) {
      EXPECT_NEAR(*got.objective_value, want.objective.get_d(), 1e-6) << "trial " << trial;
      audit_optimal(r, lp, got);
    }
  }
  // The corpus must actually exercise every outcome.
  EXPECT_GT(counts[0], 10);
  EXPECT_GT(counts[1], 5);
  EXPECT_GT(counts[2], 2);
}

INSTANTIATE_TEST_SUITE_P(Pricing, RandomCorpus,
                         ::testing::Values(PivotRule::kDantzigWithBlandFallback,
                                           PivotRule::kBland));

}  // namespace
}  // namespace scs
