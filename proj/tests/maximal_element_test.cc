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

#include "fixtures.h"
#include "oracles.h"
#include "scsolve/error.h"
#include "scsolve/maximal_element.h"
#include "scsolve/strict_complementarity.h"

namespace scs {
namespace {

using testing::Generator;
using testing::polyhedron;

// Independent audit of a nonempty result: x_bar feasible, positive exactly
// on the reported support, and support recomputed from x_bar.
void audit_result(const EqualityPolyhedron& p, const MaximalResult& r) {
  ASSERT_FALSE(r.empty);
  ASSERT_TRUE(r.x_bar.has_value());
  const Vector& x = *r.x_bar;
  const Vector ax = p.a_eq.multiply(x);
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    EXPECT_LE(std::fabs(ax[i] - p.b_eq[i]), 1e-9 * (1 + inf_norm(p.b_eq)));
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    EXPECT_GE(x[j], -1e-9);
    if (r.support.contains(j + 1)) EXPECT_GT(x[j], kDefaultSupportTol);
  }
  EXPECT_EQ(support_of(x), r.support);
}

TEST(MaximalElementLp, ModelShape) {
  const EqualityPolyhedron p = polyhedron(1, 2, {1, 1}, {1});
  const BoundedLp lp = maximal_element_model(p);
  // (x1, w1, x2, w2) with bounded second block.
  ASSERT_EQ(lp.num_vars(), 6u);
  ASSERT_EQ(lp.num_rows(), 1u);
  EXPECT_EQ(lp.objective, (Vector{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(lp.upper[3], 1.0);
  EXPECT_EQ(lp.upper[5], 1.0);
  EXPECT_EQ(lp.upper[0], kInfinity);
  EXPECT_EQ(lp.upper[2], kInfinity);
  EXPECT_EQ(lp.b_eq, (Vector{0}));
}

TEST(MaximalElementLp, ExamplePrimalFace) {
  const OptimalFaces faces = build_optimal_faces(testing::example_lp(), 4.0);
  const MaximalResult r = maximal_element_lp(faces.primal_face);
  audit_result(faces.primal_face, r);
  // (x, u) stacked: x in 1..4, u in 5..9.
  EXPECT_EQ(r.support, Support({1, 2, 3, 4, 6, 7, 9}));
  ASSERT_TRUE(r.split.has_value());
  EXPECT_TRUE(audit_theorem31(*r.split, 1e-6));
  EXPECT_NEAR(r.w2_star, 1.0, 1e-6);
}

TEST(MaximalElementLp, InfeasiblePolyhedronIsEmpty) {
  const MaximalResult r = maximal_element_lp(polyhedron(1, 1, {1}, {-1}));
  EXPECT_TRUE(r.empty);
  EXPECT_LE(r.w2_star, 1e-6);
  EXPECT_FALSE(r.x_bar.has_value());
}

TEST(MaximalElementLp, Segment) {
  const EqualityPolyhedron p = polyhedron(1, 2, {1, 1}, {1});
  const MaximalResult r = maximal_element_lp(p);
  audit_result(p, r);
  EXPECT_EQ(r.support, Support({1, 2}));
  const MaximalResult it = maximal_support_iterative(p);
  EXPECT_EQ(it.support, Support({1, 2}));
}

TEST(MaximalSupportIterative, Segment) {
  const EqualityPolyhedron p = polyhedron(1, 2, {1, 1}, {1});
  const MaximalResult r = maximal_support_iterative(p);
  audit_result(p, r);
  EXPECT_EQ(r.support, Support({1, 2}));
  // The subproblem returns vertices here, so two iterates are needed where an
  // interior solution would have needed one.
  EXPECT_LE(r.lp_solves, 2u);
  EXPECT_FALSE(r.split.has_value());
}

TEST(MaximalSupportIterative, ForcedZero) {
  const EqualityPolyhedron p = polyhedron(2, 3, {1, 0, 0, 0, 1, 1}, {0, 1});
  const MaximalResult r = maximal_support_iterative(p);
  audit_result(p, r);
  EXPECT_EQ(r.support, Support({2, 3}));
  EXPECT_EQ(r.support.complement(3), Support({1}));
}

TEST(MaximalSupportIterative, InfeasibleIsEmpty) {
  EXPECT_TRUE(maximal_support_iterative(polyhedron(1, 1, {1}, {-1})).empty);
}

TEST(MaximalSupportIterative, UnboundedDirectionsCount) {
  // x1 - x2 = 0 is a ray; both coordinates are positive somewhere.
  const EqualityPolyhedron p = polyhedron(1, 2, {1, -1}, {0});
  EXPECT_EQ(maximal_support_iterative(p).support, Support({1, 2}));
  EXPECT_EQ(maximal_element_lp(p).support, Support({1, 2}));
}

TEST(AuditSplit, Dichotomy) {
  EXPECT_FALSE(audit_theorem31(SplitVariables{{0}, {0.5}, 0, 1}, 1e-6));
  EXPECT_TRUE(audit_theorem31(SplitVariables{{0, 0}, {0, 0}, 0, 0}, 1e-6));
  EXPECT_TRUE(audit_theorem31(SplitVariables{{3.5}, {1}, 2, 1}, 1e-6));
  EXPECT_FALSE(audit_theorem31(SplitVariables{{-1}, {1}, 0, 1}, 1e-6));
  EXPECT_FALSE(audit_theorem31(SplitVariables{{0}, {1}, 0, 0.3}, 1e-6));
}

TEST(MaximalElementLp, DualFaceSplitAudit) {
  const OptimalFaces faces = build_optimal_faces(testing::example_lp(), 4.0);
  const MaximalResult r = maximal_element_lp(faces.dual_face);
  audit_result(faces.dual_face, r);
  ASSERT_TRUE(r.split.has_value());
  EXPECT_TRUE(audit_theorem31(*r.split, 1e-6));
}

// Three-way agreement on random feasible polyhedra: single LP, iterative
// method, and exact enumeration of vertices and extreme rays.
TEST(MaximalElementLp, AgreesWithOraclesOnRandomPolyhedra) {
  Generator g(41);
  int nontrivial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto rp = testing::random_feasible_polyhedron(g, 6, 8);
    const EqualityPolyhedron p = rp.as_double();
    const auto exact = testing::brute_force_maximal_support(rp.a, rp.b, rp.q);
    ASSERT_TRUE(exact.has_value());
    const MaximalResult lp = maximal_element_lp(p);
    const MaximalResult it = maximal_support_iterative(p);
    audit_result(p, lp);
    audit_result(p, it);
    EXPECT_EQ(lp.support, *exact) << "trial " << trial;
    EXPECT_EQ(it.support, *exact) << "trial " << trial;
    ASSERT_TRUE(lp.split.has_value());
    EXPECT_TRUE(audit_theorem31(*lp.split, 1e-6));
    EXPECT_NEAR(lp.w2_star, 1.0, 1e-6);
    if (exact->size() < rp.q) ++nontrivial;
  }
  EXPECT_GT(nontrivial, 10);  // the corpus must contain forced zeros
}

// Fixing the coordinates outside the maximal support to zero must not
// change the support.
TEST(MaximalElementLp, Idempotent) {
  Generator g(42);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rp = testing::random_feasible_polyhedron(g, 5, 7);
    const EqualityPolyhedron p = rp.as_double();
    const MaximalResult first = maximal_element_lp(p);
    std::vector<double> a(p.a_eq.entries().begin(), p.a_eq.entries().end());
    Vector b = p.b_eq;
    const Support zeros = first.support.complement(p.num_vars());
    for (std::size_t j1 : zeros.indices()) {
      for (std::size_t j = 0; j < p.num_vars(); ++j) a.push_back(j + 1 == j1 ? 1 : 0);
      b.push_back(0);
    }
    const EqualityPolyhedron fixed{
        DenseMatrix(p.num_rows() + zeros.size(), p.num_vars(), a), b};
    EXPECT_EQ(maximal_element_lp(fixed).support, first.support);
  }
}

TEST(MaximalElementLp, EmptyVariableSet) {
  const EqualityPolyhedron zero_rows{DenseMatrix(0, 0, {}), {}};
  const MaximalResult r = maximal_support_iterative(zero_rows);
  EXPECT_FALSE(r.empty);
}

}  // namespace
}  // namespace scs
