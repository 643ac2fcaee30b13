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

#include <cmath>
#include <random>

#include "fixtures.h"
#include "oracles.h"
#include "scsolve/core_model.h"
#include "scsolve/error.h"

namespace scs {
namespace {

using testing::Generator;
using testing::Q;
using testing::QVector;

TEST(DenseMatrix, RejectsBadShapeAndNonFinite) {
  EXPECT_THROW(DenseMatrix(2, 2, {1, 2, 3}), Error);
  EXPECT_THROW(DenseMatrix(1, 2, {1, kInfinity}), Error);
  EXPECT_THROW(DenseMatrix(1, 1, {std::nan("")}), Error);
  const DenseMatrix id = DenseMatrix::identity(3);
  EXPECT_EQ(id(1, 1), 1.0);
  EXPECT_EQ(id(1, 2), 0.0);
}

TEST(DenseMatrix, MultiplyAndTranspose) {
  const DenseMatrix a(2, 3, {1, 2, 3, 4, 5, 6});
  EXPECT_EQ(a.multiply(std::vector<double>{1, 0, -1}), (Vector{-2, -2}));
  const DenseMatrix t = a.transposed();
  ASSERT_EQ(t.rows(), 3u);
  EXPECT_EQ(t(2, 1), 6.0);
  EXPECT_EQ(t.transposed(), a);
}

TEST(CanonicalLp, ValidateCatchesDimensionMismatch) {
  CanonicalLp lp = testing::example_lp();
  EXPECT_NO_THROW(lp.validate());
  lp.b.pop_back();
  EXPECT_THROW(lp.validate(), Error);
}

TEST(CanonicalToStandard, ExampleRowOne) {
  const auto [primal, dual] = canonical_to_standard(testing::example_lp());
  ASSERT_EQ(primal.num_rows(), 5u);
  ASSERT_EQ(primal.num_vars(), 9u);
  const std::vector<double> row1(primal.a_eq.row(0).begin(),
                                 primal.a_eq.row(0).end());
  EXPECT_EQ(row1, (std::vector<double>{-1, 1, -2, 1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(primal.b_eq[0], 1.0);
  ASSERT_EQ(dual.num_rows(), 4u);
  ASSERT_EQ(dual.num_vars(), 9u);
  EXPECT_EQ(dual.b_eq, (Vector{-4, 4, -8, 4}));
}

TEST(CanonicalToStandard, ZeroData) {
  const CanonicalLp lp{DenseMatrix(1, 1, {0}), {0}, {0}};
  const auto [primal, dual] = canonical_to_standard(lp);
  EXPECT_EQ(primal.a_eq, DenseMatrix(1, 2, {0, 1}));
  EXPECT_EQ(primal.b_eq, (Vector{0}));
  EXPECT_EQ(dual.a_eq, DenseMatrix(1, 2, {0, -1}));
  EXPECT_EQ(dual.b_eq, (Vector{0}));
}

TEST(CanonicalToStandard, RandomMatchesBlockAssembly) {
  Generator g(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = g.size(1, 5), n = g.size(1, 5);
    const auto a = g.matrix(m, n, -5, 5);
    const CanonicalLp lp = testing::make_canonical(a, g.vector(m, -5, 5),
                                                   g.vector(n, -5, 5));
    const auto [primal, dual] = canonical_to_standard(lp);
    // [A | I] and [A^T | -I] assembled entry by entry.
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n + m; ++j) {
        const double want = j < n ? a[i][j].get_d() : (j - n == i ? 1.0 : 0.0);
        ASSERT_EQ(primal.a_eq(i, j), want);
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < m + n; ++k) {
        const double want = k < m ? a[k][j].get_d() : (k - m == j ? -1.0 : 0.0);
        ASSERT_EQ(dual.a_eq(j, k), want);
      }
    }
    // Dropping the slack block gives A back bit for bit.
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(primal.a_eq(i, j), lp.a(i, j));
    }
  }
}

TEST(Homogenize, PrimalOptimalFaceOfExample) {
  const auto [primal, dual] = canonical_to_standard(testing::example_lp());
  // Append the objective row c x = z*.
  std::vector<double> e(primal.a_eq.entries().begin(), primal.a_eq.entries().end());
  for (double v : {-4.0, 4.0, -8.0, 4.0, 0.0, 0.0, 0.0, 0.0, 0.0}) e.push_back(v);
  Vector b = primal.b_eq;
  b.push_back(4);
  const EqualityPolyhedron face{DenseMatrix(6, 9, e), b};
  const DenseMatrix h = homogenize(face);
  ASSERT_EQ(h.rows(), 6u);
  ASSERT_EQ(h.cols(), 10u);
  Vector last;
  for (std::size_t i = 0; i < 6; ++i) last.push_back(h(i, 9));
  EXPECT_EQ(last, (Vector{-1, 0, -2, -1, -7, -4}));
}

TEST(Homogenize, ZeroRightHandSide) {
  const EqualityPolyhedron p{DenseMatrix::identity(2), {0, 0}};
  EXPECT_EQ(homogenize(p), DenseMatrix(2, 3, {1, 0, 0, 0, 1, 0}));
}

TEST(Homogenize, RandomEntrywise) {
  Generator g(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = testing::random_feasible_polyhedron(g, 5, 6);
    const EqualityPolyhedron p = r.as_double();
    const DenseMatrix h = homogenize(p);
    ASSERT_EQ(h.cols(), p.num_vars() + 1);
    for (std::size_t i = 0; i < p.num_rows(); ++i) {
      for (std::size_t j = 0; j < p.num_vars(); ++j) ASSERT_EQ(h(i, j), p.a_eq(i, j));
      ASSERT_EQ(h(i, p.num_vars()), -p.b_eq[i]);
    }
  }
}

TEST(SupportOf, Examples) {
  EXPECT_EQ(support_of(std::vector<double>{2.667, 1.667, 1, 4}, 1e-6),
            Support({1, 2, 3, 4}));
  EXPECT_TRUE(support_of(std::vector<double>{0, 0, 0}, 1e-6).empty());
  EXPECT_EQ(support_of(std::vector<double>{1e-9, 0.5}, 1e-6), Support({2}));
}

TEST(SupportOf, MonotoneInTolerance) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1e-3, 1e-3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(8);
    for (double& v : x) v = u(rng);
    const double t1 = std::abs(u(rng)), t2 = t1 + std::abs(u(rng));
    EXPECT_TRUE(support_of(x, t2).is_subset_of(support_of(x, t1)));
  }
}

TEST(Support, SetOperations) {
  const Support s({3, 1, 3});
  EXPECT_EQ(s.indices(), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(s.complement(4), Support({2, 4}));
  EXPECT_EQ(s.united(Support({2})), Support({1, 2, 3}));
  EXPECT_THROW(Support({0}), Error);
}

// Support of a strict convex combination of nonnegative vectors is the
// union of their supports. Exact rationals, so no tolerance is involved.
TEST(SupportOf, ConvexCombinationIsUnionExact) {
  Generator g(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = g.size(1, 8);
    QVector x1(n), x2(n);
    for (std::size_t j = 0; j < n; ++j) {
      x1[j] = g.integer(0, 1) ? Q(g.integer(1, 9), g.integer(1, 9)) : Q(0);
      x2[j] = g.integer(0, 1) ? Q(g.integer(1, 9), g.integer(1, 9)) : Q(0);
    }
    const Q lambda(g.integer(1, 99), 100);
    QVector mix(n);
    for (std::size_t j = 0; j < n; ++j) {
      mix[j] = lambda * x1[j] + (1 - lambda) * x2[j];
    }
    const Support s1(testing::positive_indices(x1));
    const Support s2(testing::positive_indices(x2));
    EXPECT_EQ(Support(testing::positive_indices(mix)), s1.united(s2));
  }
}

TEST(IsFeasible, ScaledResidual) {
  const EqualityPolyhedron p{DenseMatrix(1, 2, {1, 1}), {1}};
  EXPECT_TRUE(is_feasible(p, std::vector<double>{0.5, 0.5}));
  EXPECT_FALSE(is_feasible(p, std::vector<double>{0.5, 0.6}));
  EXPECT_FALSE(is_feasible(p, std::vector<double>{1.5, -0.5}));
}

}  // namespace
}  // namespace scs
