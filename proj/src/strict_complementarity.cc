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

#include "scsolve/strict_complementarity.h"

#include <cmath>
#include <string>

#include "scsolve/error.h"
#include "scsolve/simd/kernels.h"

namespace scs {
namespace {

std::span<const double> slice(const Vector& v, std::size_t from,
                              std::size_t len) {
  return std::span<const double>(v).subspan(from, len);
}

Vector to_vector(std::span<const double> s) { return Vector(s.begin(), s.end()); }

void assert_verified(const CanonicalLp& lp, const ScsResult& r,
                     double tol) {
  const ScsVerification check = verify_scs_detailed(lp, r, tol);
  if (!check.ok()) {
    throw_error(ErrorCode::kInvariantViolation,
                "recovered pair is not strictly complementary (primal " +
                    std::to_string(check.primal_residual) + ", dual " +
                    std::to_string(check.dual_residual) + ", gap " +
                    std::to_string(check.gap) + ")");
  }
}

}  // namespace

std::string_view method_name(ScsMethod method) {
  switch (method) {
    case ScsMethod::kTwoPhase:
      return "two-phase";
    case ScsMethod::kSingleLp:
      return "single";
    case ScsMethod::kMaxMinDualFace:
      return "maxmin";
  }
  return "unknown";
}

OptimalValue optimal_value(const CanonicalLp& lp, const Options& opts) {
  lp.validate();
  const auto [primal, dual] = canonical_to_standard(lp);
  Vector objective(lp.n() + lp.m(), 0.0);
  std::copy(lp.c.begin(), lp.c.end(), objective.begin());
  const SolveOutcome out =
      solve(BoundedLp::over(primal, std::move(objective), Sense::kMaximize),
            opts.simplex);
  OptimalValue value;
  value.status = out.status;
  value.iterations = out.iterations;
  if (out.optimal()) value.z_star = out.objective_value;
  return value;
}

OptimalFaces build_optimal_faces(const CanonicalLp& lp, double z_star) {
  lp.validate();
  const std::size_t m = lp.m();
  const std::size_t n = lp.n();
  const auto [primal, dual] = canonical_to_standard(lp);

  std::vector<double> pa(primal.a_eq.entries().begin(),
                         primal.a_eq.entries().end());
  for (std::size_t j = 0; j < n + m; ++j) pa.push_back(j < n ? lp.c[j] : 0.0);
  Vector pb = lp.b;
  pb.push_back(z_star);

  std::vector<double> da(dual.a_eq.entries().begin(),
                         dual.a_eq.entries().end());
  for (std::size_t i = 0; i < m + n; ++i) da.push_back(i < m ? lp.b[i] : 0.0);
  Vector db = lp.c;
  db.push_back(z_star);

  return OptimalFaces{
      EqualityPolyhedron{DenseMatrix(m + 1, n + m, std::move(pa)),
                         std::move(pb)},
      EqualityPolyhedron{DenseMatrix(n + 1, m + n, std::move(da)),
                         std::move(db)},
      z_star};
}

EqualityPolyhedron build_primal_dual_face(const CanonicalLp& lp) {
  lp.validate();
  const std::size_t m = lp.m();
  const std::size_t n = lp.n();
  const std::size_t cols = 2 * (m + n);
  const std::size_t rows = m + n + 1;
  // Column blocks: x [0, n), u [n, n+m), y [n+m, n+2m), v [n+2m, 2n+2m).
  const std::size_t ux = n;
  const std::size_t yx = n + m;
  const std::size_t vx = n + 2 * m;
  std::vector<double> a(rows * cols, 0.0);
  Vector b(rows, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * cols + j] = lp.a(i, j);
    a[i * cols + ux + i] = 1.0;
    b[i] = lp.b[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t r = m + j;
    for (std::size_t i = 0; i < m; ++i) a[r * cols + yx + i] = lp.a(i, j);
    a[r * cols + vx + j] = -1.0;
    b[r] = lp.c[j];
  }
  const std::size_t last = m + n;
  for (std::size_t j = 0; j < n; ++j) a[last * cols + j] = lp.c[j];
  for (std::size_t i = 0; i < m; ++i) a[last * cols + yx + i] = 0.0 - lp.b[i];
  return EqualityPolyhedron{DenseMatrix(rows, cols, std::move(a)),
                            std::move(b)};
}

ScsRun scs_two_phase(const CanonicalLp& lp, double z_star,
                     const Options& opts) {
  const std::size_t m = lp.m();
  const std::size_t n = lp.n();
  const OptimalFaces faces = build_optimal_faces(lp, z_star);

  const MaximalResult primal = maximal_element_lp(faces.primal_face, opts);
  if (primal.empty) {
    throw_error(ErrorCode::kNoOptimalFace,
                "primal optimal face is empty for z* = " +
                    std::to_string(z_star));
  }
  const MaximalResult dual = maximal_element_lp(faces.dual_face, opts);
  if (dual.empty) {
    throw_error(ErrorCode::kNoOptimalFace,
                "dual optimal face is empty for z* = " +
                    std::to_string(z_star));
  }

  ScsRun run;
  ScsResult& r = run.result;
  r.x_bar = to_vector(slice(*primal.x_bar, 0, n));
  r.u_bar = to_vector(slice(*primal.x_bar, n, m));
  r.y_bar = to_vector(slice(*dual.x_bar, 0, m));
  r.v_bar = to_vector(slice(*dual.x_bar, m, n));
  r.z_star = z_star;
  r.simplex_iterations = primal.simplex_iterations + dual.simplex_iterations;
  r.partition =
      optimal_partition(r.x_bar, r.u_bar, r.y_bar, r.v_bar, opts.eps_supp);
  run.model_splits = {*primal.split, *dual.split};
  assert_verified(lp, r, opts.eps_supp);
  return run;
}

std::optional<ScsRun> scs_single(const CanonicalLp& lp, const Options& opts) {
  const std::size_t m = lp.m();
  const std::size_t n = lp.n();
  const MaximalResult pd = maximal_element_lp(build_primal_dual_face(lp), opts);
  if (pd.empty) return std::nullopt;

  ScsRun run;
  ScsResult& r = run.result;
  const Vector& z = *pd.x_bar;
  r.x_bar = to_vector(slice(z, 0, n));
  r.u_bar = to_vector(slice(z, n, m));
  r.y_bar = to_vector(slice(z, n + m, m));
  r.v_bar = to_vector(slice(z, n + 2 * m, n));
  r.z_star = simd::dot(lp.c, r.x_bar);
  r.simplex_iterations = pd.simplex_iterations;
  r.partition =
      optimal_partition(r.x_bar, r.u_bar, r.y_bar, r.v_bar, opts.eps_supp);
  run.model_splits = {*pd.split};
  assert_verified(lp, r, opts.eps_supp);
  return run;
}

MaxMinResult scs_maxmin_dual_face(const CanonicalLp& lp, double z_star,
                                  std::span<const double> x_bar,
                                  std::span<const double> u_bar,
                                  MaxMinReading reading,
                                  const Options& opts) {
  lp.validate();
  const std::size_t m = lp.m();
  const std::size_t n = lp.n();
  if (x_bar.size() != n || u_bar.size() != m) {
    throw_error(ErrorCode::kValidationError,
                "primal point dimensions do not match the problem");
  }
  const Support sx = support_of(x_bar, opts.eps_supp);
  const Support su = support_of(u_bar, opts.eps_supp);

  // Dual-face columns are (y, v) = [0, m + n); pushed-up entries in that
  // numbering.
  std::vector<std::size_t> pushed;
  const bool literal = reading == MaxMinReading::kLiteral;
  for (std::size_t i = 0; i < m; ++i) {
    if (su.contains(i + 1) == literal) pushed.push_back(i);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (sx.contains(j + 1) == literal) pushed.push_back(m + j);
  }

  const OptimalFaces faces = build_optimal_faces(lp, z_star);
  const EqualityPolyhedron& face = faces.dual_face;
  const std::size_t base = m + n;
  const std::size_t k = pushed.size();
  const std::size_t t_col = base;
  const std::size_t cols = base + 1 + k;
  const std::size_t rows = face.num_rows() + k;
  std::vector<double> a(rows * cols, 0.0);
  Vector b(rows, 0.0);
  for (std::size_t i = 0; i < face.num_rows(); ++i) {
    auto src = face.a_eq.row(i);
    std::copy(src.begin(), src.end(), a.begin() + i * cols);
    b[i] = face.b_eq[i];
  }
  // entry - t - surplus = 0
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t row = face.num_rows() + r;
    a[row * cols + pushed[r]] = 1.0;
    a[row * cols + t_col] = -1.0;
    a[row * cols + base + 1 + r] = -1.0;
  }
  Vector objective(cols, 0.0);
  objective[t_col] = 1.0;
  BoundedLp model{DenseMatrix(rows, cols, std::move(a)),
                  std::move(b),
                  std::move(objective),
                  Sense::kMaximize,
                  Vector(cols, 0.0),
                  Vector(cols, kInfinity)};

  MaxMinResult result;
  SolveOutcome out = solve(model, opts.simplex);
  result.iterations = out.iterations;
  if (out.status == SolveStatus::kUnbounded) {
    // Only the sign of t matters for the certificate.
    model.upper[t_col] = 1.0;
    out = solve(model, opts.simplex);
    result.iterations += out.iterations;
    result.capped = true;
  }
  if (out.status == SolveStatus::kInfeasible) {
    throw_error(ErrorCode::kNoOptimalFace, "dual optimal face is empty");
  }
  if (!out.optimal()) {
    throw_error(ErrorCode::kInvariantViolation,
                "capped max-min problem is unbounded");
  }
  const Vector& sol = *out.x;
  result.y = to_vector(slice(sol, 0, m));
  result.v = to_vector(slice(sol, m, n));
  result.t_star = sol[t_col];
  if (result.t_star <= opts.eps_supp) {
    throw_error(ErrorCode::kDegenerateCertificate,
                "max-min value t* = " + std::to_string(result.t_star) +
                    " admits no strictly positive dual completion");
  }
  return result;
}

ScsRun scs_maxmin(const CanonicalLp& lp, double z_star, MaxMinReading reading,
                  const Options& opts) {
  const std::size_t m = lp.m();
  const std::size_t n = lp.n();
  const OptimalFaces faces = build_optimal_faces(lp, z_star);
  const MaximalResult primal = maximal_element_lp(faces.primal_face, opts);
  if (primal.empty) {
    throw_error(ErrorCode::kNoOptimalFace,
                "primal optimal face is empty for z* = " +
                    std::to_string(z_star));
  }
  ScsRun run;
  ScsResult& r = run.result;
  r.x_bar = to_vector(slice(*primal.x_bar, 0, n));
  r.u_bar = to_vector(slice(*primal.x_bar, n, m));
  const MaxMinResult dual =
      scs_maxmin_dual_face(lp, z_star, r.x_bar, r.u_bar, reading, opts);
  r.y_bar = dual.y;
  r.v_bar = dual.v;
  r.z_star = z_star;
  r.simplex_iterations = primal.simplex_iterations + dual.iterations;
  r.partition =
      optimal_partition(r.x_bar, r.u_bar, r.y_bar, r.v_bar, opts.eps_supp);
  run.model_splits = {*primal.split};
  assert_verified(lp, r, opts.eps_supp);
  return run;
}

OptimalPartition optimal_partition(std::span<const double> x_bar,
                                   std::span<const double> u_bar,
                                   std::span<const double> y_bar,
                                   std::span<const double> v_bar, double tol) {
  if (x_bar.size() != v_bar.size() || u_bar.size() != y_bar.size()) {
    throw_error(ErrorCode::kValidationError,
                "complementary vectors differ in length");
  }
  OptimalPartition p{support_of(x_bar, tol), support_of(v_bar, tol),
                     support_of(u_bar, tol), support_of(y_bar, tol)};
  auto check = [](const Support& a, const Support& b, std::size_t count,
                  const char* what) {
    for (std::size_t k = 1; k <= count; ++k) {
      const bool in_a = a.contains(k);
      const bool in_b = b.contains(k);
      if (in_a == in_b) {
        throw_error(ErrorCode::kPartitionViolation,
                    std::string(what) + " index " + std::to_string(k) +
                        (in_a ? " is positive on both sides"
                              : " is positive on neither side"));
      }
    }
  };
  check(p.sigma_x, p.sigma_v, x_bar.size(), "primal variable");
  check(p.sigma_u, p.sigma_y, u_bar.size(), "constraint");
  return p;
}

ScsVerification verify_scs_detailed(const CanonicalLp& lp,
                                    const ScsResult& result, double tol) {
  ScsVerification v;
  const std::size_t m = lp.m();
  const std::size_t n = lp.n();
  if (result.x_bar.size() != n || result.v_bar.size() != n ||
      result.u_bar.size() != m || result.y_bar.size() != m) {
    return v;
  }
  auto nonnegative = [tol](const Vector& w) {
    for (double e : w) {
      if (!(e >= -tol)) return false;
    }
    return true;
  };

  // A x + u = b
  Vector ax = lp.a.multiply(result.x_bar);
  double pres = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    pres = std::max(pres, std::fabs(ax[i] + result.u_bar[i] - lp.b[i]));
  }
  v.primal_residual = pres;
  v.primal_feasible = pres <= tol * (1.0 + inf_norm(lp.b)) &&
                      nonnegative(result.x_bar) && nonnegative(result.u_bar);

  // A'y - v = c
  const DenseMatrix at = lp.a.transposed();
  Vector aty = at.multiply(result.y_bar);
  double dres = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    dres = std::max(dres, std::fabs(aty[j] - result.v_bar[j] - lp.c[j]));
  }
  v.dual_residual = dres;
  v.dual_feasible = dres <= tol * (1.0 + inf_norm(lp.c)) &&
                    nonnegative(result.y_bar) && nonnegative(result.v_bar);

  const double primal_obj = simd::dot(lp.c, result.x_bar);
  const double dual_obj = simd::dot(lp.b, result.y_bar);
  v.gap = std::fabs(primal_obj - dual_obj);
  const double scale = 1.0 + std::fabs(primal_obj);
  v.zero_gap = v.gap <= tol * scale;

  bool positive = true;
  for (std::size_t j = 0; j < n; ++j) {
    positive = positive && result.x_bar[j] + result.v_bar[j] > tol;
  }
  for (std::size_t i = 0; i < m; ++i) {
    positive = positive && result.y_bar[i] + result.u_bar[i] > tol;
  }
  v.strictly_positive = positive;

  const double csc = std::fabs(simd::dot(result.x_bar, result.v_bar)) +
                     std::fabs(simd::dot(result.y_bar, result.u_bar));
  v.complementary = csc <= tol * scale;
  return v;
}

bool verify_scs(const CanonicalLp& lp, const ScsResult& result, double tol) {
  return verify_scs_detailed(lp, result, tol).ok();
}

Support binding_primal(const OptimalPartition& partition, std::size_t m) {
  return partition.sigma_u.complement(m);
}

Support binding_dual(const OptimalPartition& partition, std::size_t n) {
  return partition.sigma_v.complement(n);
}

}  // namespace scs
