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

#include "scsolve/dense_lu.h"

#include <cassert>
#include <cmath>
#include <utility>

#include "scsolve/simd/kernels.h"

namespace scs {

bool DenseLu::factorize(std::span<const double> columns, std::size_t n,
                        double pivot_tol) {
  assert(columns.size() == n * n);
  n_ = n;
  lu_.assign(n * n, 0.0);
  perm_.resize(n);
  work_.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    perm_[i] = i;
    for (std::size_t j = 0; j < n; ++j) lu_[i * n + j] = columns[j * n + i];
  }
  const double scale = n == 0 ? 0.0 : simd::max_abs(lu_);
  const double threshold = pivot_tol * (scale > 0.0 ? scale : 1.0);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::fabs(lu_[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::fabs(lu_[i * n + k]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= threshold) return false;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(lu_[k * n + j], lu_[piv * n + j]);
      }
      std::swap(perm_[k], perm_[piv]);
    }
    const double pivot = lu_[k * n + k];
    std::span<const double> pivot_tail(lu_.data() + k * n + k + 1, n - k - 1);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = lu_[i * n + k] / pivot;
      lu_[i * n + k] = l;
      if (l != 0.0) {
        simd::axpy(-l, pivot_tail,
                   std::span<double>(lu_.data() + i * n + k + 1, n - k - 1));
      }
    }
  }
  return true;
}

void DenseLu::solve(std::span<double> rhs) const {
  const std::size_t n = n_;
  for (std::size_t i = 0; i < n; ++i) work_[i] = rhs[perm_[i]];
  // L z = P b, forward.
  for (std::size_t i = 1; i < n; ++i) {
    work_[i] -= simd::dot(std::span<const double>(lu_.data() + i * n, i),
                          std::span<const double>(work_.data(), i));
  }
  // U x = z, backward.
  for (std::size_t ii = n; ii-- > 0;) {
    const std::size_t len = n - ii - 1;
    const double s =
        simd::dot(std::span<const double>(lu_.data() + ii * n + ii + 1, len),
                  std::span<const double>(work_.data() + ii + 1, len));
    work_[ii] = (work_[ii] - s) / lu_[ii * n + ii];
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] = work_[i];
}

void DenseLu::solve_transposed(std::span<double> rhs) const {
  // B' = U' L' P, so B^{-T} c = P' L^{-T} U^{-T} c.
  const std::size_t n = n_;
  for (std::size_t i = 0; i < n; ++i) work_[i] = rhs[i];
  for (std::size_t k = 0; k < n; ++k) {
    work_[k] /= lu_[k * n + k];
    const std::size_t len = n - k - 1;
    if (len > 0 && work_[k] != 0.0) {
      simd::axpy(-work_[k],
                 std::span<const double>(lu_.data() + k * n + k + 1, len),
                 std::span<double>(work_.data() + k + 1, len));
    }
  }
  for (std::size_t k = n; k-- > 1;) {
    if (work_[k] != 0.0) {
      simd::axpy(-work_[k], std::span<const double>(lu_.data() + k * n, k),
                 std::span<double>(work_.data(), k));
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[perm_[i]] = work_[i];
}

bool BasisFactorization::refactorize(std::span<const double> columns,
                                     std::size_t n) {
  etas_.clear();
  return lu_.factorize(columns, n);
}

void BasisFactorization::ftran(std::span<double> a) const {
  lu_.solve(a);
  for (const Eta& eta : etas_) {
    const double t = a[eta.row] / eta.w[eta.row];
    if (t != 0.0) simd::axpy(-t, eta.w, a);
    a[eta.row] = t;
  }
}

void BasisFactorization::btran(std::span<double> c) const {
  for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
    const std::size_t r = it->row;
    const double wr = it->w[r];
    const double off = simd::dot(it->w, c) - wr * c[r];
    c[r] = (c[r] - off) / wr;
  }
  lu_.solve_transposed(c);
}

void BasisFactorization::replace_column(std::size_t row,
                                        std::span<const double> w) {
  etas_.push_back(Eta{row, std::vector<double>(w.begin(), w.end())});
}

}  // namespace scs
