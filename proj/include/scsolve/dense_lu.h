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

#ifndef SCSOLVE_DENSE_LU_H_
#define SCSOLVE_DENSE_LU_H_

#include <cstddef>
#include <span>
#include <vector>

namespace scs {

// PA = LU with partial pivoting on a square dense matrix.
class DenseLu {
 public:
  // `columns` holds the matrix column-major (column k at [k*n, (k+1)*n)).
  // Returns false if a pivot falls below pivot_tol * max|entry|.
  bool factorize(std::span<const double> columns, std::size_t n,
                 double pivot_tol = 1e-11);

  std::size_t size() const { return n_; }

  // Overwrite rhs with B^{-1} rhs.
  void solve(std::span<double> rhs) const;
  // Overwrite rhs with B^{-T} rhs.
  void solve_transposed(std::span<double> rhs) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> lu_;  // row-major, unit L below the diagonal
  std::vector<std::size_t> perm_;
  mutable std::vector<double> work_;
};

// Basis inverse in product form: a fresh LU of B0 followed by eta matrices,
// one per column replacement since the last refactorization.
class BasisFactorization {
 public:
  bool refactorize(std::span<const double> columns, std::size_t n);

  // a := B^{-1} a
  void ftran(std::span<double> a) const;
  // c := B^{-T} c
  void btran(std::span<double> c) const;

  // Replace basis column `row` given w = B^{-1} a_entering.
  void replace_column(std::size_t row, std::span<const double> w);

  std::size_t num_updates() const { return etas_.size(); }

 private:
  struct Eta {
    std::size_t row;
    std::vector<double> w;
  };

  DenseLu lu_;
  std::vector<Eta> etas_;
};

}  // namespace scs

#endif  // SCSOLVE_DENSE_LU_H_
