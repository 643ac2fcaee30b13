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

#include <atomic>
#include <cassert>

#include "scsolve/simd/kernels.h"

namespace scs::simd {
namespace {

struct KernelTable {
  Backend backend;
  DotFn dot;
  AxpyFn axpy;
  MaxAbsFn max_abs;
};

constexpr KernelTable kGenericTable{Backend::kGeneric, generic::dot,
                                    generic::axpy, generic::max_abs};
#if defined(SCSOLVE_ENABLE_AVX2)
constexpr KernelTable kAvx2Table{Backend::kAvx2, avx2::dot, avx2::axpy,
                                 avx2::max_abs};
#endif
#if defined(SCSOLVE_ENABLE_NEON)
constexpr KernelTable kNeonTable{Backend::kNeon, neon::dot, neon::axpy,
                                 neon::max_abs};
#endif

bool cpu_supports_avx2() {
#if defined(SCSOLVE_ENABLE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* table_for(Backend backend) {
  switch (backend) {
    case Backend::kGeneric:
      return &kGenericTable;
    case Backend::kAvx2:
#if defined(SCSOLVE_ENABLE_AVX2)
      if (cpu_supports_avx2()) return &kAvx2Table;
#endif
      return nullptr;
    case Backend::kNeon:
#if defined(SCSOLVE_ENABLE_NEON)
      return &kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* select_default() {
  if (const KernelTable* t = table_for(Backend::kAvx2)) return t;
  if (const KernelTable* t = table_for(Backend::kNeon)) return t;
  return &kGenericTable;
}

std::atomic<const KernelTable*>& active() {
  static std::atomic<const KernelTable*> table{select_default()};
  return table;
}

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::kGeneric:
      return "generic";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::kGeneric, Backend::kAvx2, Backend::kNeon}) {
    if (table_for(b) != nullptr) out.push_back(b);
  }
  return out;
}

Backend active_backend() { return active().load()->backend; }

bool set_backend(Backend backend) {
  const KernelTable* t = table_for(backend);
  if (t == nullptr) return false;
  active().store(t);
  return true;
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().load(std::memory_order_relaxed)->dot(a.data(), b.data(),
                                                       a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  active().load(std::memory_order_relaxed)->axpy(alpha, x.data(), y.data(),
                                                 x.size());
}

double max_abs(std::span<const double> x) {
  return active().load(std::memory_order_relaxed)->max_abs(x.data(), x.size());
}

}  // namespace scs::simd
