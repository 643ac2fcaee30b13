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

// Vector kernels behind the LU factorization, pricing and residual checks.
//
// Each kernel has a scalar reference in `generic` and, when the build and the
// CPU allow it, an AVX2 (x86-64) or NEON (aarch64) variant. The public entry
// points dispatch through a table chosen once at startup from the CPU
// features; tests can pin a backend with set_backend().
//
// axpy and max_abs are bit-identical across backends. dot reorders the
// summation and agrees with the reference to rounding.

#ifndef SCSOLVE_SIMD_KERNELS_H_
#define SCSOLVE_SIMD_KERNELS_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace scs::simd {

enum class Backend { kGeneric, kAvx2, kNeon };

std::string_view backend_name(Backend backend);

// Backends compiled in and supported by the running CPU. Always contains
// kGeneric.
std::vector<Backend> available_backends();

Backend active_backend();

// Returns false (and changes nothing) if the backend is unavailable.
bool set_backend(Backend backend);

double dot(std::span<const double> a, std::span<const double> b);

// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);

double max_abs(std::span<const double> x);

using DotFn = double (*)(const double*, const double*, std::size_t);
using AxpyFn = void (*)(double, const double*, double*, std::size_t);
using MaxAbsFn = double (*)(const double*, std::size_t);

namespace generic {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double max_abs(const double* x, std::size_t n);
}  // namespace generic

#if defined(SCSOLVE_ENABLE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double max_abs(const double* x, std::size_t n);
}  // namespace avx2
#endif

#if defined(SCSOLVE_ENABLE_NEON)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double max_abs(const double* x, std::size_t n);
}  // namespace neon
#endif

}  // namespace scs::simd

#endif  // SCSOLVE_SIMD_KERNELS_H_
