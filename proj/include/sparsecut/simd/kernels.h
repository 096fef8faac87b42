// Copyright 2026 The sparsecut Authors
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

#ifndef SPARSECUT_SIMD_KERNELS_H_
#define SPARSECUT_SIMD_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <string>

// Dense inner loops shared by lattice enumeration and pricing. Each kernel
// has a scalar reference body and an AVX2 body; integer kernels must agree
// bit for bit, floating kernels up to summation order.
namespace sparsecut::simd {

enum class Isa { kScalar, kAvx2 };

std::string ToString(Isa isa);

struct KernelTable {
  // dst[i] += src[i]
  void (*add_i64)(std::int64_t* dst, const std::int64_t* src, std::size_t n);
  // dst[i] = a[i] + b[i]
  void (*sum_i64)(std::int64_t* dst, const std::int64_t* a,
                  const std::int64_t* b, std::size_t n);
  // All i: low[i] <= hi[i] and high[i] >= lo[i].
  bool (*intervals_meet_i64)(const std::int64_t* low, const std::int64_t* high,
                             const std::int64_t* lo, const std::int64_t* hi,
                             std::size_t n);
  // out[r] = sum_c mat[r * cols + c] * w[c]
  void (*gemv_f64)(const double* mat, std::size_t rows, std::size_t cols,
                   const double* w, double* out);
};

const KernelTable& ScalarKernels();
// Null when the build or the CPU lacks AVX2.
const KernelTable* Avx2Kernels();

bool IsaSupported(Isa isa);
Isa ActiveIsa();
// Forces a kernel family. Throws DomainError if unsupported on this CPU.
void SetIsa(Isa isa);
// Restores automatic selection.
void ResetIsa();

const KernelTable& Kernels();

}  // namespace sparsecut::simd

#endif  // SPARSECUT_SIMD_KERNELS_H_
