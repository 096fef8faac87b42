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

#include "sparsecut/simd/kernels.h"

namespace sparsecut::simd {

namespace {

void AddI64(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += src[i];
}

void SumI64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b,
            std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

bool IntervalsMeetI64(const std::int64_t* low, const std::int64_t* high,
                      const std::int64_t* lo, const std::int64_t* hi,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (low[i] > hi[i] || high[i] < lo[i]) return false;
  }
  return true;
}

void GemvF64(const double* mat, std::size_t rows, std::size_t cols,
             const double* w, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = mat + r * cols;
    double acc = 0.0;
    for (std::size_t c = 0; c < cols; ++c) acc += row[c] * w[c];
    out[r] = acc;
  }
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table{AddI64, SumI64, IntervalsMeetI64, GemvF64};
  return table;
}

}  // namespace sparsecut::simd
