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

#if defined(SPARSECUT_HAVE_AVX2) && defined(__AVX2__)
#include <immintrin.h>
#endif

namespace sparsecut::simd {

#if defined(SPARSECUT_HAVE_AVX2) && defined(__AVX2__)

namespace {

void AddI64(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_add_epi64(d, s));
  }
  for (; i < n; ++i) dst[i] += src[i];
}

void SumI64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b,
            std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_add_epi64(x, y));
  }
  for (; i < n; ++i) dst[i] = a[i] + b[i];
}

bool IntervalsMeetI64(const std::int64_t* low, const std::int64_t* high,
                      const std::int64_t* lo, const std::int64_t* hi,
                      std::size_t n) {
  std::size_t i = 0;
  __m256i bad = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    __m256i l = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(low + i));
    __m256i h = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(high + i));
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi + i));
    bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(l, b));
    bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(a, h));
    if (!_mm256_testz_si256(bad, bad)) return false;
  }
  for (; i < n; ++i) {
    if (low[i] > hi[i] || high[i] < lo[i]) return false;
  }
  return true;
}

void GemvF64(const double* mat, std::size_t rows, std::size_t cols,
             const double* w, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = mat + r * cols;
    __m256d acc = _mm256_setzero_pd();
    std::size_t c = 0;
    for (; c + 4 <= cols; c += 4) {
      acc = _mm256_add_pd(
          acc, _mm256_mul_pd(_mm256_loadu_pd(row + c), _mm256_loadu_pd(w + c)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; c < cols; ++c) total += row[c] * w[c];
    out[r] = total;
  }
}

}  // namespace

const KernelTable* Avx2Kernels() {
  static const KernelTable table{AddI64, SumI64, IntervalsMeetI64, GemvF64};
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  return &table;
}

#else

const KernelTable* Avx2Kernels() { return nullptr; }

#endif

}  // namespace sparsecut::simd
