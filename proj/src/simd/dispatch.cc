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

#include <atomic>

#include "sparsecut/errors.h"
#include "sparsecut/simd/kernels.h"

namespace sparsecut::simd {

namespace {

// -1 selects automatically; otherwise holds an Isa value.
std::atomic<int> forced_isa{-1};

Isa BestIsa() { return Avx2Kernels() != nullptr ? Isa::kAvx2 : Isa::kScalar; }

}  // namespace

std::string ToString(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

bool IsaSupported(Isa isa) {
  return isa == Isa::kScalar || Avx2Kernels() != nullptr;
}

Isa ActiveIsa() {
  const int f = forced_isa.load(std::memory_order_relaxed);
  return f < 0 ? BestIsa() : static_cast<Isa>(f);
}

void SetIsa(Isa isa) {
  if (!IsaSupported(isa)) {
    throw DomainError("instruction set " + ToString(isa) + " not available");
  }
  forced_isa.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void ResetIsa() { forced_isa.store(-1, std::memory_order_relaxed); }

const KernelTable& Kernels() {
  if (ActiveIsa() == Isa::kAvx2) return *Avx2Kernels();
  return ScalarKernels();
}

}  // namespace sparsecut::simd
