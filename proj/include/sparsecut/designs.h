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

#ifndef SPARSECUT_DESIGNS_H_
#define SPARSECUT_DESIGNS_H_

#include <cstdint>
#include <vector>

namespace sparsecut {

using SetFamily = std::vector<std::vector<int>>;

// n families, each partitioning [0, n^2) into n sets of size n, with
// |A ∩ B| <= 1 across families. Element (x, y) of Z_n x Z_n is x * n + y.
struct AffineDesign {
  int n = 0;
  std::vector<SetFamily> families;
};

// Families 1..n: the vertical class x = b, then the lines y = s x + b for
// slopes s = 0..n-2. Throws DomainError unless n is prime.
AffineDesign MakeAffineDesign(int n);
bool VerifyAffineDesign(const AffineDesign& design);
bool IsPrime(int n);

// G^i_j = { g(u) : u_i = j } for the mixed-radix bijection g(u) =
// sum_i u_i n^i over [n]^n.
struct PlanesPartition {
  int n = 0;
  std::vector<SetFamily> families;  // families[i][j] sorted
};

inline constexpr std::int64_t kDefaultPlanesCap = 4096;

// Throws DomainError for n < 2, CapExceededError when n^n > cap.
PlanesPartition MakePlanesPartition(int n,
                                    std::int64_t cap = kDefaultPlanesCap);
bool VerifyPlanesPartition(const PlanesPartition& planes);

// Exhaustive check that whenever sub-families cover [n^n], some sub-family is
// the whole family. Feasible for n <= 3.
bool VerifyCompleteFamilyProperty(const PlanesPartition& planes);

}  // namespace sparsecut

#endif  // SPARSECUT_DESIGNS_H_
