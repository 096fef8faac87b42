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

#ifndef SPARSECUT_CONSTRUCTIONS_H_
#define SPARSECUT_CONSTRUCTIONS_H_

#include <string>

#include "sparsecut/instance.h"
#include "sparsecut/rational.h"

namespace sparsecut {

// A constructed instance with the partition its interaction graph is built
// from: columns for packing and general families, rows for `cover`.
struct TightInstance {
  Instance instance;
  BlockPartition partition;
};

// max x1 + x2 + x3 with pairwise sums at most 2 - (2/3) eps; 0 < eps <= 3/2.
TightInstance MakeTight3Cycle(const Rational& eps);

// max sum x with x_i + x_{delta+i} <= 2 - eps; partition {[delta], ...}.
TightInstance MakeTightStarSS(int delta, const Rational& eps);

// Star instance over an affine n-design with delta leaf variables.
TightInstance MakeTightTreeNS(int delta, int n);

// K blocks of n^2 binaries joined in a cycle through design families.
TightInstance MakeTightCycleNS(int k, int n);

// Set cover on the nonzero u in {0,1}^q; column v covers u iff v.u is odd.
TightInstance MakeSsc(int q);
// Two copies of the SSC columns; partition {x-block, y-block}.
TightInstance MakeDsc(int q);

// Two-stage covering instance over an affine design and a planes partition;
// row blocks are the K scenarios.
TightInstance MakeTightCover(int k, int n);

// 2K-1 binaries with one equality row; 0 < eps < (K-1)/K.
TightInstance MakeTightGeneralSS(int k, const Rational& eps);

// Extensional instance: x in {0,1}^K, and for each k the pair (x, y_k) lies
// in the hull of the points with y_k = 1 iff x is e_k or 1 - e_k.
TightInstance MakeTightGeneralNS(int k);

}  // namespace sparsecut

#endif  // SPARSECUT_CONSTRUCTIONS_H_
