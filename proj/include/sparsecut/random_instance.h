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

#ifndef SPARSECUT_RANDOM_INSTANCE_H_
#define SPARSECUT_RANDOM_INSTANCE_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sparsecut/instance.h"

namespace sparsecut {

// Reproducible streams: substream (tag, a, b) of seed s is a std::mt19937_64
// seeded with SplitMix64(s ^ SplitMix64(tag << 48 ^ a << 24 ^ b)). Bounded
// integers use rejection sampling on raw 64-bit outputs, so values do not
// depend on the standard library's distribution implementations.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t tag, std::uint64_t a = 0,
            std::uint64_t b = 0);

  std::uint64_t Next() { return engine_(); }
  // Uniform on [lo, hi].
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);
  // Uniform on [0, 1) with 53 bits.
  double UniformReal();

 private:
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

struct GenParams {
  int nv = 3;
  double p = 0.5;  // edge probability; unused for two-stage stars
  int sqr = 3;
  int M = 10;
  int M_eps = 10;
  int ObjM = 10;
  std::uint64_t seed = 1;
  KindTag kind = KindTag::kPacking;
  bool two_stage = false;  // star with node 0 as the first stage
  // When nonempty, this connected graph replaces the random draw.
  std::vector<std::pair<int, int>> fixed_edges;
};

// Throws DomainError naming the first invalid field.
void ValidateGenParams(const GenParams& params);

struct GeneratedInstance {
  Instance instance;
  std::vector<std::pair<int, int>> edges;  // graph the blocks follow
  BlockPartition col_blocks;  // sqr columns per node
  BlockPartition row_blocks;  // sqr rows per edge
  int px_fifths = 0;          // p_x = px_fifths / 5
  std::vector<std::int64_t> anchor;  // the Bernoulli vector x
};

// Covering right-hand sides below zero are raised to zero; with A >= 0 the
// feasible set is unchanged.
GeneratedInstance GenRandomInstance(const GenParams& params);

}  // namespace sparsecut

#endif  // SPARSECUT_RANDOM_INSTANCE_H_
