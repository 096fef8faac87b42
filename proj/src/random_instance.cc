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

#include "sparsecut/random_instance.h"

#include <algorithm>

#include "sparsecut/errors.h"
#include "sparsecut/interaction_graph.h"

namespace sparsecut {

namespace {

enum StreamTag : std::uint64_t {
  kGraphStream = 1,
  kAnchorStream = 2,
  kBlockStream = 3,
  kNoiseStream = 4,
  kObjectiveStream = 5,
};

// Connected-graph resampling gives up after this many draws.
constexpr int kMaxGraphAttempts = 100000;

}  // namespace

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t tag, std::uint64_t a,
                     std::uint64_t b)
    : engine_(SplitMix64(seed ^ SplitMix64((tag << 48) ^ (a << 24) ^ b))) {}

std::int64_t StreamRng::UniformInt(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(Next());
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t v;
  do {
    v = Next();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % range);
}

double StreamRng::UniformReal() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

void ValidateGenParams(const GenParams& p) {
  if (p.nv < 2) throw DomainError("nv must be at least 2");
  if (p.sqr < 1) throw DomainError("sqr must be at least 1");
  if (p.M < 1 || p.M_eps < 1 || p.ObjM < 1) {
    throw DomainError("magnitude caps must be at least 1");
  }
  if (!p.two_stage && !(p.p > 0 && p.p <= 1)) {
    throw DomainError("edge probability must lie in (0, 1]");
  }
}

GeneratedInstance GenRandomInstance(const GenParams& params) {
  ValidateGenParams(params);
  GeneratedInstance out;
  const int nv = params.nv;
  const int sqr = params.sqr;
  if (!params.fixed_edges.empty()) {
    const InteractionGraph g = MakeGraph(nv, params.fixed_edges);
    if (!g.Connected()) throw DomainError("supplied graph is disconnected");
    out.edges = g.edges;
  } else if (params.two_stage) {
    for (int v = 1; v < nv; ++v) out.edges.emplace_back(0, v);
  } else {
    int attempt = 0;
    while (true) {
      if (attempt == kMaxGraphAttempts) {
        throw DomainError("no connected graph drawn; raise p");
      }
      StreamRng rng(params.seed, kGraphStream, attempt++);
      std::vector<std::pair<int, int>> edges;
      for (int a = 0; a < nv; ++a) {
        for (int b = a + 1; b < nv; ++b) {
          if (rng.UniformReal() < params.p) edges.emplace_back(a, b);
        }
      }
      if (MakeGraph(nv, edges).Connected()) {
        out.edges = std::move(edges);
        break;
      }
    }
  }
  const int n = nv * sqr;
  const int num_edges = static_cast<int>(out.edges.size());
  const int m = num_edges * sqr;
  const Sense sense =
      params.kind == KindTag::kCovering ? Sense::kMinimize : Sense::kMaximize;
  out.instance = MakeEmptyInstance(sense, params.kind, n, VarKind::kInteger,
                                   Rational(1));
  Instance& inst = out.instance;

  StreamRng anchor_rng(params.seed, kAnchorStream);
  out.px_fifths = static_cast<int>(anchor_rng.UniformInt(1, 4));
  out.anchor.resize(n);
  for (int j = 0; j < n; ++j) {
    out.anchor[j] = anchor_rng.UniformInt(0, 4) < out.px_fifths ? 1 : 0;
  }

  std::vector<std::vector<Term>> terms(m);
  for (int e = 0; e < num_edges; ++e) {
    for (int v : {out.edges[e].first, out.edges[e].second}) {
      StreamRng rng(params.seed, kBlockStream, e, v);
      for (int r = 0; r < sqr; ++r) {
        for (int c = 0; c < sqr; ++c) {
          std::int64_t a = rng.UniformInt(1, params.M);
          if (params.kind == KindTag::kGeneral && rng.UniformInt(0, 1) == 1) {
            a = -a;
          }
          terms[e * sqr + r].push_back({v * sqr + c, Rational(static_cast<long>(a))});
        }
      }
    }
  }
  StreamRng noise_rng(params.seed, kNoiseStream);
  const Relation rel = params.kind == KindTag::kCovering
                           ? Relation::kGreaterEqual
                           : Relation::kLessEqual;
  for (int i = 0; i < m; ++i) {
    Rational ax(0);
    for (const Term& t : terms[i]) {
      if (out.anchor[t.col]) ax += t.coef;
    }
    const Rational eps(static_cast<long>(noise_rng.UniformInt(1, params.M_eps)));
    Rational rhs = params.kind == KindTag::kCovering ? Rational(ax - eps)
                                                      : Rational(ax + eps);
    if (params.kind == KindTag::kCovering && rhs < 0) rhs = 0;
    inst.rows.push_back(MakeRow(std::move(terms[i]), rel, rhs));
  }
  StreamRng obj_rng(params.seed, kObjectiveStream);
  for (int j = 0; j < n; ++j) {
    inst.objective[j] = Rational(static_cast<long>(obj_rng.UniformInt(1, params.ObjM)));
  }
  out.col_blocks.axis = Axis::kColumns;
  for (int v = 0; v < nv; ++v) {
    std::vector<int> block;
    for (int c = 0; c < sqr; ++c) block.push_back(v * sqr + c);
    out.col_blocks.blocks.push_back(std::move(block));
  }
  out.row_blocks.axis = Axis::kRows;
  for (int e = 0; e < num_edges; ++e) {
    std::vector<int> block;
    for (int r = 0; r < sqr; ++r) block.push_back(e * sqr + r);
    out.row_blocks.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace sparsecut
