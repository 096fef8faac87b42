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

#include "sparsecut/constructions.h"

#include <bit>

#include "sparsecut/designs.h"
#include "sparsecut/errors.h"

namespace sparsecut {

namespace {

Instance BinaryInstance(Sense sense, KindTag kind, int n) {
  return MakeEmptyInstance(sense, kind, n, VarKind::kInteger, Rational(1));
}

Row Sum(std::vector<int> cols, Relation rel, const Rational& rhs) {
  std::vector<Term> terms;
  for (int c : cols) terms.push_back({c, Rational(1)});
  return MakeRow(std::move(terms), rel, rhs);
}

BlockPartition Blocks(std::vector<std::vector<int>> blocks) {
  BlockPartition p;
  p.axis = Axis::kColumns;
  p.blocks = std::move(blocks);
  return p;
}

std::vector<int> Range(int begin, int end) {
  std::vector<int> r;
  for (int i = begin; i < end; ++i) r.push_back(i);
  return r;
}

// Unordered pairs {a, b} lying in different sets of `family`.
std::vector<std::pair<int, int>> CrossPairs(const SetFamily& family, int size) {
  std::vector<int> owner(size);
  for (std::size_t s = 0; s < family.size(); ++s) {
    for (int e : family[s]) owner[e] = static_cast<int>(s);
  }
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      if (owner[a] != owner[b]) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

TightInstance MakeTight3Cycle(const Rational& eps) {
  if (eps <= 0 || eps > Rational(3, 2)) {
    throw DomainError("eps must lie in (0, 3/2]");
  }
  TightInstance t;
  t.instance = BinaryInstance(Sense::kMaximize, KindTag::kPacking, 3);
  t.instance.objective.assign(3, Rational(1));
  const Rational rhs = 2 - Rational(2, 3) * eps;
  t.instance.rows.push_back(Sum({0, 1}, Relation::kLessEqual, rhs));
  t.instance.rows.push_back(Sum({0, 2}, Relation::kLessEqual, rhs));
  t.instance.rows.push_back(Sum({1, 2}, Relation::kLessEqual, rhs));
  t.partition = SingletonPartition(Axis::kColumns, 3);
  return t;
}

TightInstance MakeTightStarSS(int delta, const Rational& eps) {
  if (delta < 1) throw DomainError("delta must be positive");
  if (eps <= 0 || eps > 1) throw DomainError("eps must lie in (0, 1]");
  TightInstance t;
  t.instance = BinaryInstance(Sense::kMaximize, KindTag::kPacking, 2 * delta);
  t.instance.objective.assign(2 * delta, Rational(1));
  for (int i = 0; i < delta; ++i) {
    t.instance.rows.push_back(
        Sum({i, delta + i}, Relation::kLessEqual, Rational(2 - eps)));
  }
  std::vector<std::vector<int>> blocks{Range(0, delta)};
  for (int i = 0; i < delta; ++i) blocks.push_back({delta + i});
  t.partition = Blocks(std::move(blocks));
  return t;
}

TightInstance MakeTightTreeNS(int delta, int n) {
  if (delta < 2 || n < delta || !IsPrime(n)) {
    throw DomainError("need n prime and n >= delta >= 2");
  }
  const AffineDesign design = MakeAffineDesign(n);
  const int nx = n * n;
  TightInstance t;
  t.instance = BinaryInstance(Sense::kMaximize, KindTag::kPacking, nx + delta);
  Instance& inst = t.instance;
  const Rational weight = Ratio(n - 1, delta - 1);
  for (int j = 0; j < nx; ++j) inst.objective[j] = 1;
  for (int i = 0; i < delta; ++i) inst.objective[nx + i] = weight;
  inst.objective.back().canonicalize();
  for (Rational& c : inst.objective) c.canonicalize();
  inst.rows.push_back(Sum(Range(0, nx), Relation::kLessEqual, n));
  for (int i = 0; i < delta; ++i) {
    for (const auto& [a, b] : CrossPairs(design.families[i], nx)) {
      inst.rows.push_back(Sum({a, b, nx + i}, Relation::kLessEqual, 2));
    }
  }
  std::vector<std::vector<int>> blocks{Range(0, nx)};
  for (int i = 0; i < delta; ++i) blocks.push_back({nx + i});
  t.partition = Blocks(std::move(blocks));
  return t;
}

TightInstance MakeTightCycleNS(int k, int n) {
  if (k < 3 || n < k || !IsPrime(n)) {
    throw DomainError("need n prime and n >= K >= 3");
  }
  const AffineDesign design = MakeAffineDesign(n);
  const int nx = n * n;
  TightInstance t;
  t.instance = BinaryInstance(Sense::kMaximize, KindTag::kPacking, k * nx);
  Instance& inst = t.instance;
  inst.objective.assign(k * nx, Rational(1));
  for (int j = 0; j < k; ++j) {
    inst.rows.push_back(Sum(Range(j * nx, (j + 1) * nx), Relation::kLessEqual, n));
  }
  for (int i = 0; i < k; ++i) {
    const int cur = i * nx;
    const int nxt = ((i + 1) % k) * nx;
    const auto pairs = CrossPairs(design.families[i], nx);
    for (const auto& [a, b] : pairs) {
      for (int c = 0; c < nx; ++c) {
        inst.rows.push_back(
            Sum({cur + a, cur + b, nxt + c}, Relation::kLessEqual, 2));
      }
    }
    for (const auto& [a, b] : pairs) {
      for (int c = 0; c < nx; ++c) {
        inst.rows.push_back(
            Sum({nxt + a, nxt + b, cur + c}, Relation::kLessEqual, 2));
      }
    }
  }
  std::vector<std::vector<int>> blocks;
  for (int j = 0; j < k; ++j) blocks.push_back(Range(j * nx, (j + 1) * nx));
  t.partition = Blocks(std::move(blocks));
  return t;
}

namespace {

void CheckSetCoverOrder(int q) {
  if (q < 1 || q > 4) throw DomainError("q must lie in [1, 4]");
}

// Columns v whose parity with u is odd, offset by `base`.
std::vector<int> CoveringColumns(int u, int q, int base) {
  std::vector<int> cols;
  for (int v = 0; v < (1 << q); ++v) {
    if (std::popcount(static_cast<unsigned>(u & v)) % 2 == 1) cols.push_back(base + v);
  }
  return cols;
}

}  // namespace

TightInstance MakeSsc(int q) {
  CheckSetCoverOrder(q);
  const int size = 1 << q;
  TightInstance t;
  t.instance = BinaryInstance(Sense::kMinimize, KindTag::kCovering, size);
  t.instance.objective.assign(size, Rational(1));
  for (int u = 1; u < size; ++u) {
    t.instance.rows.push_back(
        Sum(CoveringColumns(u, q, 0), Relation::kGreaterEqual, 1));
  }
  t.partition = SingletonPartition(Axis::kColumns, size);
  return t;
}

TightInstance MakeDsc(int q) {
  CheckSetCoverOrder(q);
  const int size = 1 << q;
  TightInstance t;
  t.instance = BinaryInstance(Sense::kMinimize, KindTag::kCovering, 2 * size);
  t.instance.objective.assign(2 * size, Rational(1));
  for (int u = 1; u < size; ++u) {
    std::vector<int> cols = CoveringColumns(u, q, 0);
    const std::vector<int> second = CoveringColumns(u, q, size);
    cols.insert(cols.end(), second.begin(), second.end());
    t.instance.rows.push_back(Sum(std::move(cols), Relation::kGreaterEqual, 1));
  }
  t.partition = Blocks({Range(0, size), Range(size, 2 * size)});
  return t;
}

TightInstance MakeTightCover(int k, int n) {
  if (k < 1 || n < std::max(k, 2) || !IsPrime(n)) {
    throw DomainError("need n prime and n >= max(K, 2)");
  }
  const AffineDesign design = MakeAffineDesign(n);
  const PlanesPartition planes = MakePlanesPartition(n);
  const int nx = n * n;
  int ground = 1;
  for (int i = 0; i < n; ++i) ground *= n;
  TightInstance t;
  t.instance = BinaryInstance(Sense::kMinimize, KindTag::kCovering, nx + k);
  Instance& inst = t.instance;
  for (int j = 0; j < nx; ++j) inst.objective[j] = 1;
  for (int s = 0; s < k; ++s) inst.objective[nx + s] = ground;
  t.partition.axis = Axis::kRows;
  for (int s = 0; s < k; ++s) {
    // Column of x_j in scenario s: j is position p of set i in family s, and
    // receives the indicator of planes set G^i_p.
    std::vector<std::vector<int>> cols_of_row(ground);
    const SetFamily& family = design.families[s];
    for (int i = 0; i < n; ++i) {
      for (int p = 0; p < n; ++p) {
        const int j = family[i][p];
        for (int r : planes.families[i][p]) cols_of_row[r].push_back(j);
      }
    }
    std::vector<int> block;
    for (int r = 0; r < ground; ++r) {
      std::vector<int> cols = cols_of_row[r];
      cols.push_back(nx + s);
      block.push_back(inst.num_rows());
      inst.rows.push_back(Sum(std::move(cols), Relation::kGreaterEqual, 1));
    }
    t.partition.blocks.push_back(std::move(block));
  }
  return t;
}

TightInstance MakeTightGeneralSS(int k, const Rational& eps) {
  if (k < 2) throw DomainError("K must be at least 2");
  if (eps <= 0 || eps >= Ratio(k - 1, k)) {
    throw DomainError("eps must lie in (0, (K-1)/K)");
  }
  const int n = 2 * k - 1;
  TightInstance t;
  t.instance = BinaryInstance(Sense::kMaximize, KindTag::kGeneral, n);
  Instance& inst = t.instance;
  for (int j = k - 1; j < n; ++j) inst.objective[j] = 1;
  const Rational rhs = 2 - eps;
  inst.rows.push_back(Sum(Range(0, k), Relation::kEqual, 1));
  for (int i = 0; i + 1 < k; ++i) {
    for (int j = k; j < n; ++j) {
      if (j == k + i) continue;
      inst.rows.push_back(Sum({i, j}, Relation::kLessEqual, rhs));
    }
  }
  for (int j = k; j < n; ++j) {
    inst.rows.push_back(Sum({k - 1, j}, Relation::kLessEqual, rhs));
  }
  std::vector<std::vector<int>> blocks{Range(0, k)};
  for (int j = k; j < n; ++j) blocks.push_back({j});
  t.partition = Blocks(std::move(blocks));
  return t;
}

TightInstance MakeTightGeneralNS(int k) {
  if (k < 2 || 2 * k > 20) throw DomainError("K must lie in [2, 10]");
  TightInstance t;
  t.instance = BinaryInstance(Sense::kMaximize, KindTag::kGeneral, 2 * k);
  Instance& inst = t.instance;
  for (int s = 0; s < k; ++s) inst.objective[k + s] = 1;
  const std::uint32_t all = (1u << k) - 1;
  for (int s = 0; s < k; ++s) {
    HullConstraint h;
    h.cols = Range(0, k);
    h.cols.push_back(k + s);
    const std::uint32_t unit = 1u << s;
    for (std::uint32_t x = 0; x <= all; ++x) {
      std::vector<std::int64_t> p(k + 1);
      for (int i = 0; i < k; ++i) p[i] = (x >> i) & 1u;
      p[k] = (x == unit || x == (all ^ unit)) ? 1 : 0;
      h.points.push_back(std::move(p));
    }
    inst.hulls.push_back(std::move(h));
  }
  std::vector<std::vector<int>> blocks{Range(0, k)};
  for (int s = 0; s < k; ++s) blocks.push_back({k + s});
  t.partition = Blocks(std::move(blocks));
  return t;
}

}  // namespace sparsecut
