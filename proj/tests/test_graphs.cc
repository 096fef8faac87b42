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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "sparsecut/chromatic.h"
#include "sparsecut/errors.h"
#include "sparsecut/interaction_graph.h"
#include "sparsecut/milp.h"

using namespace sparsecut;

namespace {

// Every mixed stable set (the empty one included), by assigning each node to "out" or to one of the
// parts in restricted-growth order, then testing the three conditions.
std::vector<std::vector<std::vector<int>>> AllMixedStableSets(
    const InteractionGraph& g, const SupportList& list) {
  const int q = g.node_count;
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> label(q, -1);  // -1 means not used
  auto inside = [&](const std::vector<int>& part) {
    return std::any_of(list.members.begin(), list.members.end(),
                       [&](const std::vector<int>& m) {
                         return std::all_of(part.begin(), part.end(), [&](int v) {
                           return std::find(m.begin(), m.end(), v) != m.end();
                         });
                       });
  };
  auto rec = [&](auto&& self, int v, int parts) -> void {
    if (v == q) {
      std::vector<std::vector<int>> sets(parts);
      for (int u = 0; u < q; ++u) {
        if (label[u] >= 0) sets[label[u]].push_back(u);
      }
      for (const auto& s : sets) {
        if (!inside(s)) return;
      }
      for (const auto& [a, b] : g.edges) {
        if (label[a] >= 0 && label[b] >= 0 && label[a] != label[b]) return;
      }
      out.push_back(sets);
      return;
    }
    for (int l = -1; l <= parts; ++l) {
      label[v] = l;
      self(self, v + 1, l == parts ? parts + 1 : parts);
    }
    label[v] = -1;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<int> Incidence(const std::vector<std::vector<int>>& sets, int q) {
  std::vector<int> inc(q, 0);
  for (const auto& s : sets) {
    for (int v : s) inc[v] = 1;
  }
  return inc;
}

// Fractional chromatic value over every mixed stable set, from scratch.
Rational EtaByDefinition(const InteractionGraph& g, const SupportList& list) {
  std::set<std::vector<int>> cols;
  for (const auto& m : AllMixedStableSets(g, list)) {
    cols.insert(Incidence(m, g.node_count));
  }
  const int n = static_cast<int>(cols.size());
  Instance inst = MakeEmptyInstance(Sense::kMinimize, KindTag::kCovering, n,
                                    VarKind::kContinuous, std::nullopt);
  inst.objective.assign(n, Rational(1));
  for (int v = 0; v < g.node_count; ++v) {
    std::vector<Term> terms;
    int s = 0;
    for (const auto& c : cols) {
      if (c[v]) terms.push_back({s, Rational(1)});
      ++s;
    }
    inst.rows.push_back(MakeRow(terms, Relation::kGreaterEqual, 1));
  }
  return SolveLp(inst).value;
}

InteractionGraph RandomConnectedGraph(std::mt19937_64& rng, int q) {
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < q; ++a) {
      for (int b = a + 1; b < q; ++b) {
        if (rng() % 2) edges.emplace_back(a, b);
      }
    }
    InteractionGraph g = MakeGraph(q, edges);
    if (g.Connected()) return g;
  }
}

InteractionGraph RandomTree(std::mt19937_64& rng, int q) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < q; ++v) {
    edges.emplace_back(static_cast<int>(rng() % v), v);
  }
  return MakeGraph(q, edges);
}

}  // namespace

TEST_CASE("graph builders") {
  const InteractionGraph c = MakeCycle(5);
  CHECK(c.edges.size() == 5);
  CHECK(c.MaxDegree() == 2);
  CHECK(c.Adjacent(0, 4));
  CHECK(MakePath(4).edges.size() == 3);
  const InteractionGraph s = MakeStar(4);
  CHECK(s.node_count == 5);
  CHECK(s.Degree(0) == 4);
  CHECK(MakeComplete(4).edges.size() == 6);
  CHECK_FALSE(MakeGraph(3, {{0, 1}}).Connected());
  CHECK_THROWS_AS(MakeGraph(2, {{0, 0}}), InvariantError);
  CHECK(ToEdgeListText(MakePath(3)) == "3\n1 2\n2 3\n");
}

TEST_CASE("interaction graphs from a block matrix") {
  // Columns {1,2} {3} {4}; rows touch blocks (1,2), (2,3), (1).
  Instance inst = MakeEmptyInstance(Sense::kMaximize, KindTag::kPacking, 4,
                                    VarKind::kInteger, Rational(1));
  inst.objective = {1, 1, 1, 1};
  inst.rows.push_back(MakeRow({{0, 1}, {2, 1}}, Relation::kLessEqual, 1));
  inst.rows.push_back(MakeRow({{2, 1}, {3, 1}}, Relation::kLessEqual, 1));
  inst.rows.push_back(MakeRow({{1, 1}}, Relation::kLessEqual, 1));
  const BlockPartition cols{Axis::kColumns, {{0, 1}, {2}, {3}}};
  const InteractionGraph g = BuildPackingGraph(inst, cols);
  CHECK(g.node_count == 3);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(g.node_to_columns[0] == std::vector<int>{0, 1});

  const SupportList natural = NaturalSparseList(inst, g);
  CHECK(natural.members ==
        std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0}});
  CHECK(SupportColumns(g, {0, 1}) == std::vector<int>{0, 1, 2});

  inst.kind = KindTag::kCovering;
  inst.sense = Sense::kMinimize;
  for (Row& r : inst.rows) r.relation = Relation::kGreaterEqual;
  const BlockPartition rows{Axis::kRows, {{0}, {1, 2}}};
  const InteractionGraph h = BuildCoveringGraph(inst, rows);
  CHECK(h.node_count == 2);
  CHECK(h.edges == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(h.node_to_columns[1] == std::vector<int>{1, 2, 3});
  CHECK(NaturalSparseList(inst, h, &rows).members ==
        std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("maximal mixed stable sets of the worked path example") {
  // Path 2 - 1 - 3 with supports {1,2} and {1,3}, zero-based here.
  const InteractionGraph g = MakeGraph(3, {{0, 1}, {0, 2}});
  const SupportList list{{{0, 1}, {0, 2}}};
  const auto sets = EnumerateMixedStableSets(g, list);
  std::set<std::vector<std::vector<int>>> got;
  for (const auto& m : sets) {
    CHECK(IsMixedStableSet(g, list, m));
    got.insert(m.parts);
  }
  const std::set<std::vector<std::vector<int>>> want{
      {{0, 1}}, {{0, 2}}, {{1}, {2}}};
  CHECK(got == want);
  CHECK_FALSE(IsMixedStableSet(g, list, MixedStableSet{{{1, 2}}, {0, 1, 1}}));
}

TEST_CASE("maximal sets dominate every mixed stable set") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int q = 2 + static_cast<int>(rng() % 5);
    const InteractionGraph g = RandomConnectedGraph(rng, q);
    SupportList list = rng() % 2 ? EdgeList(g) : SuperSparseList(g);
    if (rng() % 3 == 0) list.members.push_back({static_cast<int>(rng() % q)});
    const auto maximal = EnumerateMixedStableSets(g, list);
    StableSetOptions all;
    all.maximal_only = false;
    const auto every = EnumerateMixedStableSets(g, list, all);
    const auto brute = AllMixedStableSets(g, list);
    CHECK(every.size() == brute.size());
    for (const auto& b : brute) {
      const auto inc = Incidence(b, q);
      const bool covered = std::any_of(
          maximal.begin(), maximal.end(), [&](const MixedStableSet& m) {
            for (int v = 0; v < q; ++v) {
              if (inc[v] && !m.incidence[v]) return false;
            }
            return true;
          });
      CHECK(covered);
    }
  }
}

TEST_CASE("enumeration cap") {
  StableSetOptions o;
  o.node_cap = 4;
  const InteractionGraph g = MakePath(5);
  CHECK_THROWS_AS(EnumerateMixedStableSets(g, SuperSparseList(g), o),
                  CapExceededError);
}

TEST_CASE("fractional mixed chromatic number on cycles with edge lists") {
  for (int k = 3; k <= 9; ++k) {
    const InteractionGraph c = MakeCycle(k);
    const BoundReport r = FractionalMixedChromatic(c, EdgeList(c));
    CHECK(r.value == ClosedFormCycleBound(k));
    CHECK(VerifyCertificate(r, c, EdgeList(c)));
  }
  CHECK(ClosedFormCycleBound(6) == Rational(3, 2));
  CHECK(ClosedFormCycleBound(7) == Rational(7, 4));
  CHECK(ClosedFormCycleBound(5) == Rational(5, 3));
  CHECK(ClosedFormCycleBound(4) == 2);
  CHECK_THROWS_AS(ClosedFormCycleBound(2), DomainError);
}

TEST_CASE("chromatic values match the definition on random graphs") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    const int q = 2 + static_cast<int>(rng() % 5);
    const InteractionGraph g = RandomConnectedGraph(rng, q);
    const SupportList list = rng() % 2 ? EdgeList(g) : SuperSparseList(g);
    const BoundReport eta = FractionalMixedChromatic(g, list);
    CHECK(eta.value == EtaByDefinition(g, list));
    CHECK(VerifyCertificate(eta, g, list));
    const BoundReport bar = MixedChromatic(g, list);
    CHECK(IsInteger(bar.value));
    CHECK(bar.value >= eta.value);
    CHECK(VerifyCertificate(bar, g, list));
  }
}

TEST_CASE("complete graphs and the path example") {
  for (int k = 1; k <= 6; ++k) {
    const InteractionGraph g = MakeComplete(k);
    CHECK(FractionalMixedChromatic(g, SuperSparseList(g)).value == k);
    CHECK(MixedChromatic(g, SuperSparseList(g)).value == k);
  }
  const InteractionGraph p = MakeGraph(3, {{0, 1}, {0, 2}});
  const SupportList list{{{0, 1}, {0, 2}}};
  CHECK(FractionalMixedChromatic(p, list).value == Rational(3, 2));
  CHECK(MixedChromatic(p, list).value == 2);
}

TEST_CASE("tree coloring uses 2D-1 sets and covers each node D times") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const int q = 2 + static_cast<int>(rng() % 11);
    const InteractionGraph t = RandomTree(rng, q);
    const int delta = t.MaxDegree();
    const SupportList list = EdgeList(t);
    const auto sets = TreeMixedColoring(t);
    CHECK(static_cast<int>(sets.size()) == 2 * delta - 1);
    std::vector<int> cover(q, 0);
    for (const auto& m : sets) {
      CHECK(IsMixedStableSet(t, list, m));
      for (int v = 0; v < q; ++v) cover[v] += m.incidence[v];
    }
    for (int v = 0; v < q; ++v) CHECK(cover[v] == delta);
  }
}

TEST_CASE("corrected average density and the general bound") {
  // Star with 10 nodes under its edge list: density 2, bound 9.
  const InteractionGraph s = MakeStar(9);
  const BoundReport general =
      TheoreticalBound(KindTag::kGeneral, s, EdgeList(s));
  CHECK(general.value == 9);
  CHECK(general.kind == BoundKind::kGeneralDensity);

  const SupportList mixed{{{0, 1, 2}, {2, 3}, {3}}};
  CHECK(CorrectedAverageDensity(mixed, 4).value == Rational(5, 2));
  CHECK_THROWS_AS(CorrectedAverageDensity(SupportList{{{0}}}, 2),
                  InvariantError);
}

TEST_CASE("Brooks bound") {
  CHECK(BrooksBound(MakeComplete(4)).value == 4);
  CHECK(BrooksBound(MakeCycle(5)).value == 3);
  CHECK(BrooksBound(MakeCycle(6)).value == 2);
  CHECK(BrooksBound(MakeStar(3)).value == 3);
  CHECK_THROWS_AS(BrooksBound(MakeGraph(3, {{0, 1}})), DomainError);
}

TEST_CASE("bound report text") {
  const InteractionGraph p = MakeGraph(3, {{0, 1}, {0, 2}});
  const BoundReport r = MixedChromatic(p, SupportList{{{0, 1}, {0, 2}}});
  CHECK(r.CsvRow().rfind(ToString(r.kind) + ",2,2 sets;", 0) == 0);
}
