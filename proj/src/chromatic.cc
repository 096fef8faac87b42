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

#include "sparsecut/chromatic.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>

#include "sparsecut/errors.h"
#include "sparsecut/milp.h"

namespace sparsecut {

std::string ToString(BoundKind kind) {
  switch (kind) {
    case BoundKind::kPackingEta:
      return "packing_eta";
    case BoundKind::kCoveringEtaBar:
      return "covering_eta_bar";
    case BoundKind::kGeneralDensity:
      return "general_density";
    case BoundKind::kBrooks:
      return "brooks";
    case BoundKind::kTreeClosedForm:
      return "tree_closed_form";
    case BoundKind::kCycleClosedForm:
      return "cycle_closed_form";
  }
  return "?";
}

std::string BoundReport::CertificateSummary() const {
  if (!density_members.empty()) {
    std::string s = "sublist";
    for (int i : density_members) s += " " + std::to_string(i + 1);
    return s;
  }
  if (sets.empty()) return "none";
  std::string s = std::to_string(sets.size()) + " sets;";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    s += " ";
    for (std::size_t p = 0; p < sets[i].parts.size(); ++p) {
      s += p == 0 ? "{" : "|";
      for (std::size_t k = 0; k < sets[i].parts[p].size(); ++k) {
        if (k > 0) s += " ";
        s += std::to_string(sets[i].parts[p][k] + 1);
      }
    }
    s += "}=" + ToString(weights[i]);
  }
  return s;
}

std::string BoundReport::CsvRow() const {
  return ToString(kind) + "," + ToString(value) + "," + CertificateSummary();
}

namespace {

// Covering program over the incidence vectors; binary when `integral`.
Instance CoverInstance(const std::vector<MixedStableSet>& sets, int q,
                       bool integral) {
  const int n = static_cast<int>(sets.size());
  Instance inst = MakeEmptyInstance(
      Sense::kMinimize, KindTag::kCovering, n,
      integral ? VarKind::kInteger : VarKind::kContinuous,
      integral ? std::optional<Rational>(1) : std::nullopt);
  inst.objective.assign(n, Rational(1));
  for (int v = 0; v < q; ++v) {
    std::vector<Term> terms;
    for (int s = 0; s < n; ++s) {
      if (sets[s].incidence[v]) terms.push_back({s, Rational(1)});
    }
    if (terms.empty()) {
      throw InvariantError("node " + std::to_string(v + 1) +
                           " lies in no support list member");
    }
    inst.rows.push_back(MakeRow(std::move(terms), Relation::kGreaterEqual, 1));
  }
  return inst;
}

// Distinct incidence vectors; the first set with a given vector is kept.
std::vector<MixedStableSet> DistinctColumns(std::vector<MixedStableSet> sets) {
  std::set<std::vector<int>> seen;
  std::vector<MixedStableSet> out;
  for (auto& m : sets) {
    if (seen.insert(m.incidence).second) out.push_back(std::move(m));
  }
  return out;
}

BoundReport ChromaticReport(const InteractionGraph& graph,
                            const SupportList& list,
                            const StableSetOptions& options, bool integral) {
  StableSetOptions opts = options;
  opts.maximal_only = true;
  std::vector<MixedStableSet> sets =
      DistinctColumns(EnumerateMixedStableSets(graph, list, opts));
  BoundReport report;
  report.kind = integral ? BoundKind::kCoveringEtaBar : BoundKind::kPackingEta;
  if (graph.node_count == 0) {
    report.value = 0;
    return report;
  }
  const Instance inst = CoverInstance(sets, graph.node_count, integral);
  std::vector<Rational> y;
  if (integral) {
    const MilpSolution sol = SolveMilp(inst);
    if (sol.status != LpStatus::kOptimal) {
      throw InvariantError("covering program not solvable");
    }
    report.value = sol.value;
    y = sol.x;
  } else {
    const LpSolution sol = SolveLp(inst);
    if (sol.status != LpStatus::kOptimal) {
      throw InvariantError("covering program not solvable");
    }
    report.value = sol.value;
    y = sol.x;
  }
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (y[s] != 0) {
      report.sets.push_back(sets[s]);
      report.weights.push_back(y[s]);
    }
  }
  return report;
}

}  // namespace

bool VerifyCertificate(const BoundReport& report, const InteractionGraph& graph,
                       const SupportList& list) {
  if (!report.density_members.empty()) {
    std::vector<char> covered(graph.node_count, 0);
    Rational total(0);
    for (int i : report.density_members) {
      if (i < 0 || i >= list.size()) return false;
      for (int v : list.members[i]) covered[v] = 1;
      total += static_cast<long>(list.members[i].size());
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
      return false;
    }
    const Rational density =
        total / static_cast<long>(report.density_members.size());
    if (report.kind == BoundKind::kGeneralDensity) {
      return report.value == graph.node_count + 1 - density;
    }
    return report.value == density;
  }
  if (report.sets.empty()) return true;
  if (report.sets.size() != report.weights.size()) return false;
  std::vector<Rational> cover(graph.node_count, Rational(0));
  Rational total(0);
  for (std::size_t s = 0; s < report.sets.size(); ++s) {
    if (report.weights[s] < 0) return false;
    if (!IsMixedStableSet(graph, list, report.sets[s])) return false;
    total += report.weights[s];
    for (const auto& part : report.sets[s].parts) {
      for (int v : part) cover[v] += report.weights[s];
    }
  }
  for (const Rational& c : cover) {
    if (c < 1) return false;
  }
  return total == report.value;
}

BoundReport FractionalMixedChromatic(const InteractionGraph& graph,
                                     const SupportList& list,
                                     const StableSetOptions& options) {
  return ChromaticReport(graph, list, options, /*integral=*/false);
}

BoundReport MixedChromatic(const InteractionGraph& graph,
                           const SupportList& list,
                           const StableSetOptions& options) {
  return ChromaticReport(graph, list, options, /*integral=*/true);
}

std::vector<MixedStableSet> TreeMixedColoring(const InteractionGraph& tree) {
  const int q = tree.node_count;
  if (q < 2 || static_cast<int>(tree.edges.size()) != q - 1 ||
      !tree.Connected()) {
    throw InvariantError("input is not a tree with at least one edge");
  }
  const int delta = tree.MaxDegree();
  if (delta == 1) {
    MixedStableSet m;
    m.parts.push_back({tree.edges[0].first, tree.edges[0].second});
    m.incidence.assign(q, 1);
    return {m};
  }
  const int labels = 2 * delta - 1;

  // Augmented tree: every internal node gets degree delta.
  std::vector<std::vector<int>> adj = tree.AdjacencyLists();
  for (int v = 0; v < q; ++v) {
    if (adj[v].size() < 2) continue;
    while (static_cast<int>(adj[v].size()) < delta) {
      const int leaf = static_cast<int>(adj.size());
      adj.push_back({v});
      adj[v].push_back(leaf);
    }
  }
  const int total = static_cast<int>(adj.size());
  auto internal = [&](int v) { return adj[v].size() >= 2; };
  int root = 0;
  while (!internal(root)) ++root;

  std::map<std::pair<int, int>, int> edge_label;
  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::vector<int> parent(total, -1);
  std::vector<std::vector<int>> leaf_labels(total);
  std::deque<int> queue;
  {
    int next = 1;
    for (int c : adj[root]) {
      parent[c] = root;
      edge_label[key(root, c)] = next++;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int p = parent[v];
    std::vector<char> in_s(labels + 1, 0);
    for (int w : adj[p]) in_s[edge_label.at(key(p, w))] = 1;
    std::vector<int> free;
    for (int l = 1; l <= labels; ++l) {
      if (!in_s[l]) free.push_back(l);
    }
    if (internal(v)) {
      std::size_t next = 0;
      for (int c : adj[v]) {
        if (c == p) continue;
        parent[c] = v;
        edge_label[key(v, c)] = free[next++];
        queue.push_back(c);
      }
    } else {
      leaf_labels[v] = free;
    }
  }

  std::vector<MixedStableSet> out(labels);
  for (const auto& [e, l] : edge_label) {
    std::vector<int> part;
    if (e.first < q) part.push_back(e.first);
    if (e.second < q) part.push_back(e.second);
    out[l - 1].parts.push_back(std::move(part));
  }
  for (int v = 0; v < q; ++v) {
    for (int l : leaf_labels[v]) out[l - 1].parts.push_back({v});
  }
  for (MixedStableSet& m : out) {
    std::sort(m.parts.begin(), m.parts.end());
    m.incidence.assign(q, 0);
    for (const auto& part : m.parts) {
      for (int v : part) m.incidence[v] = 1;
    }
  }
  return out;
}

BoundReport CorrectedAverageDensity(const SupportList& list, int node_count) {
  const int t = list.size();
  if (t > kDensityListCap) {
    throw CapExceededError("density sub-list enumeration", t, kDensityListCap);
  }
  if (node_count > 64) {
    throw CapExceededError("density node count", node_count, 64);
  }
  const std::uint64_t full =
      node_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << node_count) - 1;
  std::vector<std::uint64_t> member(t, 0);
  for (int i = 0; i < t; ++i) {
    for (int v : list.members[i]) {
      if (v < 0 || v >= node_count) {
        throw InvariantError("support list node out of range");
      }
      member[i] |= std::uint64_t{1} << v;
    }
  }
  const std::size_t count = std::size_t{1} << t;
  std::vector<std::uint64_t> unions(count, 0);
  std::vector<int> sizes(count, 0);
  std::size_t best = 0;
  for (std::size_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    unions[mask] = unions[mask & (mask - 1)] | member[low];
    sizes[mask] = sizes[mask & (mask - 1)] +
                  static_cast<int>(list.members[low].size());
    if (unions[mask] != full) continue;
    // Compare sizes[mask]/|mask| against the best ratio exactly.
    if (best == 0 ||
        static_cast<long>(sizes[mask]) * std::popcount(best) >
            static_cast<long>(sizes[best]) * std::popcount(mask)) {
      best = mask;
    }
  }
  if (best == 0) {
    throw InvariantError("support list does not cover every node");
  }
  BoundReport report;
  report.kind = BoundKind::kGeneralDensity;
  report.value = Ratio(sizes[best], std::popcount(best));
  report.value.canonicalize();
  for (int i = 0; i < t; ++i) {
    if (best & (std::size_t{1} << i)) report.density_members.push_back(i);
  }
  return report;
}

BoundReport TheoreticalBound(KindTag kind, const InteractionGraph& graph,
                             const SupportList& list,
                             const StableSetOptions& options) {
  switch (kind) {
    case KindTag::kPacking:
      return FractionalMixedChromatic(graph, list, options);
    case KindTag::kCovering:
      return MixedChromatic(graph, list, options);
    case KindTag::kGeneral: {
      BoundReport r = CorrectedAverageDensity(list, graph.node_count);
      r.value = graph.node_count + 1 - r.value;
      return r;
    }
  }
  throw DomainError("unknown kind");
}

BoundReport BrooksBound(const InteractionGraph& graph) {
  if (!graph.Connected()) throw DomainError("graph is disconnected");
  const int q = graph.node_count;
  const int delta = graph.MaxDegree();
  const bool complete =
      static_cast<long>(graph.edges.size()) == static_cast<long>(q) * (q - 1) / 2;
  bool odd_cycle = q >= 3 && q % 2 == 1 && static_cast<int>(graph.edges.size()) == q;
  for (int v = 0; odd_cycle && v < q; ++v) odd_cycle = graph.Degree(v) == 2;
  BoundReport r;
  r.kind = BoundKind::kBrooks;
  r.value = (complete || odd_cycle) ? delta + 1 : delta;
  return r;
}

Rational ClosedFormCycleBound(int k) {
  if (k < 3) throw DomainError("cycle length must be at least 3");
  const int t = k / 3;
  Rational r;
  switch (k % 3) {
    case 0:
      r = Rational(3, 2);
      break;
    case 1:
      r = Ratio(3 * t + 1, 2 * t);
      break;
    default:
      r = Ratio(3 * t + 2, 2 * t + 1);
      break;
  }
  r.canonicalize();
  return r;
}

}  // namespace sparsecut
