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

#include "sparsecut/interaction_graph.h"

#include <algorithm>
#include <bit>
#include <set>

#include "sparsecut/errors.h"

namespace sparsecut {

bool InteractionGraph::Adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

int InteractionGraph::Degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

int InteractionGraph::MaxDegree() const {
  std::vector<int> deg(node_count, 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::vector<int>> InteractionGraph::AdjacencyLists() const {
  std::vector<std::vector<int>> adj(node_count);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool InteractionGraph::Connected() const {
  if (node_count == 0) return true;
  const auto adj = AdjacencyLists();
  std::vector<char> seen(node_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == node_count;
}

InteractionGraph MakeGraph(int node_count,
                           std::vector<std::pair<int, int>> edges) {
  InteractionGraph g;
  g.node_count = node_count;
  for (auto& [a, b] : edges) {
    if (a == b || a < 0 || b < 0 || a >= node_count || b >= node_count) {
      throw InvariantError("edge (" + std::to_string(a + 1) + "," +
                           std::to_string(b + 1) + ") is not simple");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  for (int v = 0; v < node_count; ++v) g.node_to_columns.push_back({v});
  return g;
}

InteractionGraph MakeCycle(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return MakeGraph(k, e);
}

InteractionGraph MakePath(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return MakeGraph(k, e);
}

InteractionGraph MakeStar(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return MakeGraph(leaves + 1, e);
}

InteractionGraph MakeComplete(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  }
  return MakeGraph(k, e);
}

namespace {

std::vector<int> OwnerOf(const BlockPartition& p, int extent) {
  std::vector<int> owner(extent, -1);
  for (int b = 0; b < p.num_blocks(); ++b) {
    for (int e : p.blocks[b]) owner[e] = b;
  }
  return owner;
}

void AddClique(const std::vector<int>& nodes,
               std::set<std::pair<int, int>>* edges) {
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      edges->insert({nodes[a], nodes[b]});
    }
  }
}

std::vector<int> BlocksTouched(const std::vector<int>& cols,
                               const std::vector<int>& owner) {
  std::vector<int> out;
  for (int c : cols) out.push_back(owner[c]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> RowColumns(const Row& row) {
  std::vector<int> cols;
  for (const Term& t : row.terms) cols.push_back(t.col);
  return cols;
}

}  // namespace

InteractionGraph BuildPackingGraph(const Instance& inst,
                                   const BlockPartition& p) {
  if (p.axis != Axis::kColumns) {
    throw InvariantError("packing graph needs a column partition");
  }
  CheckValidPartition(p, inst.num_vars());
  const std::vector<int> owner = OwnerOf(p, inst.num_vars());
  std::set<std::pair<int, int>> edges;
  for (const Row& row : inst.rows) {
    AddClique(BlocksTouched(RowColumns(row), owner), &edges);
  }
  for (const HullConstraint& h : inst.hulls) {
    AddClique(BlocksTouched(h.cols, owner), &edges);
  }
  InteractionGraph g;
  g.kind = GraphKind::kPacking;
  g.node_count = p.num_blocks();
  g.edges.assign(edges.begin(), edges.end());
  for (const auto& block : p.blocks) {
    std::vector<int> cols = block;
    std::sort(cols.begin(), cols.end());
    g.node_to_columns.push_back(std::move(cols));
  }
  return g;
}

InteractionGraph BuildCoveringGraph(const Instance& inst,
                                    const BlockPartition& p) {
  if (p.axis != Axis::kRows) {
    throw InvariantError("covering graph needs a row partition");
  }
  CheckValidPartition(p, inst.num_rows());
  InteractionGraph g;
  g.kind = GraphKind::kCovering;
  g.node_count = p.num_blocks();
  for (const auto& block : p.blocks) {
    std::vector<int> cols;
    for (int r : block) {
      for (const Term& t : inst.rows[r].terms) cols.push_back(t.col);
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    g.node_to_columns.push_back(std::move(cols));
  }
  for (int a = 0; a < g.node_count; ++a) {
    for (int b = a + 1; b < g.node_count; ++b) {
      const auto& x = g.node_to_columns[a];
      const auto& y = g.node_to_columns[b];
      std::vector<int> common;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(common));
      if (!common.empty()) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

SupportList SuperSparseList(const InteractionGraph& graph) {
  SupportList list;
  for (int v = 0; v < graph.node_count; ++v) list.members.push_back({v});
  return list;
}

SupportList EdgeList(const InteractionGraph& graph) {
  SupportList list;
  for (const auto& [a, b] : graph.edges) list.members.push_back({a, b});
  return list;
}

SupportList NaturalSparseList(const Instance& inst,
                              const InteractionGraph& graph,
                              const BlockPartition* row_partition) {
  std::vector<std::vector<int>> raw;
  if (graph.kind == GraphKind::kCovering) {
    if (row_partition == nullptr) {
      throw InvariantError("covering natural list needs the row partition");
    }
    const std::vector<int> owner = OwnerOf(*row_partition, inst.num_rows());
    for (int r = 0; r < inst.num_rows(); ++r) {
      if (!inst.rows[r].terms.empty()) raw.push_back({owner[r]});
    }
  } else {
    std::vector<int> owner(inst.num_vars(), -1);
    for (int v = 0; v < graph.node_count; ++v) {
      for (int c : graph.node_to_columns[v]) owner[c] = v;
    }
    for (const Row& row : inst.rows) {
      if (!row.terms.empty()) raw.push_back(BlocksTouched(RowColumns(row), owner));
    }
    for (const HullConstraint& h : inst.hulls) {
      if (!h.cols.empty()) raw.push_back(BlocksTouched(h.cols, owner));
    }
  }
  SupportList list;
  std::set<std::vector<int>> seen;
  for (auto& m : raw) {
    if (seen.insert(m).second) list.members.push_back(std::move(m));
  }
  return list;
}

std::vector<int> SupportColumns(const InteractionGraph& graph,
                                const std::vector<int>& nodes) {
  std::vector<int> cols;
  for (int v : nodes) {
    if (v < 0 || v >= graph.node_count) {
      throw InvariantError("node " + std::to_string(v + 1) + " out of range");
    }
    const auto& c = graph.node_to_columns[v];
    cols.insert(cols.end(), c.begin(), c.end());
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

std::vector<std::vector<int>> SupportColumnSets(const InteractionGraph& graph,
                                                const SupportList& list) {
  std::vector<std::vector<int>> out;
  for (const auto& m : list.members) out.push_back(SupportColumns(graph, m));
  return out;
}

bool IsMixedStableSet(const InteractionGraph& graph, const SupportList& list,
                      const MixedStableSet& m) {
  std::vector<int> part_of(graph.node_count, -1);
  for (std::size_t p = 0; p < m.parts.size(); ++p) {
    const auto& part = m.parts[p];
    if (part.empty()) return false;
    bool inside = false;
    for (const auto& member : list.members) {
      if (std::includes(member.begin(), member.end(), part.begin(),
                        part.end())) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
    for (int v : part) {
      if (v < 0 || v >= graph.node_count || part_of[v] != -1) return false;
      part_of[v] = static_cast<int>(p);
    }
  }
  for (const auto& [a, b] : graph.edges) {
    if (part_of[a] >= 0 && part_of[b] >= 0 && part_of[a] != part_of[b]) {
      return false;
    }
  }
  if (!m.incidence.empty()) {
    if (static_cast<int>(m.incidence.size()) != graph.node_count) return false;
    for (int v = 0; v < graph.node_count; ++v) {
      if (m.incidence[v] != (part_of[v] >= 0 ? 1 : 0)) return false;
    }
  }
  return true;
}

namespace {

class StableSetEnumerator {
 public:
  StableSetEnumerator(const InteractionGraph& g, const SupportList& list,
                      bool maximal_only)
      : q_(g.node_count), maximal_only_(maximal_only) {
    full_ = q_ == 0 ? 0u : (q_ == 32 ? ~0u : ((1u << q_) - 1));
    nbr_.assign(q_, 0);
    for (const auto& [a, b] : g.edges) {
      nbr_[a] |= 1u << b;
      nbr_[b] |= 1u << a;
    }
    admissible_.assign(std::size_t{1} << q_, 0);
    for (const auto& m : list.members) {
      std::uint32_t mask = 0;
      for (int v : m) {
        if (v < 0 || v >= q_) {
          throw InvariantError("support list node " + std::to_string(v + 1) +
                               " out of range");
        }
        mask |= 1u << v;
      }
      admissible_[mask] = 1;
    }
    for (int b = 0; b < q_; ++b) {
      for (std::uint32_t mask = 0; mask <= full_; ++mask) {
        if (!(mask & (1u << b)) && admissible_[mask | (1u << b)]) {
          admissible_[mask] = 1;
        }
      }
    }
    admissible_[0] = 0;
  }

  std::vector<MixedStableSet> Run() {
    Recurse(0, 0, 0);
    return std::move(out_);
  }

 private:
  std::uint32_t Neighbors(std::uint32_t s) const {
    std::uint32_t n = 0;
    for (std::uint32_t m = s; m; m &= m - 1) n |= nbr_[std::countr_zero(m)];
    return n;
  }

  bool Maximal(std::uint32_t used) const {
    for (int v = 0; v < q_; ++v) {
      const std::uint32_t bit = 1u << v;
      if (used & bit) continue;
      if (admissible_[bit] && !(nbr_[v] & used)) return false;
      for (std::uint32_t s : parts_) {
        if (admissible_[s | bit] && !(nbr_[v] & (used & ~s))) return false;
      }
    }
    for (std::size_t a = 0; a < parts_.size(); ++a) {
      for (std::size_t b = a + 1; b < parts_.size(); ++b) {
        if (admissible_[parts_[a] | parts_[b]]) return false;
      }
    }
    return true;
  }

  void Emit(std::uint32_t used) {
    if (maximal_only_ && (used == 0 || !Maximal(used))) return;
    MixedStableSet m;
    for (std::uint32_t s : parts_) {
      std::vector<int> part;
      for (std::uint32_t x = s; x; x &= x - 1) part.push_back(std::countr_zero(x));
      m.parts.push_back(std::move(part));
    }
    m.incidence.assign(q_, 0);
    for (int v = 0; v < q_; ++v) m.incidence[v] = (used >> v) & 1u;
    out_.push_back(std::move(m));
  }

  // `decided` nodes are fixed in or out; `blocked` nodes neighbour a part.
  void Recurse(std::uint32_t decided, std::uint32_t used,
               std::uint32_t blocked) {
    const std::uint32_t open = full_ & ~decided;
    if (open == 0) {
      Emit(used);
      return;
    }
    const int u = std::countr_zero(open);
    const std::uint32_t ubit = 1u << u;
    if (!(blocked & ubit)) {
      const std::uint32_t room = open & ~blocked & ~ubit;
      // Submasks of `room` in increasing order.
      std::uint32_t sub = 0;
      while (true) {
        const std::uint32_t s = sub | ubit;
        if (admissible_[s]) {
          parts_.push_back(s);
          Recurse(decided | s, used | s, blocked | Neighbors(s));
          parts_.pop_back();
        }
        if (sub == room) break;
        sub = (sub - room) & room;
      }
    }
    Recurse(decided | ubit, used, blocked);
  }

  int q_;
  bool maximal_only_;
  std::uint32_t full_ = 0;
  std::vector<std::uint32_t> nbr_;
  std::vector<char> admissible_;
  std::vector<std::uint32_t> parts_;
  std::vector<MixedStableSet> out_;
};

}  // namespace

std::vector<MixedStableSet> EnumerateMixedStableSets(
    const InteractionGraph& graph, const SupportList& list,
    const StableSetOptions& options) {
  if (graph.node_count > options.node_cap) {
    throw CapExceededError("mixed stable set enumeration nodes",
                           graph.node_count, options.node_cap);
  }
  if (graph.node_count > 24) {
    throw CapExceededError("mixed stable set enumeration nodes",
                           graph.node_count, 24);
  }
  return StableSetEnumerator(graph, list, options.maximal_only).Run();
}

std::string ToEdgeListText(const InteractionGraph& graph) {
  std::string out = std::to_string(graph.node_count) + "\n";
  for (const auto& [a, b] : graph.edges) {
    out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  }
  return out;
}

}  // namespace sparsecut
