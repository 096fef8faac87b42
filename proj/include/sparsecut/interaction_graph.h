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

#ifndef SPARSECUT_INTERACTION_GRAPH_H_
#define SPARSECUT_INTERACTION_GRAPH_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sparsecut/instance.h"

namespace sparsecut {

enum class GraphKind { kPacking, kCovering };

// Simple undirected graph on nodes [0, node_count) with a column set per
// node: the block for packing graphs, the union row support for covering.
struct InteractionGraph {
  GraphKind kind = GraphKind::kPacking;
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted, unique
  std::vector<std::vector<int>> node_to_columns;

  bool Adjacent(int a, int b) const;
  int Degree(int v) const;
  int MaxDegree() const;
  std::vector<std::vector<int>> AdjacencyLists() const;
  bool Connected() const;
};

// Graph with the given edges; node i owns column i. Duplicate edges merge.
InteractionGraph MakeGraph(int node_count,
                           std::vector<std::pair<int, int>> edges);
InteractionGraph MakeCycle(int k);
InteractionGraph MakePath(int k);
InteractionGraph MakeStar(int leaves);  // center is node 0
InteractionGraph MakeComplete(int k);

InteractionGraph BuildPackingGraph(const Instance& instance,
                                   const BlockPartition& col_partition);
InteractionGraph BuildCoveringGraph(const Instance& instance,
                                    const BlockPartition& row_partition);

// Members are sorted node sets, nonempty, within range.
struct SupportList {
  std::vector<std::vector<int>> members;
  int size() const { return static_cast<int>(members.size()); }
};

SupportList SuperSparseList(const InteractionGraph& graph);
SupportList EdgeList(const InteractionGraph& graph);

// One member per row (and per hull constraint), first occurrence kept. For
// covering graphs a row maps to the node of its block. `row_partition` is
// required for covering graphs and ignored otherwise.
SupportList NaturalSparseList(const Instance& instance,
                              const InteractionGraph& graph,
                              const BlockPartition* row_partition = nullptr);

// Sorted union of node_to_columns over `nodes`.
std::vector<int> SupportColumns(const InteractionGraph& graph,
                                const std::vector<int>& nodes);
std::vector<std::vector<int>> SupportColumnSets(const InteractionGraph& graph,
                                                const SupportList& list);

struct MixedStableSet {
  std::vector<std::vector<int>> parts;  // each sorted
  std::vector<int> incidence;           // 0/1 per node
};

bool IsMixedStableSet(const InteractionGraph& graph, const SupportList& list,
                      const MixedStableSet& m);

inline constexpr int kDefaultStableSetNodeCap = 14;

struct StableSetOptions {
  bool maximal_only = true;
  int node_cap = kDefaultStableSetNodeCap;
};

// Parts are emitted by increasing least node; the empty collection is
// included only when maximal_only is false.
std::vector<MixedStableSet> EnumerateMixedStableSets(
    const InteractionGraph& graph, const SupportList& list,
    const StableSetOptions& options = {});

// "q" then one "i j" line per edge, 1-based.
std::string ToEdgeListText(const InteractionGraph& graph);

}  // namespace sparsecut

#endif  // SPARSECUT_INTERACTION_GRAPH_H_
