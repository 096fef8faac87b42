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

#ifndef SPARSECUT_CHROMATIC_H_
#define SPARSECUT_CHROMATIC_H_

#include <string>
#include <vector>

#include "sparsecut/instance.h"
#include "sparsecut/interaction_graph.h"
#include "sparsecut/rational.h"

namespace sparsecut {

enum class BoundKind {
  kPackingEta,
  kCoveringEtaBar,
  kGeneralDensity,
  kBrooks,
  kTreeClosedForm,
  kCycleClosedForm,
};

std::string ToString(BoundKind kind);

struct BoundReport {
  BoundKind kind = BoundKind::kPackingEta;
  Rational value;
  // Weighted mixed stable sets (LP weights, or 1 per chosen set).
  std::vector<MixedStableSet> sets;
  std::vector<Rational> weights;
  // Indices into the support list of the density-attaining sub-list.
  std::vector<int> density_members;

  std::string CertificateSummary() const;
  // kind,value,summary
  std::string CsvRow() const;
};

// Re-checks the certificate against the graph and list. Reports carrying no
// certificate verify trivially.
bool VerifyCertificate(const BoundReport& report, const InteractionGraph& graph,
                       const SupportList& list);

BoundReport FractionalMixedChromatic(const InteractionGraph& graph,
                                     const SupportList& list,
                                     const StableSetOptions& options = {});
BoundReport MixedChromatic(const InteractionGraph& graph,
                           const SupportList& list,
                           const StableSetOptions& options = {});

// 2*Delta - 1 mixed stable sets subordinate to the edge list, covering every
// node exactly Delta times. Throws InvariantError unless `tree` is a tree
// with at least one edge.
std::vector<MixedStableSet> TreeMixedColoring(const InteractionGraph& tree);

inline constexpr int kDensityListCap = 20;

// Maximum average member size over sub-lists covering [0, node_count).
BoundReport CorrectedAverageDensity(const SupportList& list, int node_count);

// Packing: eta. Covering: eta-bar (the closure is at least z^I / value).
// General: |V| + 1 - D_V.
BoundReport TheoreticalBound(KindTag kind, const InteractionGraph& graph,
                             const SupportList& list,
                             const StableSetOptions& options = {});

// Throws DomainError on a disconnected graph.
BoundReport BrooksBound(const InteractionGraph& graph);

// Throws DomainError for k < 3.
Rational ClosedFormCycleBound(int k);

}  // namespace sparsecut

#endif  // SPARSECUT_CHROMATIC_H_
