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

#ifndef SPARSECUT_EXPERIMENT_H_
#define SPARSECUT_EXPERIMENT_H_

#include <optional>
#include <string>
#include <vector>

#include "sparsecut/chromatic.h"
#include "sparsecut/closure_estimator.h"
#include "sparsecut/instance.h"
#include "sparsecut/interaction_graph.h"
#include "sparsecut/milp.h"
#include "sparsecut/random_instance.h"
#include "sparsecut/smilp.h"

namespace sparsecut {

enum class SupportsMode { kSuperSparse, kNaturalSparse };

std::string ToString(SupportsMode mode);
SupportsMode ParseSupportsMode(const std::string& text);  // "ss" or "ns"

// Graph and support list of an instance under its block partition.
// Packing and general instances use the column partition, covering ones the
// row partition; a missing partition means singletons.
struct SparsityModel {
  InteractionGraph graph;
  SupportList list;
  std::vector<std::vector<int>> supports;  // column sets of the list
};

SparsityModel BuildSparsityModel(const Instance& instance,
                                 const BlockPartition* col_blocks,
                                 const BlockPartition* row_blocks,
                                 SupportsMode mode);

BoundReport ComputeBound(const SmilpDocument& doc, SupportsMode mode);

struct ExperimentConfig {
  GenParams params;  // seed is the base; instance k uses seed + k
  int count = 10;
  SupportsMode mode = SupportsMode::kNaturalSparse;
  EstimatorConfig estimator;
  bool oracle = false;  // exact closure value instead of the cut loop
  std::uint64_t cap = kDefaultLatticeCap;
  int threads = 1;
};

void ValidateExperimentConfig(const ExperimentConfig& config);

struct RatioRow {
  int id = 0;  // 1-based
  Rational z_integer;
  Rational z_lp;
  Rational z_closure;
  Rational ratio;  // closure/zI for max, zI/closure for min
  Rational bound;
  bool bound_satisfied = false;
  bool sandwich = false;  // zI, closure and LP ordered as the theory says
  int cuts = 0;
  std::optional<std::string> skipped;  // reason when the row has no ratio

  bool ok() const { return skipped || (bound_satisfied && sandwich); }
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<RatioRow> rows;

  bool all_ok() const;
  int evaluated() const;
  // id,zI,zClosure,ratio,bound,ok
  std::string Csv() const;
  std::string Markdown() const;
  std::string SummaryLine() const;
};

ExperimentReport RunExperiment(const ExperimentConfig& config);

// Runs one generated instance end to end.
RatioRow EvaluateInstance(const ExperimentConfig& config, int id);

inline const std::vector<std::string>& TightFamilies() {
  static const std::vector<std::string> kFamilies = {
      "3cycle",     "star_ss",    "tree_ns", "cycle_ns", "cover",
      "general_ss", "general_ns", "ssc",     "dsc"};
  return kFamilies;
}

struct TightParams {
  int delta = 2;
  int n = 5;
  int k = 3;
  int q = 3;
  Rational eps{1, 2};
};

// Defaults matching the family's smallest worked case.
TightParams DefaultTightParams(const std::string& family);

struct TightCheck {
  std::string family;
  std::string params;
  std::string closure_label;  // e.g. "zSS"
  Rational z_integer;
  Rational z_closure;
  // Closed-form targets. For maximization, closure >= closure_target and
  // zI <= integer_target; mirrored for covering.
  Rational closure_target;
  Rational integer_target;
  bool exact = false;  // both values equal their targets
  bool ok = false;
  std::string Line() const;
};

TightCheck VerifyTightness(const std::string& family, const TightParams& params,
                           std::uint64_t cap = kDefaultLatticeCap);

}  // namespace sparsecut

#endif  // SPARSECUT_EXPERIMENT_H_
