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

#ifndef SPARSECUT_CLOSURE_ESTIMATOR_H_
#define SPARSECUT_CLOSURE_ESTIMATOR_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sparsecut/instance.h"
#include "sparsecut/milp.h"
#include "sparsecut/rational.h"

namespace sparsecut {

struct EstimatorConfig {
  Rational epsilon{1, 1000000};
  int max_cuts = 5000;
  int max_rounds = 20000;
  // Lattices up to this size are enumerated once and the inner problems are
  // solved over the point list; larger ones go through branch and bound.
  std::uint64_t point_cap = kDefaultLatticeCap;
};

// Maximizes linear objectives over the integer points of one instance.
class IntegerOracle {
 public:
  IntegerOracle(const Instance& instance, std::uint64_t point_cap);
  // Uses `points` (which must be the instance's point set) as the backend.
  IntegerOracle(const Instance& instance, const PointSet* points);

  struct Result {
    Rational value;
    std::vector<Rational> x;
  };
  // Empty when the instance has no integer point.
  std::optional<Result> Maximize(const std::vector<Rational>& objective) const;
  const PointSet* points() const { return points_; }

 private:
  void Densify();
  // Floating screen followed by exact evaluation of the near-best points.
  std::int64_t ArgMax(const std::vector<Rational>& c) const;

  const Instance& instance_;
  std::shared_ptr<PointSet> owned_;
  const PointSet* points_ = nullptr;
  std::vector<double> dense_;
  double max_abs_ = 0;
};

// Row-generation separator for sparse cuts on one support. The pool of
// integer maximizers and the separation LP persist across calls, so later
// calls on the same support start warm.
class SupportSeparator {
 public:
  SupportSeparator(const Instance& instance, std::vector<int> support);
  ~SupportSeparator();
  SupportSeparator(SupportSeparator&&) noexcept;
  SupportSeparator& operator=(SupportSeparator&&) noexcept;

  // A cut alpha x <= beta valid for P^I with ||alpha||_1 = 1, beta equal to
  // the exact maximum of alpha over P^I, violated by `x_star` by more than
  // epsilon. Stored as >= for minimization instances. Empty if none exists.
  std::optional<Cut> Separate(const std::vector<Rational>& x_star,
                              const EstimatorConfig& config,
                              const IntegerOracle& oracle,
                              Rational* violation = nullptr);

  const std::vector<int>& support() const { return support_; }
  // Integer points (restricted to the support) used as separation rows.
  std::size_t pool_size() const;

 private:
  struct State;
  const Instance* instance_;
  std::vector<int> support_;
  std::unique_ptr<State> state_;
};

// One-shot form of SupportSeparator::Separate.
std::optional<Cut> GenerateCut(const Instance& instance,
                               const std::vector<int>& support,
                               const std::vector<Rational>& x_star,
                               const EstimatorConfig& config,
                               const IntegerOracle& oracle,
                               Rational* violation = nullptr);

enum class Termination { kIntegralSolution, kStalledAllSupports, kCapHit };

std::string ToString(Termination t);

struct TraceEntry {
  int round = 0;
  int support_id = 0;  // 0-based
  Rational z;
  std::optional<Rational> violation;
  std::optional<int> cut_id;
};

struct ClosureRun {
  Rational z_estimate;
  std::vector<Cut> cuts_added;
  int rounds = 0;
  Termination termination = Termination::kStalledAllSupports;
  std::vector<TraceEntry> trace;

  // round,support_id,z_value,violation,cut_id with 1-based ids.
  std::string TraceCsv() const;
};

// Cyclic cut loop over `supports`. Throws DomainError if the relaxation is
// infeasible or unbounded.
ClosureRun EstimateZcut(const Instance& instance,
                        const std::vector<std::vector<int>>& supports,
                        const EstimatorConfig& config = {},
                        const PointSet* points = nullptr);

}  // namespace sparsecut

#endif  // SPARSECUT_CLOSURE_ESTIMATOR_H_
