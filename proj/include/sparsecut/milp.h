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

#ifndef SPARSECUT_MILP_H_
#define SPARSECUT_MILP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sparsecut/instance.h"
#include "sparsecut/rational.h"
#include "sparsecut/simplex.h"

namespace sparsecut {

// Default bound on the number of lattice points an enumeration may scan.
inline constexpr std::uint64_t kDefaultLatticeCap = std::uint64_t{1} << 24;

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;            // in the instance's own sense
  std::vector<Rational> x;   // instance columns only
  std::vector<Rational> row_duals;  // instance rows, then cuts
};

// Exact optimum of the relaxation of `instance` plus `cuts`.
LpSolution SolveLp(const Instance& instance, std::span<const Cut> cuts = {});

struct MilpOptions {
  std::int64_t node_limit = 0;  // 0 means unlimited
};

struct MilpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
  std::int64_t nodes = 0;
  bool node_limit_hit = false;
};

// Depth-first branch and bound. Branches on the lowest-index variable whose
// fractional part is nearest 1/2, floor child first.
MilpSolution SolveMilp(const Instance& instance,
                       std::span<const Cut> cuts = {},
                       const MilpOptions& options = {});

// Integer points stored row-major; every point has `dim` coordinates.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? count_ : coords_.size() / dim_; }
  bool empty() const { return size() == 0; }
  std::span<const std::int64_t> point(std::size_t i) const {
    return {coords_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }
  void Add(std::span<const std::int64_t> p);
  const std::vector<std::int64_t>& coords() const { return coords_; }

  // Objective value of point i, exactly.
  Rational Dot(std::size_t i, const std::vector<Rational>& c) const;

 private:
  int dim_ = 0;
  std::size_t count_ = 0;  // used only when dim_ == 0
  std::vector<std::int64_t> coords_;
};

// Product of bound ranges, saturating at UINT64_MAX. Requires finite bounds.
std::uint64_t LatticeSize(const Instance& instance);

struct EnumerateOptions {
  std::uint64_t cap = kDefaultLatticeCap;
};

// Every integer point of the instance, in lexicographic order. Requires all
// variables integer with finite bounds; throws CapExceededError when the
// lattice is larger than the cap.
PointSet EnumerateIntegerPoints(const Instance& instance,
                                const EnumerateOptions& options = {});

// Distinct projections onto `cols`, sorted lexicographically.
PointSet Project(const PointSet& points, const std::vector<int>& cols);

// Index of the first point maximizing c.x; -1 if empty.
std::int64_t ArgMaxOverPoints(const PointSet& points,
                              const std::vector<Rational>& c);

enum class ColumnStrategy { kGenerated, kAllPoints };

struct ClosureOracleOptions {
  std::uint64_t cap = kDefaultLatticeCap;
  ColumnStrategy strategy = ColumnStrategy::kGenerated;
};

struct ClosureValue {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
  std::int64_t hull_columns = 0;
  int pricing_rounds = 0;
};

// Optimum of the relaxation intersected with conv(proj_N P^I) for every
// support N. `points`, when given, must equal the instance's point set.
ClosureValue ExactClosureValue(const Instance& instance,
                               const std::vector<std::vector<int>>& supports,
                               const ClosureOracleOptions& options = {},
                               const PointSet* points = nullptr);

}  // namespace sparsecut

#endif  // SPARSECUT_MILP_H_
