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

#include "sparsecut/milp.h"

#include <algorithm>
#include <optional>

#include "relaxation.h"
#include "sparsecut/errors.h"

namespace sparsecut {

namespace internal {

int AddHullRows(Simplex* lp, const std::vector<int>& cols) {
  const int first = lp->num_rows();
  for (int c : cols) lp->AddRow({{c, Rational(1)}}, Relation::kEqual, 0);
  lp->AddRow({}, Relation::kEqual, 1);
  return first;
}

void AddHullPoint(Simplex* lp, int first_row, std::span<const std::int64_t> p) {
  std::vector<Simplex::Entry> entries;
  entries.reserve(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != 0) {
      entries.emplace_back(first_row + static_cast<int>(k),
                           Rational(-static_cast<signed long>(p[k])));
    }
  }
  entries.emplace_back(first_row + static_cast<int>(p.size()), Rational(1));
  lp->AddColumn({Rational(0), Rational(0), std::nullopt}, entries);
}

Relaxation BuildRelaxation(const Instance& inst, std::span<const Cut> cuts) {
  Relaxation r;
  r.num_vars = inst.num_vars();
  r.negated = inst.sense == Sense::kMinimize;
  for (int j = 0; j < inst.num_vars(); ++j) {
    const Rational c = r.negated ? Rational(-inst.objective[j])
                                 : inst.objective[j];
    r.lp.AddColumn({c, inst.bounds[j].lower, inst.bounds[j].upper}, {});
  }
  for (const Row& row : inst.rows) r.lp.AddRow(row.terms, row.relation, row.rhs);
  r.first_cut_row = r.lp.num_rows();
  for (const Cut& cut : cuts) r.lp.AddRow(cut.coeffs, cut.relation, cut.rhs);
  for (const HullConstraint& hull : inst.hulls) {
    const int first = AddHullRows(&r.lp, hull.cols);
    for (const auto& p : hull.points) AddHullPoint(&r.lp, first, p);
  }
  return r;
}

}  // namespace internal

namespace {

std::vector<Rational> Head(const Simplex& lp, int n) {
  std::vector<Rational> x;
  x.reserve(n);
  for (int j = 0; j < n; ++j) x.push_back(lp.value(j));
  return x;
}

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, std::span<const Cut> cuts,
                 const MilpOptions& options)
      : inst_(inst), options_(options), relax_(internal::BuildRelaxation(inst, cuts)) {
    integral_objective_ = true;
    for (int j = 0; j < inst.num_vars(); ++j) {
      const Rational& c = inst.objective[j];
      if (c != 0 && (!inst.is_integer(j) || !IsInteger(c))) {
        integral_objective_ = false;
      }
    }
  }

  MilpSolution Run() {
    Dfs();
    MilpSolution out;
    out.nodes = nodes_;
    out.node_limit_hit = limit_hit_;
    if (unbounded_) {
      out.status = LpStatus::kUnbounded;
    } else if (incumbent_) {
      out.status = LpStatus::kOptimal;
      out.value = relax_.negated ? Rational(-*incumbent_) : *incumbent_;
      out.x = std::move(best_x_);
    }
    return out;
  }

 private:
  void Dfs() {
    if (unbounded_ || limit_hit_) return;
    if (options_.node_limit > 0 && nodes_ >= options_.node_limit) {
      limit_hit_ = true;
      return;
    }
    ++nodes_;
    Simplex& lp = relax_.lp;
    const LpStatus status = lp.Solve();
    if (status == LpStatus::kInfeasible) return;
    if (status == LpStatus::kUnbounded) {
      unbounded_ = true;
      return;
    }
    const Rational z = lp.objective_value();
    const Rational bound = integral_objective_ ? Floor(z) : z;
    if (incumbent_ && bound <= *incumbent_) return;

    int branch = -1;
    Rational best_dist;
    const Rational half(1, 2);
    for (int j = 0; j < relax_.num_vars; ++j) {
      if (!inst_.is_integer(j)) continue;
      const Rational f = FractionalPart(lp.value(j));
      if (f == 0) continue;
      const Rational dist = Abs(Rational(f - half));
      if (branch < 0 || dist < best_dist) {
        branch = j;
        best_dist = dist;
      }
    }
    if (branch < 0) {
      incumbent_ = z;
      best_x_ = Head(lp, relax_.num_vars);
      return;
    }
    const Rational v = lp.value(branch);
    const std::optional<Rational> lo = lp.column_lower(branch);
    const std::optional<Rational> up = lp.column_upper(branch);
    lp.SetBounds(branch, lo, Floor(v));
    Dfs();
    lp.SetBounds(branch, Ceil(v), up);
    Dfs();
    lp.SetBounds(branch, lo, up);
  }

  const Instance& inst_;
  MilpOptions options_;
  internal::Relaxation relax_;
  bool integral_objective_ = false;
  std::optional<Rational> incumbent_;
  std::vector<Rational> best_x_;
  std::int64_t nodes_ = 0;
  bool unbounded_ = false;
  bool limit_hit_ = false;
};

}  // namespace

LpSolution SolveLp(const Instance& instance, std::span<const Cut> cuts) {
  internal::Relaxation r = internal::BuildRelaxation(instance, cuts);
  LpSolution out;
  out.status = r.lp.Solve();
  if (out.status != LpStatus::kOptimal) return out;
  const Rational z = r.lp.objective_value();
  out.value = r.negated ? Rational(-z) : z;
  out.x = Head(r.lp, r.num_vars);
  const int rows = instance.num_rows() + static_cast<int>(cuts.size());
  for (int i = 0; i < rows; ++i) {
    const Rational y = r.lp.row_dual(i);
    out.row_duals.push_back(r.negated ? Rational(-y) : y);
  }
  return out;
}

MilpSolution SolveMilp(const Instance& instance, std::span<const Cut> cuts,
                       const MilpOptions& options) {
  return BranchAndBound(instance, cuts, options).Run();
}

void PointSet::Add(std::span<const std::int64_t> p) {
  if (static_cast<int>(p.size()) != dim_) {
    throw DomainError("point dimension mismatch");
  }
  if (dim_ == 0) {
    ++count_;
    return;
  }
  coords_.insert(coords_.end(), p.begin(), p.end());
}

Rational PointSet::Dot(std::size_t i, const std::vector<Rational>& c) const {
  Rational sum(0);
  const auto p = point(i);
  for (int j = 0; j < dim_; ++j) {
    if (p[j] == 1) {
      sum += c[j];
    } else if (p[j] != 0) {
      sum += c[j] * Rational(static_cast<signed long>(p[j]));
    }
  }
  return sum;
}

PointSet Project(const PointSet& points, const std::vector<int>& cols) {
  const std::size_t d = cols.size();
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points.point(i);
    std::vector<std::int64_t> q(d);
    for (std::size_t k = 0; k < d; ++k) q[k] = p[cols[k]];
    rows.push_back(std::move(q));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  PointSet out(static_cast<int>(d));
  for (const auto& q : rows) out.Add(q);
  return out;
}

std::int64_t ArgMaxOverPoints(const PointSet& points,
                              const std::vector<Rational>& c) {
  std::int64_t best = -1;
  Rational best_value;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Rational v = points.Dot(i, c);
    if (best < 0 || v > best_value) {
      best = static_cast<std::int64_t>(i);
      best_value = std::move(v);
    }
  }
  return best;
}

}  // namespace sparsecut
