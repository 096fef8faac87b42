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
#include <cmath>

#include "relaxation.h"
#include "sparsecut/milp.h"
#include "sparsecut/simd/kernels.h"

namespace sparsecut {

namespace {

// Columns priced in per support and round, best floating score first.
constexpr std::size_t kColumnsPerRound = 8;

struct HullGroup {
  std::vector<int> cols;
  PointSet proj;
  std::vector<double> dense;  // proj as doubles, row-major
  int first_row = 0;
};

// Exact reduced cost of multiplier columns: pi . p - sigma.
Rational ReducedCost(const PointSet& proj, std::size_t i,
                     const std::vector<Rational>& pi, const Rational& sigma) {
  return Rational(proj.Dot(i, pi) - sigma);
}

// Moves the pending rows violated at the current LP point into the LP.
std::int64_t AddViolatedRows(Simplex* lp, int n,
                             std::vector<const Row*>* pending) {
  if (pending->empty()) return 0;
  std::vector<Rational> x(n);
  for (int j = 0; j < n; ++j) x[j] = lp->value(j);
  std::int64_t added = 0;
  std::vector<const Row*> keep;
  for (const Row* row : *pending) {
    if (Satisfies(*row, x)) {
      keep.push_back(row);
    } else {
      lp->AddRow(row->terms, row->relation, row->rhs);
      ++added;
    }
  }
  *pending = std::move(keep);
  return added;
}

}  // namespace

ClosureValue ExactClosureValue(const Instance& instance,
                               const std::vector<std::vector<int>>& supports,
                               const ClosureOracleOptions& options,
                               const PointSet* points) {
  PointSet own;
  if (points == nullptr) {
    own = EnumerateIntegerPoints(instance, {options.cap});
    points = &own;
  }
  ClosureValue out;
  if (points->empty()) return out;

  // Rows supported inside some N hold on conv(P^I|N) and are implied by the
  // hull rows; the others enter lazily once violated.
  std::vector<std::vector<int>> sorted;
  for (std::vector<int> cols : supports) {
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    if (!cols.empty()) sorted.push_back(std::move(cols));
  }
  std::vector<const Row*> pending;
  for (const Row& row : instance.rows) {
    const bool implied = std::any_of(
        sorted.begin(), sorted.end(), [&](const std::vector<int>& cols) {
          return std::all_of(row.terms.begin(), row.terms.end(),
                             [&](const Term& t) {
                               return std::binary_search(cols.begin(),
                                                         cols.end(), t.col);
                             });
        });
    if (!implied) pending.push_back(&row);
  }
  Instance hull_only = instance;
  hull_only.rows.clear();
  internal::Relaxation relax = internal::BuildRelaxation(hull_only, {});
  Simplex& lp = relax.lp;
  std::vector<HullGroup> groups;
  for (std::vector<int>& cols : sorted) {
    HullGroup g;
    g.cols = cols;
    g.proj = Project(*points, cols);
    g.dense.reserve(g.proj.coords().size());
    for (std::int64_t v : g.proj.coords()) g.dense.push_back(static_cast<double>(v));
    g.first_row = internal::AddHullRows(&lp, cols);
    groups.push_back(std::move(g));
  }

  const auto seed = points->point(0);
  for (HullGroup& g : groups) {
    if (options.strategy == ColumnStrategy::kAllPoints) {
      for (std::size_t i = 0; i < g.proj.size(); ++i) {
        internal::AddHullPoint(&lp, g.first_row, g.proj.point(i));
      }
      out.hull_columns += static_cast<std::int64_t>(g.proj.size());
    } else {
      std::vector<std::int64_t> q(g.cols.size());
      for (std::size_t k = 0; k < q.size(); ++k) q[k] = seed[g.cols[k]];
      internal::AddHullPoint(&lp, g.first_row, q);
      ++out.hull_columns;
    }
  }

  const simd::KernelTable& kernels = simd::Kernels();
  std::vector<double> scores;
  std::vector<double> pi_d;
  std::vector<Rational> pi;
  while (true) {
    out.status = lp.Solve();
    ++out.pricing_rounds;
    if (out.status == LpStatus::kUnbounded && !pending.empty()) {
      for (const Row* row : pending) lp.AddRow(row->terms, row->relation, row->rhs);
      pending.clear();
      continue;
    }
    if (out.status != LpStatus::kOptimal) return out;
    std::int64_t added = 0;
    if (options.strategy == ColumnStrategy::kAllPoints) {
      added = AddViolatedRows(&lp, relax.num_vars, &pending);
      if (added == 0) break;
      continue;
    }
    for (const HullGroup& g : groups) {
      const std::size_t d = g.cols.size();
      pi.resize(d);
      pi_d.resize(d);
      for (std::size_t k = 0; k < d; ++k) {
        pi[k] = lp.row_dual(g.first_row + static_cast<int>(k));
        pi_d[k] = ToDouble(pi[k]);
      }
      const Rational sigma = lp.row_dual(g.first_row + static_cast<int>(d));
      const double sigma_d = ToDouble(sigma);
      scores.resize(g.proj.size());
      kernels.gemv_f64(g.dense.data(), g.proj.size(), d, pi_d.data(),
                       scores.data());
      const double tol = 1e-9 * (1.0 + std::fabs(sigma_d));
      std::vector<std::size_t> cand;
      for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] - sigma_d > tol) cand.push_back(i);
      }
      std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];
      });
      std::size_t taken = 0;
      for (std::size_t i : cand) {
        if (taken == kColumnsPerRound) break;
        if (ReducedCost(g.proj, i, pi, sigma) > 0) {
          internal::AddHullPoint(&lp, g.first_row, g.proj.point(i));
          ++taken;
        }
      }
      if (taken == 0) {
        // The floating screen found nothing; certify with an exact scan.
        std::int64_t best = -1;
        Rational best_rc;
        for (std::size_t i = 0; i < g.proj.size(); ++i) {
          Rational rc = ReducedCost(g.proj, i, pi, sigma);
          if (rc > 0 && (best < 0 || rc > best_rc)) {
            best = static_cast<std::int64_t>(i);
            best_rc = std::move(rc);
          }
        }
        if (best >= 0) {
          internal::AddHullPoint(&lp, g.first_row, g.proj.point(best));
          taken = 1;
        }
      }
      added += static_cast<std::int64_t>(taken);
    }
    out.hull_columns += added;
    if (added == 0 && AddViolatedRows(&lp, relax.num_vars, &pending) == 0) break;
  }
  const Rational z = lp.objective_value();
  out.value = relax.negated ? Rational(-z) : z;
  out.x.reserve(relax.num_vars);
  for (int j = 0; j < relax.num_vars; ++j) out.x.push_back(lp.value(j));
  return out;
}

}  // namespace sparsecut
