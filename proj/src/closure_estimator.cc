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

#include "sparsecut/closure_estimator.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "relaxation.h"
#include "sparsecut/errors.h"
#include "sparsecut/simd/kernels.h"
#include "sparsecut/simplex.h"

namespace sparsecut {

// ---------------------------------------------------------------------------
// IntegerOracle

IntegerOracle::IntegerOracle(const Instance& instance, std::uint64_t point_cap)
    : instance_(instance) {
  if (instance.all_integer() && instance.all_bounded() &&
      LatticeSize(instance) <= point_cap) {
    owned_ = std::make_shared<PointSet>(
        EnumerateIntegerPoints(instance, EnumerateOptions{point_cap}));
    points_ = owned_.get();
  }
  Densify();
}

void IntegerOracle::Densify() {
  if (points_ == nullptr) return;
  const auto& c = points_->coords();
  dense_.assign(c.begin(), c.end());
  max_abs_ = 0;
  for (std::int64_t v : c) {
    max_abs_ = std::max(max_abs_, std::fabs(static_cast<double>(v)));
  }
}

IntegerOracle::IntegerOracle(const Instance& instance, const PointSet* points)
    : instance_(instance), points_(points) {
  Densify();
}

std::int64_t IntegerOracle::ArgMax(const std::vector<Rational>& c) const {
  const std::size_t m = points_->size();
  if (m == 0) return -1;
  const std::size_t d = static_cast<std::size_t>(points_->dim());
  if (d == 0) return 0;
  std::vector<double> w(d);
  double scale = 1.0;
  for (std::size_t k = 0; k < d; ++k) {
    w[k] = ToDouble(c[k]);
    scale += std::fabs(w[k]) * max_abs_;
  }
  std::vector<double> scores(m);
  simd::Kernels().gemv_f64(dense_.data(), m, d, w.data(), scores.data());
  const double top = *std::max_element(scores.begin(), scores.end());
  // Rounding error is far below this margin, so the exact argmax survives.
  const double floor = top - 1e-9 * scale;
  std::int64_t best = -1;
  Rational best_value;
  for (std::size_t i = 0; i < m; ++i) {
    if (scores[i] < floor) continue;
    Rational v = points_->Dot(i, c);
    if (best < 0 || v > best_value) {
      best = static_cast<std::int64_t>(i);
      best_value = std::move(v);
    }
  }
  return best;
}

std::optional<IntegerOracle::Result> IntegerOracle::Maximize(
    const std::vector<Rational>& objective) const {
  if (points_ != nullptr) {
    const std::int64_t best = ArgMax(objective);
    if (best < 0) return std::nullopt;
    Result out;
    out.value = points_->Dot(static_cast<std::size_t>(best), objective);
    for (std::int64_t v : points_->point(static_cast<std::size_t>(best))) {
      out.x.emplace_back(static_cast<long>(v));
    }
    return out;
  }
  Instance copy = instance_;
  copy.sense = Sense::kMaximize;
  copy.objective = objective;
  MilpSolution sol = SolveMilp(copy);
  if (sol.status == LpStatus::kUnbounded) {
    throw DomainError("integer hull unbounded in the cut direction");
  }
  if (sol.status != LpStatus::kOptimal) return std::nullopt;
  return Result{std::move(sol.value), std::move(sol.x)};
}

// ---------------------------------------------------------------------------
// SupportSeparator

// Columns: alpha+ (d), alpha- (d, absent for packing), beta.
// Row 0: sum alpha+ + alpha- = 1. Row r > 0: p_r . alpha - beta <= 0.
struct SupportSeparator::State {
  Simplex lp;
  int d = 0;
  bool signed_alpha = true;
  int beta = 0;
  bool seeded = false;
  std::size_t pool = 0;

  void AddPoint(const std::vector<Rational>& p) {
    std::vector<Term> terms;
    for (int k = 0; k < d; ++k) {
      if (p[k] == 0) continue;
      terms.push_back({k, p[k]});
      if (signed_alpha) terms.push_back({d + k, -p[k]});
    }
    terms.push_back({beta, Rational(-1)});
    lp.AddRow(terms, Relation::kLessEqual, Rational(0));
    ++pool;
  }
};

SupportSeparator::SupportSeparator(const Instance& instance,
                                   std::vector<int> support)
    : instance_(&instance),
      support_(std::move(support)),
      state_(std::make_unique<State>()) {
  if (support_.empty()) throw DomainError("empty support");
  State& s = *state_;
  s.d = static_cast<int>(support_.size());
  s.signed_alpha = instance.kind != KindTag::kPacking;
  const int width = s.signed_alpha ? 2 * s.d : s.d;
  for (int k = 0; k < width; ++k) {
    s.lp.AddColumn({Rational(0), Rational(0), std::nullopt}, {});
  }
  s.beta = s.lp.AddColumn({Rational(-1), std::nullopt, std::nullopt}, {});
  std::vector<Term> norm;
  for (int k = 0; k < width; ++k) norm.push_back({k, Rational(1)});
  s.lp.AddRow(norm, Relation::kEqual, Rational(1));
}

SupportSeparator::~SupportSeparator() = default;
SupportSeparator::SupportSeparator(SupportSeparator&&) noexcept = default;
SupportSeparator& SupportSeparator::operator=(SupportSeparator&&) noexcept =
    default;

std::size_t SupportSeparator::pool_size() const { return state_->pool; }

std::optional<Cut> SupportSeparator::Separate(
    const std::vector<Rational>& x_star, const EstimatorConfig& config,
    const IntegerOracle& oracle, Rational* violation) {
  State& s = *state_;
  const int n = instance_->num_vars();
  auto restrict = [&](const std::vector<Rational>& x) {
    std::vector<Rational> p(s.d);
    for (int k = 0; k < s.d; ++k) p[k] = x[support_[k]];
    return p;
  };
  if (!s.seeded) {
    // One point of P^I keeps the separation LP bounded.
    auto seed = oracle.Maximize(std::vector<Rational>(n));
    if (!seed) throw DomainError("integer hull is empty");
    s.AddPoint(restrict(seed->x));
    s.seeded = true;
  }
  for (int k = 0; k < s.d; ++k) {
    const Rational& v = x_star[support_[k]];
    s.lp.SetObjective(k, v);
    if (s.signed_alpha) s.lp.SetObjective(s.d + k, -v);
  }

  while (true) {
    if (s.lp.Solve() != LpStatus::kOptimal) {
      throw InvariantError("separation LP not optimal");
    }
    const Rational gap = s.lp.objective_value();
    if (gap <= config.epsilon) return std::nullopt;

    std::vector<Rational> alpha(s.d);
    std::vector<Rational> c(n);
    for (int k = 0; k < s.d; ++k) {
      alpha[k] = s.lp.value(k);
      if (s.signed_alpha) alpha[k] -= s.lp.value(s.d + k);
      c[support_[k]] = alpha[k];
    }
    const Rational beta = s.lp.value(s.beta);
    auto best = oracle.Maximize(c);
    if (!best) throw DomainError("integer hull is empty");

    if (best->value - beta <= config.epsilon) {
      Cut cut;
      cut.support = support_;
      std::sort(cut.support.begin(), cut.support.end());
      cut.rhs = std::max(beta, best->value);
      for (int k = 0; k < s.d; ++k) {
        if (alpha[k] != 0) cut.coeffs.push_back({support_[k], alpha[k]});
      }
      std::sort(cut.coeffs.begin(), cut.coeffs.end(),
                [](const Term& a, const Term& b) { return a.col < b.col; });
      if (violation != nullptr) {
        *violation = Activity(cut.coeffs, x_star) - cut.rhs;
      }
      if (instance_->sense == Sense::kMinimize) {
        for (Term& t : cut.coeffs) t.coef = -t.coef;
        cut.rhs = -cut.rhs;
        cut.relation = Relation::kGreaterEqual;
      }
      return cut;
    }
    s.AddPoint(restrict(best->x));
  }
}

std::optional<Cut> GenerateCut(const Instance& instance,
                               const std::vector<int>& support,
                               const std::vector<Rational>& x_star,
                               const EstimatorConfig& config,
                               const IntegerOracle& oracle,
                               Rational* violation) {
  SupportSeparator sep(instance, support);
  return sep.Separate(x_star, config, oracle, violation);
}

// ---------------------------------------------------------------------------
// Estimation loop

std::string ToString(Termination t) {
  switch (t) {
    case Termination::kIntegralSolution: return "integral_solution";
    case Termination::kStalledAllSupports: return "stalled_all_supports";
    case Termination::kCapHit: return "cap_hit";
  }
  return "?";
}

std::string ClosureRun::TraceCsv() const {
  std::ostringstream out;
  out << "round,support_id,z_value,violation,cut_id\n";
  for (const TraceEntry& e : trace) {
    out << e.round << ',' << e.support_id + 1 << ',' << ToString(e.z) << ',';
    if (e.violation) out << ToString(*e.violation);
    out << ',';
    if (e.cut_id) out << *e.cut_id + 1;
    out << '\n';
  }
  return out.str();
}

namespace {

bool IntegralAt(const Instance& inst, const std::vector<Rational>& x) {
  for (int j = 0; j < inst.num_vars(); ++j) {
    if (inst.is_integer(j) && !IsInteger(x[j])) return false;
  }
  return true;
}

}  // namespace

ClosureRun EstimateZcut(const Instance& instance,
                        const std::vector<std::vector<int>>& supports,
                        const EstimatorConfig& config,
                        const PointSet* points) {
  CheckValid(instance);
  if (supports.empty()) throw DomainError("no supports");
  const IntegerOracle oracle = points != nullptr
                                   ? IntegerOracle(instance, points)
                                   : IntegerOracle(instance, config.point_cap);
  std::vector<SupportSeparator> seps;
  seps.reserve(supports.size());
  for (const auto& s : supports) seps.emplace_back(instance, s);

  internal::Relaxation relax = internal::BuildRelaxation(instance, {});
  const int t = static_cast<int>(supports.size());
  const bool minimize = instance.sense == Sense::kMinimize;
  ClosureRun run;
  std::optional<Rational> last;
  int i = 0;
  int count = 0;
  while (true) {
    const LpStatus status = relax.lp.Solve();
    if (status == LpStatus::kInfeasible) {
      throw DomainError("linear relaxation infeasible");
    }
    if (status == LpStatus::kUnbounded) {
      throw DomainError("linear relaxation unbounded");
    }
    const Rational lp_value = relax.lp.objective_value();
    const Rational z = relax.negated ? Rational(-lp_value) : lp_value;
    run.z_estimate = z;
    ++run.rounds;
    std::vector<Rational> x(relax.num_vars);
    for (int j = 0; j < relax.num_vars; ++j) x[j] = relax.lp.value(j);

    TraceEntry entry;
    entry.round = run.rounds;
    entry.z = z;
    if (IntegralAt(instance, x)) {
      entry.support_id = i;
      run.trace.push_back(entry);
      run.termination = Termination::kIntegralSolution;
      break;
    }
    // Cuts only tighten, so improvement is a one-sided move.
    const bool improved =
        !last || (minimize ? z - *last : *last - z) > config.epsilon;
    last = z;
    if (improved) {
      count = 0;
    } else {
      i = (i + 1) % t;
      if (++count == t) {
        entry.support_id = i;
        run.trace.push_back(entry);
        run.termination = Termination::kStalledAllSupports;
        break;
      }
    }
    entry.support_id = i;
    if (static_cast<int>(run.cuts_added.size()) >= config.max_cuts ||
        run.rounds >= config.max_rounds) {
      run.trace.push_back(entry);
      run.termination = Termination::kCapHit;
      break;
    }
    Rational violation;
    if (auto cut = seps[i].Separate(x, config, oracle, &violation)) {
      entry.violation = violation;
      entry.cut_id = static_cast<int>(run.cuts_added.size());
      relax.lp.AddRow(cut->coeffs, cut->relation, cut->rhs);
      run.cuts_added.push_back(std::move(*cut));
    }
    run.trace.push_back(entry);
  }
  return run;
}

}  // namespace sparsecut
