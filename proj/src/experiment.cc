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

#include "sparsecut/experiment.h"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "sparsecut/constructions.h"
#include "sparsecut/errors.h"

namespace sparsecut {

std::string ToString(SupportsMode mode) {
  return mode == SupportsMode::kSuperSparse ? "ss" : "ns";
}

SupportsMode ParseSupportsMode(const std::string& text) {
  if (text == "ss") return SupportsMode::kSuperSparse;
  if (text == "ns") return SupportsMode::kNaturalSparse;
  throw DomainError("unknown supports mode '" + text + "'");
}

SparsityModel BuildSparsityModel(const Instance& instance,
                                 const BlockPartition* col_blocks,
                                 const BlockPartition* row_blocks,
                                 SupportsMode mode) {
  SparsityModel m;
  const bool by_rows = instance.kind == KindTag::kCovering && row_blocks;
  BlockPartition rows_singletons;
  BlockPartition cols_singletons;
  if (by_rows) {
    m.graph = BuildCoveringGraph(instance, *row_blocks);
  } else {
    if (col_blocks == nullptr) {
      cols_singletons = SingletonPartition(Axis::kColumns, instance.num_vars());
      col_blocks = &cols_singletons;
    }
    m.graph = BuildPackingGraph(instance, *col_blocks);
  }
  if (mode == SupportsMode::kSuperSparse) {
    m.list = SuperSparseList(m.graph);
  } else {
    m.list = NaturalSparseList(instance, m.graph, by_rows ? row_blocks : nullptr);
  }
  m.supports = SupportColumnSets(m.graph, m.list);
  return m;
}

BoundReport ComputeBound(const SmilpDocument& doc, SupportsMode mode) {
  const SparsityModel m = BuildSparsityModel(
      doc.instance, doc.col_blocks ? &*doc.col_blocks : nullptr,
      doc.row_blocks ? &*doc.row_blocks : nullptr, mode);
  return TheoreticalBound(doc.instance.kind, m.graph, m.list);
}

void ValidateExperimentConfig(const ExperimentConfig& c) {
  if (c.count < 1) throw DomainError("instance count must be at least 1");
  if (c.threads < 1) throw DomainError("thread count must be at least 1");
  if (c.estimator.epsilon < 0) throw DomainError("epsilon must be >= 0");
  if (c.estimator.point_cap > c.cap) {
    throw DomainError("estimator point cap exceeds the lattice cap");
  }
  ValidateGenParams(c.params);
}

namespace {

// Fixed-point text with `digits` decimals, rounded half away from zero.
std::string Decimal(const Rational& r, int digits = 5) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = Abs(r) * scale + Rational(1, 2);
  mpz_class q = Floor(scaled).get_num();
  mpz_class whole = q / scale;
  mpz_class frac = q % scale;
  std::string f = frac.get_str();
  f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
  std::string out = (r < 0 && q != 0 ? "-" : "") + whole.get_str();
  if (digits > 0) out += "." + f;
  return out;
}

// Optimum of the instance objective over enumerated points.
Rational OptimumOverPoints(const Instance& inst, const PointSet& points) {
  std::vector<Rational> c = inst.objective;
  const bool minimize = inst.sense == Sense::kMinimize;
  if (minimize) {
    for (Rational& v : c) v = -v;
  }
  const std::int64_t best = ArgMaxOverPoints(points, c);
  if (best < 0) throw DomainError("no integer point");
  return points.Dot(static_cast<std::size_t>(best), inst.objective);
}

}  // namespace

RatioRow EvaluateInstance(const ExperimentConfig& config, int id) {
  RatioRow row;
  row.id = id;
  try {
    GenParams p = config.params;
    p.seed = config.params.seed + static_cast<std::uint64_t>(id - 1);
    const GeneratedInstance g = GenRandomInstance(p);
    const Instance& inst = g.instance;
    const bool minimize = inst.sense == Sense::kMinimize;
    const SparsityModel m =
        BuildSparsityModel(inst, &g.col_blocks, &g.row_blocks, config.mode);
    row.bound = TheoreticalBound(inst.kind, m.graph, m.list).value;

    const LpSolution lp = SolveLp(inst);
    if (lp.status != LpStatus::kOptimal) {
      row.skipped = "relaxation " + ToString(lp.status);
      return row;
    }
    row.z_lp = lp.value;

    std::optional<PointSet> points;
    if (LatticeSize(inst) <= config.cap) {
      points = EnumerateIntegerPoints(inst, EnumerateOptions{config.cap});
      row.z_integer = OptimumOverPoints(inst, *points);
    } else {
      const MilpSolution ip = SolveMilp(inst);
      if (ip.status != LpStatus::kOptimal) {
        row.skipped = "integer program " + ToString(ip.status);
        return row;
      }
      row.z_integer = ip.value;
    }
    const PointSet* pts = points ? &*points : nullptr;

    if (config.oracle) {
      const ClosureValue cv = ExactClosureValue(
          inst, m.supports, ClosureOracleOptions{config.cap}, pts);
      if (cv.status != LpStatus::kOptimal) {
        row.skipped = "closure " + ToString(cv.status);
        return row;
      }
      row.z_closure = cv.value;
    } else {
      const ClosureRun run = EstimateZcut(inst, m.supports, config.estimator, pts);
      row.z_closure = run.z_estimate;
      row.cuts = static_cast<int>(run.cuts_added.size());
    }

    row.sandwich = minimize ? (row.z_lp <= row.z_closure &&
                               row.z_closure <= row.z_integer)
                            : (row.z_integer <= row.z_closure &&
                               row.z_closure <= row.z_lp);
    const Rational& num = minimize ? row.z_integer : row.z_closure;
    const Rational& den = minimize ? row.z_closure : row.z_integer;
    if (den == 0) {
      if (num != 0) {
        row.skipped = "ratio undefined (zero denominator)";
        return row;
      }
      row.ratio = 1;
    } else {
      row.ratio = num / den;
    }
    row.bound_satisfied = row.ratio <= row.bound;
  } catch (const Error& e) {
    row.skipped = e.what();
  }
  return row;
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  ValidateExperimentConfig(config);
  ExperimentReport report;
  report.config = config;
  report.rows.resize(config.count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < config.count; k = next++) {
      report.rows[k] = EvaluateInstance(config, k + 1);
    }
  };
  const int threads = std::min(config.threads, config.count);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return report;
}

bool ExperimentReport::all_ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const RatioRow& r) { return r.ok(); });
}

int ExperimentReport::evaluated() const {
  return static_cast<int>(std::count_if(
      rows.begin(), rows.end(), [](const RatioRow& r) { return !r.skipped; }));
}

std::string ExperimentReport::Csv() const {
  std::ostringstream out;
  out << "id,zI,zClosure,ratio,bound,ok\n";
  for (const RatioRow& r : rows) {
    out << r.id << ',';
    if (r.skipped) {
      out << ",,,,skipped: " << *r.skipped << '\n';
      continue;
    }
    out << ToString(r.z_integer) << ',' << ToString(r.z_closure) << ','
        << ToString(r.ratio) << ',' << ToString(r.bound) << ','
        << (r.ok() ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string ExperimentReport::SummaryLine() const {
  Rational sum;
  Rational max_ratio;
  Rational max_bound;
  int n = 0;
  int violations = 0;
  for (const RatioRow& r : rows) {
    if (r.skipped) continue;
    if (n == 0 || r.ratio > max_ratio) max_ratio = r.ratio;
    if (n == 0 || r.bound > max_bound) max_bound = r.bound;
    sum += r.ratio;
    ++n;
    if (!r.ok()) ++violations;
  }
  std::ostringstream out;
  out << "kind=" << ToString(config.params.kind)
      << " mode=" << ToString(config.mode) << " instances=" << rows.size()
      << " evaluated=" << n;
  if (n > 0) {
    out << " avg_ratio=" << Decimal(sum / n) << " max_ratio=" << Decimal(max_ratio)
        << " max_bound=" << ToString(max_bound);
  }
  out << " violations=" << violations;
  return out.str();
}

std::string ExperimentReport::Markdown() const {
  std::ostringstream out;
  const bool minimize = config.params.kind == KindTag::kCovering;
  const char* ratio_head = minimize ? "zI/zClosure" : "zClosure/zI";
  out << "| Ind | zI | zLP | zClosure | " << ratio_head
      << " | Theoretical bound | ok |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const RatioRow& r : rows) {
    out << "| " << r.id << " | ";
    if (r.skipped) {
      out << " | | | | | skipped: " << *r.skipped << " |\n";
      continue;
    }
    out << ToString(r.z_integer) << " | " << ToString(r.z_lp) << " | "
        << ToString(r.z_closure) << " | " << Decimal(r.ratio) << " | "
        << Decimal(r.bound, 3) << " | " << (r.ok() ? "yes" : "NO") << " |\n";
  }
  out << '\n' << SummaryLine() << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Tight families

TightParams DefaultTightParams(const std::string& family) {
  TightParams p;
  if (family == "3cycle" || family == "general_ss") {
    p.k = 3;
  } else if (family == "star_ss" || family == "tree_ns") {
    p.delta = 2;
    p.n = 5;
  } else if (family == "cycle_ns") {
    p.k = 3;
    p.n = 3;
  } else if (family == "cover") {
    p.k = 2;
    p.n = 3;
  } else if (family == "general_ns") {
    p.k = 2;
  } else if (family == "ssc" || family == "dsc") {
    p.q = 3;
  } else {
    throw DomainError("unknown family '" + family + "'");
  }
  return p;
}

std::string TightCheck::Line() const {
  std::ostringstream out;
  out << family << ' ' << params << ": zI=" << ToString(z_integer) << ' '
      << closure_label << '=' << ToString(z_closure) << " target=("
      << ToString(closure_target) << ", " << ToString(integer_target) << ") "
      << (exact ? "exact" : "bounded") << ' ' << (ok ? "PASS" : "FAIL");
  return out.str();
}

TightCheck VerifyTightness(const std::string& family, const TightParams& p,
                           std::uint64_t cap) {
  TightCheck check;
  check.family = family;
  TightInstance t;
  SupportsMode mode = SupportsMode::kSuperSparse;
  bool lp_only = false;
  std::ostringstream params;
  const Rational& eps = p.eps;
  if (family == "3cycle") {
    t = MakeTight3Cycle(eps);
    params << "eps=" << ToString(eps);
    check.closure_target = 3 - eps;
    check.integer_target = 1;
  } else if (family == "star_ss") {
    t = MakeTightStarSS(p.delta, eps);
    params << "delta=" << p.delta << " eps=" << ToString(eps);
    check.closure_target = 2 * p.delta - p.delta * eps;
    check.integer_target = p.delta;
  } else if (family == "tree_ns") {
    t = MakeTightTreeNS(p.delta, p.n);
    mode = SupportsMode::kNaturalSparse;
    params << "delta=" << p.delta << " n=" << p.n;
    check.closure_target = p.n + Ratio((p.n - 1) * p.delta, p.delta - 1);
    check.integer_target = Ratio(p.n * p.delta - 1, p.delta - 1);
  } else if (family == "cycle_ns") {
    t = MakeTightCycleNS(p.k, p.n);
    mode = SupportsMode::kNaturalSparse;
    params << "K=" << p.k << " n=" << p.n;
    check.closure_target = p.k * p.n;
    check.integer_target = (p.n - 1) * 2 + p.k;
  } else if (family == "cover") {
    t = MakeTightCover(p.k, p.n);
    mode = SupportsMode::kNaturalSparse;
    params << "K=" << p.k << " n=" << p.n;
    check.closure_target = p.n;
    check.integer_target = p.k * p.n - p.k * p.k;
  } else if (family == "general_ss") {
    t = MakeTightGeneralSS(p.k, eps);
    params << "K=" << p.k << " eps=" << ToString(eps);
    check.closure_target = p.k - eps;
    check.integer_target = 1;
  } else if (family == "general_ns") {
    t = MakeTightGeneralNS(p.k);
    mode = SupportsMode::kNaturalSparse;
    params << "K=" << p.k;
    check.closure_target = p.k;
    check.integer_target = 1;
  } else if (family == "ssc") {
    t = MakeSsc(p.q);
    lp_only = true;
    params << "q=" << p.q;
    check.closure_target = 2;
    check.integer_target = p.q;
  } else if (family == "dsc") {
    t = MakeDsc(p.q);
    params << "q=" << p.q;
    check.integer_target = p.q;
  } else {
    throw DomainError("unknown family '" + family + "'");
  }
  check.params = params.str();
  const Instance& inst = t.instance;
  const bool minimize = inst.sense == Sense::kMinimize;

  std::optional<PointSet> points;
  if (LatticeSize(inst) <= cap) {
    points = EnumerateIntegerPoints(inst, EnumerateOptions{cap});
    check.z_integer = OptimumOverPoints(inst, *points);
  } else {
    const MilpSolution ip = SolveMilp(inst);
    if (ip.status != LpStatus::kOptimal) {
      throw InvariantError("integer program " + ToString(ip.status));
    }
    check.z_integer = ip.value;
  }

  if (lp_only) {
    check.closure_label = "zLP";
    check.z_closure = SolveLp(inst).value;
  } else {
    const BlockPartition* cols =
        t.partition.axis == Axis::kColumns ? &t.partition : nullptr;
    const BlockPartition* rows =
        t.partition.axis == Axis::kRows ? &t.partition : nullptr;
    const SparsityModel m = BuildSparsityModel(inst, cols, rows, mode);
    const ClosureValue cv = ExactClosureValue(
        inst, m.supports, ClosureOracleOptions{cap},
        points ? &*points : nullptr);
    if (cv.status != LpStatus::kOptimal) {
      throw InvariantError("closure " + ToString(cv.status));
    }
    check.closure_label = mode == SupportsMode::kSuperSparse ? "zSS" : "zNS";
    if (family == "cover") check.closure_label = "zVC";
    check.z_closure = cv.value;
    if (family == "dsc") check.closure_target = SolveLp(inst).value;
  }

  check.exact = check.z_closure == check.closure_target &&
                check.z_integer == check.integer_target;
  check.ok = minimize ? (check.z_closure <= check.closure_target &&
                         check.z_integer >= check.integer_target)
                      : (check.z_closure >= check.closure_target &&
                         check.z_integer <= check.integer_target);
  return check;
}

}  // namespace sparsecut
