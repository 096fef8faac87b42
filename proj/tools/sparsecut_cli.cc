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

// sparsecut command-line front end.
//
// Exit codes: 0 when every checked invariant holds, 1 on a violation,
// 2 on a usage or input error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sparsecut/chromatic.h"
#include "sparsecut/closure_estimator.h"
#include "sparsecut/errors.h"
#include "sparsecut/experiment.h"
#include "sparsecut/milp.h"
#include "sparsecut/random_instance.h"
#include "sparsecut/simd/kernels.h"
#include "sparsecut/smilp.h"

namespace sc = sparsecut;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct GenFlags {
  std::string kind = "packing";
  std::uint64_t seed = 1;
  int nv = 3;
  double p = 0.5;
  int sqr = 3;
  int M = 10;
  int M_eps = 10;
  int ObjM = 10;
  bool two_stage = false;

  void Register(CLI::App* app) {
    app->add_option("--kind", kind, "packing, covering or general")
        ->check(CLI::IsMember({"packing", "covering", "general"}));
    app->add_option("--seed", seed, "base seed");
    app->add_option("--nv", nv, "node count");
    app->add_option("--p", p, "edge probability");
    app->add_option("--sqr", sqr, "block size");
    app->add_option("--M", M, "coefficient cap");
    app->add_option("--Meps", M_eps, "noise cap");
    app->add_option("--ObjM", ObjM, "objective cap");
    app->add_flag("--two-stage", two_stage, "star graph with node 1 first");
  }

  sc::GenParams Params() const {
    sc::GenParams g;
    g.kind = sc::ParseKindTag(kind);
    g.seed = seed;
    g.nv = nv;
    g.p = p;
    g.sqr = sqr;
    g.M = M;
    g.M_eps = M_eps;
    g.ObjM = ObjM;
    g.two_stage = two_stage;
    return g;
  }
};

void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sc::DomainError("cannot write '" + path + "'");
  out << text;
}

// A malformed input file is a usage error, not a violated invariant.
sc::SmilpDocument Load(const std::string& path) {
  try {
    return sc::LoadInstance(path);
  } catch (const sc::InvariantError& e) {
    throw sc::DomainError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse cutting-plane closures: bounds, estimates, reports"};
  app.require_subcommand(1);
  std::string isa = "auto";
  app.add_option("--isa", isa, "kernel family: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  std::string out_path;
  std::string mode = "ns";
  std::string eps_text = "1/1000000";
  std::uint64_t cap = sc::kDefaultLatticeCap;
  bool oracle = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "output path, '-' for stdout");
    sub->add_option("--cap", cap, "integer lattice cap");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "support list: ss or ns")
        ->check(CLI::IsMember({"ss", "ns"}));
  };

  // gen
  GenFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen_flags.Register(gen);
  add_common(gen);

  // bounds
  std::string instance_path;
  CLI::App* bounds = app.add_subcommand("bounds", "theoretical ratio bound");
  bounds->add_option("instance", instance_path, "SMILP file")->required();
  add_mode(bounds);
  add_common(bounds);

  // closure
  std::string trace_path;
  CLI::App* closure = app.add_subcommand("closure", "estimate the closure value");
  closure->add_option("instance", instance_path, "SMILP file")->required();
  add_mode(closure);
  add_common(closure);
  closure->add_option("--eps", eps_text, "improvement tolerance p/q");
  closure->add_flag("--oracle", oracle, "also compute the exact closure value");
  closure->add_option("--trace", trace_path, "write the per-round trace CSV");

  // tight
  std::string family;
  std::string tight_eps;
  int t_delta = 0, t_n = 0, t_k = 0, t_q = 0;
  CLI::App* tight = app.add_subcommand("tight", "verify a tight family");
  tight->add_option("family", family, "family name")
      ->required()
      ->check(CLI::IsMember(sc::TightFamilies()));
  tight->add_option("--delta", t_delta, "maximum degree");
  tight->add_option("--n", t_n, "design order");
  tight->add_option("--k", t_k, "node count K");
  tight->add_option("--q", t_q, "ground set exponent");
  tight->add_option("--eps", tight_eps, "construction epsilon p/q");
  add_common(tight);

  // experiment
  GenFlags exp_flags;
  int count = 10;
  int threads = 1;
  int max_cuts = sc::EstimatorConfig{}.max_cuts;
  std::string markdown_path;
  CLI::App* experiment =
      app.add_subcommand("experiment", "ratio report over random instances");
  exp_flags.Register(experiment);
  add_mode(experiment);
  add_common(experiment);
  experiment->add_option("--count", count, "instance count");
  experiment->add_option("--threads", threads, "worker threads");
  experiment->add_option("--eps", eps_text, "improvement tolerance p/q");
  experiment->add_option("--max-cuts", max_cuts, "cut cap per instance");
  experiment->add_flag("--oracle", oracle, "exact closure value");
  experiment->add_option("--markdown", markdown_path, "Markdown summary path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (isa == "scalar") sc::simd::SetIsa(sc::simd::Isa::kScalar);
    if (isa == "avx2") sc::simd::SetIsa(sc::simd::Isa::kAvx2);
    const sc::SupportsMode supports_mode = sc::ParseSupportsMode(mode);

    if (*gen) {
      const sc::GeneratedInstance g = sc::GenRandomInstance(gen_flags.Params());
      sc::SmilpDocument doc{g.instance, g.col_blocks, g.row_blocks};
      WriteOut(out_path, sc::FormatSmilp(doc));
      return kOk;
    }

    if (*bounds) {
      const sc::SmilpDocument doc = Load(instance_path);
      const sc::BoundReport r = sc::ComputeBound(doc, supports_mode);
      WriteOut(out_path, "kind,value,summary\n" + r.CsvRow() + "\n");
      return kOk;
    }

    if (*closure) {
      const sc::SmilpDocument doc = Load(instance_path);
      const sc::Instance& inst = doc.instance;
      const sc::SparsityModel m = sc::BuildSparsityModel(
          inst, doc.col_blocks ? &*doc.col_blocks : nullptr,
          doc.row_blocks ? &*doc.row_blocks : nullptr, supports_mode);
      sc::EstimatorConfig config;
      config.epsilon = sc::ParseRational(eps_text);
      config.point_cap = cap;
      const sc::ClosureRun run = sc::EstimateZcut(inst, m.supports, config);
      std::string text = "estimate=" + sc::ToString(run.z_estimate) +
                         " cuts=" + std::to_string(run.cuts_added.size()) +
                         " rounds=" + std::to_string(run.rounds) +
                         " termination=" + sc::ToString(run.termination) + "\n";
      int code = kOk;
      if (oracle) {
        const sc::ClosureValue cv = sc::ExactClosureValue(
            inst, m.supports, sc::ClosureOracleOptions{cap});
        const sc::Rational gap = inst.sense == sc::Sense::kMaximize
                                     ? sc::Rational(run.z_estimate - cv.value)
                                     : sc::Rational(cv.value - run.z_estimate);
        text += "exact=" + sc::ToString(cv.value) + " gap=" + sc::ToString(gap) +
                "\n";
        if (gap < 0) code = kViolation;
      }
      if (!trace_path.empty()) WriteOut(trace_path, run.TraceCsv());
      WriteOut(out_path, text);
      return code;
    }

    if (*tight) {
      sc::TightParams p = sc::DefaultTightParams(family);
      if (t_delta > 0) p.delta = t_delta;
      if (t_n > 0) p.n = t_n;
      if (t_k > 0) p.k = t_k;
      if (t_q > 0) p.q = t_q;
      if (!tight_eps.empty()) p.eps = sc::ParseRational(tight_eps);
      const sc::TightCheck check = sc::VerifyTightness(family, p, cap);
      WriteOut(out_path, check.Line() + "\n");
      return check.ok ? kOk : kViolation;
    }

    if (*experiment) {
      sc::ExperimentConfig config;
      config.params = exp_flags.Params();
      config.count = count;
      config.mode = supports_mode;
      config.oracle = oracle;
      config.cap = cap;
      config.threads = threads;
      config.estimator.epsilon = sc::ParseRational(eps_text);
      config.estimator.max_cuts = max_cuts;
      config.estimator.point_cap = cap;
      const sc::ExperimentReport report = sc::RunExperiment(config);
      WriteOut(out_path, report.Csv());
      if (!markdown_path.empty()) WriteOut(markdown_path, report.Markdown());
      std::cerr << report.SummaryLine() << '\n';
      return report.all_ok() ? kOk : kViolation;
    }
  } catch (const sc::InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kViolation;
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
