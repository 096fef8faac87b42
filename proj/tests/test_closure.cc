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

#include <random>

#include "doctest.h"
#include "sparsecut/closure_estimator.h"
#include "sparsecut/constructions.h"
#include "sparsecut/errors.h"
#include "sparsecut/milp.h"
#include "test_util.h"

using namespace sparsecut;
using sparsecut::testing::BruteForceIntegerOpt;
using sparsecut::testing::LatticePoints;
using sparsecut::testing::RandomSmallInstance;

namespace {

std::vector<std::vector<int>> RandomSupports(std::mt19937_64& rng, int n) {
  std::vector<std::vector<int>> out;
  const int count = 1 + static_cast<int>(rng() % 3);
  for (int s = 0; s < count; ++s) {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j) {
      if (rng() % 2) cols.push_back(j);
    }
    if (cols.empty()) cols.push_back(static_cast<int>(rng() % n));
    out.push_back(cols);
  }
  return out;
}

// Dominance in the instance's own sense: a is at least as good as b.
bool AtLeast(const Instance& inst, const Rational& a, const Rational& b) {
  return inst.sense == Sense::kMaximize ? a >= b : a <= b;
}

}  // namespace

TEST_CASE("closure values of the three-cycle instance") {
  const TightInstance t = MakeTight3Cycle(Rational(1, 2));
  const std::vector<std::vector<int>> singles{{0}, {1}, {2}};
  const std::vector<std::vector<int>> full{{0, 1, 2}};
  CHECK(ExactClosureValue(t.instance, singles).value == Rational(5, 2));
  CHECK(ExactClosureValue(t.instance, full).value == 1);
}

TEST_CASE("closure oracle: sandwich, full support, both column routes") {
  std::mt19937_64 rng(3);
  for (KindTag kind : {KindTag::kPacking, KindTag::kCovering, KindTag::kGeneral}) {
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const int m = 1 + static_cast<int>(rng() % 4);
      const Instance inst = RandomSmallInstance(rng, n, m, kind);
      const Rational zi = *BruteForceIntegerOpt(inst);
      const Rational zlp = SolveLp(inst).value;
      const auto supports = RandomSupports(rng, n);

      const ClosureValue gen = ExactClosureValue(inst, supports);
      const ClosureValue all = ExactClosureValue(
          inst, supports, {kDefaultLatticeCap, ColumnStrategy::kAllPoints});
      REQUIRE(gen.status == LpStatus::kOptimal);
      CHECK(gen.value == all.value);
      CHECK(AtLeast(inst, gen.value, zi));
      CHECK(AtLeast(inst, zlp, gen.value));
      for (const Row& row : inst.rows) CHECK(Satisfies(row, gen.x));

      std::vector<int> every(n);
      for (int j = 0; j < n; ++j) every[j] = j;
      CHECK(ExactClosureValue(inst, {every}).value == zi);

      // Adding a support can only tighten.
      auto more = supports;
      more.push_back(RandomSupports(rng, n).front());
      CHECK(AtLeast(inst, gen.value, ExactClosureValue(inst, more).value));
    }
  }
}

TEST_CASE("integer oracle backends agree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = RandomSmallInstance(rng, 4, 3, KindTag::kGeneral, 2);
    const IntegerOracle enumerated(inst, kDefaultLatticeCap);
    const IntegerOracle searched(inst, std::uint64_t{0});
    REQUIRE(enumerated.points() != nullptr);
    REQUIRE(searched.points() == nullptr);
    std::vector<Rational> c(4);
    for (auto& v : c) v = Rational(static_cast<long>(rng() % 9) - 4, 3);
    const auto a = enumerated.Maximize(c);
    const auto b = searched.Maximize(c);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->value == b->value);
  }
}

TEST_CASE("generated cuts are valid, sparse, normalized and violated") {
  std::mt19937_64 rng(17);
  int produced = 0;
  for (KindTag kind : {KindTag::kPacking, KindTag::kCovering, KindTag::kGeneral}) {
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const Instance inst = RandomSmallInstance(rng, n, 3, kind);
      const LpSolution lp = SolveLp(inst);
      const auto points = LatticePoints(inst);
      const IntegerOracle oracle(inst, kDefaultLatticeCap);
      for (const auto& support : RandomSupports(rng, n)) {
        Rational violation;
        const auto cut =
            GenerateCut(inst, support, lp.x, EstimatorConfig{}, oracle, &violation);
        if (!cut) continue;
        ++produced;
        const Row row = CutToRow(*cut);
        for (const auto& p : points) CHECK(Satisfies(row, p));
        CHECK_FALSE(Satisfies(row, lp.x));
        CHECK(violation > 0);
        Rational norm;
        for (const Term& t : cut->coeffs) {
          CHECK(std::find(support.begin(), support.end(), t.col) != support.end());
          norm += Abs(t.coef);
        }
        CHECK(norm == 1);
        if (kind == KindTag::kPacking) {
          for (const Term& t : cut->coeffs) CHECK(t.coef > 0);
        }
        CHECK(cut->relation == (inst.sense == Sense::kMinimize
                                    ? Relation::kGreaterEqual
                                    : Relation::kLessEqual));
        // The right-hand side is attained, so the cut is as tight as it can be.
        bool attained = false;
        for (const auto& p : points) attained |= Activity(cut->coeffs, p) == cut->rhs;
        CHECK(attained);
      }
    }
  }
  CHECK(produced > 10);
}

TEST_CASE("estimator sandwich and soundness on random instances") {
  std::mt19937_64 rng(23);
  for (KindTag kind : {KindTag::kPacking, KindTag::kCovering, KindTag::kGeneral}) {
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const Instance inst = RandomSmallInstance(rng, n, 3, kind);
      const auto supports = RandomSupports(rng, n);
      const ClosureRun run = EstimateZcut(inst, supports);
      const Rational exact = ExactClosureValue(inst, supports).value;
      const Rational zlp = SolveLp(inst).value;
      CHECK(AtLeast(inst, run.z_estimate, exact));
      CHECK(AtLeast(inst, zlp, run.z_estimate));
      CHECK(run.termination != Termination::kCapHit);
      CHECK(run.rounds == static_cast<int>(run.trace.size()));
      const auto points = LatticePoints(inst);
      for (const Cut& cut : run.cuts_added) {
        const Row row = CutToRow(cut);
        for (const auto& p : points) CHECK(Satisfies(row, p));
      }
    }
  }
}

TEST_CASE("estimator stops at once on an integral relaxation") {
  Instance inst = MakeEmptyInstance(Sense::kMaximize, KindTag::kPacking, 2,
                                    VarKind::kInteger, Rational(1));
  inst.objective = {1, 2};
  inst.rows.push_back(MakeRow({{0, 1}, {1, 1}}, Relation::kLessEqual, 1));
  const ClosureRun run = EstimateZcut(inst, {{0}, {1}});
  CHECK(run.termination == Termination::kIntegralSolution);
  CHECK(run.cuts_added.empty());
  CHECK(run.z_estimate == 2);
  CHECK(run.TraceCsv() == "round,support_id,z_value,violation,cut_id\n1,1,2,,\n");
}

TEST_CASE("estimator cap and trace layout") {
  const TightInstance t = MakeTight3Cycle(Rational(1, 2));
  EstimatorConfig cfg;
  cfg.max_cuts = 0;
  const ClosureRun capped = EstimateZcut(t.instance, {{0, 1, 2}}, cfg);
  CHECK(capped.termination == Termination::kCapHit);
  CHECK(capped.z_estimate == Rational(5, 2));

  const ClosureRun full = EstimateZcut(t.instance, {{0, 1, 2}});
  CHECK(full.z_estimate == 1);
  CHECK_FALSE(full.cuts_added.empty());
  const std::string csv = full.TraceCsv();
  CHECK(csv.rfind("round,support_id,z_value,violation,cut_id\n1,1,5/2,", 0) == 0);
  CHECK(ToString(full.termination) == "integral_solution");
}

TEST_CASE("estimator visits every support after the last improvement") {
  const TightInstance t = MakeTight3Cycle(Rational(1, 2));
  const ClosureRun run = EstimateZcut(t.instance, {{0}, {1}, {2}});
  CHECK(run.termination == Termination::kStalledAllSupports);
  CHECK(run.z_estimate == Rational(5, 2));
  REQUIRE(run.trace.size() == 4);
  for (int r = 0; r < 4; ++r) CHECK(run.trace[r].support_id == r % 3);
}

TEST_CASE("estimator rejects bad input") {
  const TightInstance t = MakeTight3Cycle(Rational(1, 2));
  CHECK_THROWS_AS(EstimateZcut(t.instance, {}), DomainError);
  CHECK_THROWS_AS(EstimateZcut(t.instance, {{}}), DomainError);
}
