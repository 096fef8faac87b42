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

#include "doctest.h"
#include "sparsecut/constructions.h"
#include "sparsecut/errors.h"
#include "sparsecut/experiment.h"

using namespace sparsecut;

TEST_CASE("experiment config validation") {
  ExperimentConfig c;
  c.count = 0;
  CHECK_THROWS_AS(RunExperiment(c), DomainError);
  c.count = 1;
  c.threads = 0;
  CHECK_THROWS_AS(RunExperiment(c), DomainError);
  c.threads = 1;
  c.estimator.point_cap = c.cap + 1;
  CHECK_THROWS_AS(RunExperiment(c), DomainError);
  CHECK(ParseSupportsMode("ss") == SupportsMode::kSuperSparse);
  CHECK_THROWS_AS(ParseSupportsMode("xx"), DomainError);
}

TEST_CASE("experiment rows obey sandwich and bound; reports are deterministic") {
  for (KindTag kind : {KindTag::kPacking, KindTag::kCovering, KindTag::kGeneral}) {
    ExperimentConfig c;
    c.params.kind = kind;
    c.count = 4;
    c.mode = SupportsMode::kSuperSparse;
    const ExperimentReport r = RunExperiment(c);
    CHECK(r.all_ok());
    CHECK(r.evaluated() == 4);
    for (const RatioRow& row : r.rows) {
      CHECK(row.sandwich);
      CHECK(row.bound_satisfied == (row.ratio <= row.bound));
      CHECK(row.ratio >= 1);
    }
    ExperimentConfig threaded = c;
    threaded.threads = 3;
    const ExperimentReport again = RunExperiment(threaded);
    CHECK(again.Csv() == r.Csv());
    CHECK(again.Markdown() == r.Markdown());
    CHECK(r.Csv().rfind("id,zI,zClosure,ratio,bound,ok\n", 0) == 0);
  }
}

TEST_CASE("oracle mode never reports more than the estimator") {
  ExperimentConfig c;
  c.params.kind = KindTag::kPacking;
  c.count = 5;
  c.mode = SupportsMode::kSuperSparse;
  const ExperimentReport est = RunExperiment(c);
  c.oracle = true;
  const ExperimentReport exact = RunExperiment(c);
  for (int i = 0; i < 5; ++i) {
    CHECK(exact.rows[i].z_closure <= est.rows[i].z_closure);
    CHECK(exact.rows[i].z_integer == est.rows[i].z_integer);
  }
}

TEST_CASE("bounds from a document follow the stored partition") {
  const TightInstance t = MakeTightStarSS(3, Rational(1, 2));
  SmilpDocument doc{t.instance, t.partition, std::nullopt};
  const BoundReport ss = ComputeBound(doc, SupportsMode::kSuperSparse);
  CHECK(ss.value == 2);
  const BoundReport ns = ComputeBound(doc, SupportsMode::kNaturalSparse);
  CHECK(ns.value == Rational(5, 3));
}

TEST_CASE("tight family checks") {
  CHECK(VerifyTightness("3cycle", DefaultTightParams("3cycle")).exact);
  const TightCheck star = VerifyTightness("star_ss", DefaultTightParams("star_ss"));
  CHECK(star.ok);
  CHECK(star.z_closure == 3);
  CHECK(star.z_integer == 2);
  CHECK(star.Line() == "star_ss delta=2 eps=1/2: zI=2 zSS=3 target=(3, 2) exact PASS");
  CHECK(VerifyTightness("general_ss", DefaultTightParams("general_ss")).exact);
  CHECK(VerifyTightness("ssc", DefaultTightParams("ssc")).ok);
  CHECK(VerifyTightness("dsc", DefaultTightParams("dsc")).exact);
  CHECK(VerifyTightness("cover", DefaultTightParams("cover")).ok);
  TightParams p = DefaultTightParams("general_ns");
  p.k = 3;
  CHECK(VerifyTightness("general_ns", p).exact);
  CHECK_THROWS_AS(DefaultTightParams("nope"), DomainError);
}
