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

#include <sstream>

#include "doctest.h"
#include "sparsecut/errors.h"
#include "sparsecut/instance.h"
#include "sparsecut/rational.h"
#include "sparsecut/smilp.h"

using namespace sparsecut;

TEST_CASE("rational parsing and canonical text") {
  CHECK(ParseRational("3") == 3);
  CHECK(ParseRational("-6/4") == Rational(-3, 2));
  CHECK(ParseRational("+1/1000000") == Rational(1, 1000000));
  CHECK(ToString(Ratio(10, 4)) == "5/2");
  CHECK(ToString(Ratio(-8, 4)) == "-2");
  CHECK_THROWS_AS(ParseRational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ParseRational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(ParseRational(""), std::invalid_argument);
}

TEST_CASE("rational rounding helpers") {
  CHECK(Floor(Rational(-1, 2)) == -1);
  CHECK(Ceil(Rational(-1, 2)) == 0);
  CHECK(FractionalPart(Rational(-1, 3)) == Rational(2, 3));
  CHECK(IsInteger(Ratio(4, 2)));
  std::int64_t v = 0;
  CHECK(ToInt64(Rational(-7), &v));
  CHECK(v == -7);
  CHECK_FALSE(ToInt64(Rational(1, 2), &v));
  CHECK(JoinRationals({Rational(1), Rational(1, 2)}, ",") == "1,1/2");
}

TEST_CASE("MakeRow merges duplicates and drops zeros") {
  const Row r = MakeRow({{2, 1}, {0, 3}, {2, -1}, {1, 0}}, Relation::kLessEqual,
                        Rational(4));
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0].col == 0);
  CHECK(r.terms[0].coef == 3);
}

TEST_CASE("validation names the first offending column") {
  Instance inst = MakeEmptyInstance(Sense::kMaximize, KindTag::kPacking, 3,
                                    VarKind::kInteger, Rational(1));
  inst.objective = {1, 1, 1};
  CHECK(Validate(inst).empty());
  inst.rows.push_back(MakeRow({{0, 1}, {2, -1}}, Relation::kLessEqual, 1));
  const auto d = Validate(inst);
  REQUIRE_FALSE(d.empty());
  CHECK(d.front().message() == "coefficient sign, row 1 column 3");
  CHECK_THROWS_AS(CheckValid(inst), InvariantError);

  inst.rows.clear();
  inst.objective[1] = -1;
  CHECK(Validate(inst).front().message() == "objective sign, column 2");
}

TEST_CASE("covering rows must be >= with nonnegative data") {
  Instance inst = MakeEmptyInstance(Sense::kMinimize, KindTag::kCovering, 2,
                                    VarKind::kInteger, Rational(1));
  inst.objective = {1, 1};
  inst.rows.push_back(MakeRow({{0, 1}, {1, 1}}, Relation::kGreaterEqual, 1));
  CHECK(Validate(inst).empty());
  inst.rows.push_back(MakeRow({{0, 1}}, Relation::kLessEqual, 1));
  CHECK_FALSE(Validate(inst).empty());
}

TEST_CASE("partition validation") {
  BlockPartition p{Axis::kColumns, {{0, 2}, {1}}};
  CHECK(ValidatePartition(p, 3).empty());
  p.blocks = {{0}, {0, 1}};
  CHECK_FALSE(ValidatePartition(p, 3).empty());
  p.blocks = {{0}, {}};
  CHECK_FALSE(ValidatePartition(p, 1).empty());
  CHECK(SingletonPartition(Axis::kRows, 4).num_blocks() == 4);
}

TEST_CASE("cut helpers") {
  Cut cut;
  cut.coeffs = {{0, 1}, {1, Rational(1, 2)}};
  cut.rhs = 1;
  cut.support = {0, 1};
  const Row row = CutToRow(cut);
  CHECK(Satisfies(row, {Rational(1), Rational(0)}));
  CHECK_FALSE(Satisfies(row, {Rational(1), Rational(1)}));
  CHECK(Activity(cut.coeffs, {Rational(1), Rational(1)}) == Rational(3, 2));
}

namespace {

const char* kSample = R"(SMILP 1
# two columns, one row
sense max
kind packing
vars 2
obj 3 1/2
vartypes BI
row <= 7/2 : 1 2 2 1
colblocks 2 : 1 | 2
)";

}  // namespace

TEST_CASE("SMILP parse and canonical round trip") {
  const SmilpDocument doc = ParseSmilp(std::string(kSample));
  const Instance& inst = doc.instance;
  CHECK(inst.num_vars() == 2);
  CHECK(inst.objective[1] == Rational(1, 2));
  CHECK(inst.bounds[0].upper == Rational(1));
  CHECK_FALSE(inst.bounds[1].upper.has_value());
  CHECK(inst.rows[0].rhs == Rational(7, 2));
  REQUIRE(doc.col_blocks);
  CHECK(doc.col_blocks->num_blocks() == 2);

  const std::string text = FormatSmilp(doc);
  CHECK(text.find('#') == std::string::npos);
  const SmilpDocument again = ParseSmilp(text);
  CHECK(FormatSmilp(again) == text);
}

TEST_CASE("SMILP errors carry line numbers") {
  std::string bad = kSample;
  bad.replace(bad.find("row <= 7/2 : 1 2 2 1"), 20, "row <= 7/2 : 1 2 9 1");
  try {
    ParseSmilp(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 8);
  }
  CHECK_THROWS_AS(ParseSmilp(std::string("SMILP 2\n")), ParseError);
  CHECK_THROWS_AS(ParseSmilp(std::string("")), ParseError);
}

TEST_CASE("SMILP refuses hull-backed instances") {
  SmilpDocument doc;
  doc.instance = MakeEmptyInstance(Sense::kMaximize, KindTag::kGeneral, 2,
                                   VarKind::kInteger, Rational(1));
  doc.instance.objective = {1, 1};
  doc.instance.hulls.push_back({{0, 1}, {{0, 0}, {1, 1}}});
  CHECK_THROWS_AS(FormatSmilp(doc), DomainError);
}
