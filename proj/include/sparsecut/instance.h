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

#ifndef SPARSECUT_INSTANCE_H_
#define SPARSECUT_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsecut/rational.h"

namespace sparsecut {

enum class Sense { kMaximize, kMinimize };
enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class VarKind { kInteger, kContinuous };
enum class KindTag { kPacking, kCovering, kGeneral };

std::string ToString(Sense sense);
std::string ToString(Relation relation);
std::string ToString(KindTag kind);
KindTag ParseKindTag(const std::string& text);  // throws DomainError

// One nonzero of a sparse row. `col` is 0-based.
struct Term {
  int col;
  Rational coef;
};

// Terms are sorted by column, columns are distinct, coefficients nonzero.
struct Row {
  std::vector<Term> terms;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// `upper` empty means +infinity.
struct VarBounds {
  Rational lower;
  std::optional<Rational> upper;
};

// Extensional constraint: x restricted to `cols` lies in conv(points).
// Every point has cols.size() integer coordinates.
struct HullConstraint {
  std::vector<int> cols;
  std::vector<std::vector<std::int64_t>> points;
};

struct Instance {
  Sense sense = Sense::kMaximize;
  KindTag kind = KindTag::kGeneral;
  std::vector<Rational> objective;
  std::vector<VarKind> var_kind;
  std::vector<VarBounds> bounds;
  std::vector<Row> rows;
  std::vector<HullConstraint> hulls;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  bool is_integer(int col) const { return var_kind[col] == VarKind::kInteger; }
  bool all_integer() const;
  bool all_bounded() const;
};

// Creates `n` variables of the given kind with bounds [0, upper] and zero
// objective.
Instance MakeEmptyInstance(Sense sense, KindTag kind, int n, VarKind var_kind,
                           std::optional<Rational> upper);

// Sorts terms and drops zero coefficients. Duplicate columns are summed.
Row MakeRow(std::vector<Term> terms, Relation relation, Rational rhs);

struct Diagnostic {
  std::string condition;  // e.g. "objective sign"
  std::string location;   // e.g. "column 3" (1-based)
  std::string message() const { return condition + ", " + location; }
};

// Empty result means the instance satisfies every invariant of its kind.
std::vector<Diagnostic> Validate(const Instance& instance);

// Throws InvariantError naming the first diagnostic.
void CheckValid(const Instance& instance);

enum class Axis { kColumns, kRows };

// Disjoint nonempty blocks covering [0, extent) along one axis.
struct BlockPartition {
  Axis axis = Axis::kColumns;
  std::vector<std::vector<int>> blocks;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
};

std::vector<Diagnostic> ValidatePartition(const BlockPartition& partition,
                                          int extent);
void CheckValidPartition(const BlockPartition& partition, int extent);

// Partition of [0, n) into singletons.
BlockPartition SingletonPartition(Axis axis, int n);

// Inequality over a support. `coeffs` is sorted, each col in `support`.
struct Cut {
  std::vector<Term> coeffs;
  Rational rhs;
  Relation relation = Relation::kLessEqual;
  std::vector<int> support;
};

Row CutToRow(const Cut& cut);

// Exact test of `row` at `x`.
bool Satisfies(const Row& row, const std::vector<Rational>& x);
Rational Activity(const std::vector<Term>& terms,
                  const std::vector<Rational>& x);

}  // namespace sparsecut

#endif  // SPARSECUT_INSTANCE_H_
