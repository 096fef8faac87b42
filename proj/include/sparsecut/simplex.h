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

#ifndef SPARSECUT_SIMPLEX_H_
#define SPARSECUT_SIMPLEX_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sparsecut/instance.h"
#include "sparsecut/rational.h"

namespace sparsecut {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(LpStatus status);

// Exact bounded-variable primal simplex on a condensed (Tucker) tableau.
//
// Maximizes sum_j c_j x_j subject to lower_i <= a_i x <= upper_i and
// lower_j <= x_j <= upper_j. Every row owns a logical variable s_i = a_i x
// whose bounds encode the relation. The tableau holds each basic variable as
// an affine function of the nonbasic ones; nonbasic variables sit at a finite
// bound, or at zero when free.
//
// Phase 1 minimizes the sum of bound violations of the basic variables, so a
// warm start after a bound change or an added row needs no restart. Pricing
// is Dantzig with lowest-id ties; after a run of degenerate steps it switches
// to Bland's rule until the objective moves.
class Simplex {
 public:
  struct Column {
    Rational objective;
    std::optional<Rational> lower;
    std::optional<Rational> upper;
  };
  using Entry = std::pair<int, Rational>;  // (row, coefficient)

  Simplex() = default;

  // Appends a structural column with the given nonzeros in existing rows.
  // Returns its index. The value starts at the bound nearest zero.
  int AddColumn(const Column& column, const std::vector<Entry>& entries);

  // Appends a row over existing structural columns. Returns its index.
  int AddRow(const std::vector<Term>& terms, Relation relation,
             const Rational& rhs);

  void SetBounds(int col, std::optional<Rational> lower,
                 std::optional<Rational> upper);
  void SetObjective(int col, const Rational& value);

  LpStatus Solve();

  int num_columns() const { return static_cast<int>(col_var_.size()); }
  int num_rows() const { return static_cast<int>(row_var_.size()); }
  std::int64_t pivots() const { return pivots_; }

  const Rational& value(int col) const { return vars_[col_var_[col]].value; }
  std::vector<Rational> values() const;
  Rational objective_value() const;
  Rational row_activity(int row) const { return vars_[row_var_[row]].value; }

  // Marginal objective change per unit increase of the row's right-hand side.
  Rational row_dual(int row) const;
  std::optional<Rational> column_lower(int col) const {
    return vars_[col_var_[col]].lower;
  }
  std::optional<Rational> column_upper(int col) const {
    return vars_[col_var_[col]].upper;
  }

 private:
  struct Var {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    Rational value;
    Rational cost;
    bool basic = false;
    int pos = 0;  // tableau row if basic, tableau column otherwise
  };

  void Pivot(int r, int k);
  bool BelowLower(const Var& v) const { return v.lower && v.value < *v.lower; }
  bool AboveUpper(const Var& v) const { return v.upper && v.value > *v.upper; }
  void MoveNonbasic(int k, const Rational& delta);

  std::vector<Var> vars_;
  std::vector<int> col_var_;
  std::vector<int> row_var_;
  std::vector<int> basis_;     // tableau row -> var id
  std::vector<int> nonbasic_;  // tableau column -> var id
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> reduced_;  // objective row over tableau columns
  std::int64_t pivots_ = 0;
};

}  // namespace sparsecut

#endif  // SPARSECUT_SIMPLEX_H_
