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

#include "sparsecut/simplex.h"

#include <stdexcept>

namespace sparsecut {

namespace {

// Consecutive zero-length steps tolerated before switching to Bland's rule.
constexpr int kDegenerateLimit = 40;

int CmpAbs(const Rational& a, const Rational& b) {
  if (a.get_den() == 1 && b.get_den() == 1) {
    return mpz_cmpabs(a.get_num_mpz_t(), b.get_num_mpz_t());
  }
  const Rational aa = abs(a);
  const Rational bb = abs(b);
  return cmp(aa, bb);
}

}  // namespace

std::string ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

int Simplex::AddColumn(const Column& column,
                       const std::vector<Entry>& entries) {
  const int id = static_cast<int>(vars_.size());
  Var v;
  v.lower = column.lower;
  v.upper = column.upper;
  v.cost = column.objective;
  if (v.lower) {
    v.value = *v.lower;
  } else if (v.upper) {
    v.value = *v.upper;
  }
  const int m = static_cast<int>(basis_.size());
  std::vector<Rational> col(m, Rational(0));
  Rational red = column.objective;
  Rational tmp;
  for (const Entry& e : entries) {
    const Var& s = vars_[row_var_[e.first]];
    if (s.basic) {
      col[s.pos] += e.second;
      continue;
    }
    const int kr = s.pos;
    for (int i = 0; i < m; ++i) {
      const Rational& t = tableau_[i][kr];
      if (t == 0) continue;
      mpq_mul(tmp.get_mpq_t(), t.get_mpq_t(), e.second.get_mpq_t());
      col[i] -= tmp;
    }
    red -= reduced_[kr] * e.second;
  }
  v.basic = false;
  v.pos = static_cast<int>(nonbasic_.size());
  nonbasic_.push_back(id);
  reduced_.push_back(red);
  for (int i = 0; i < m; ++i) {
    if (v.value != 0 && col[i] != 0) {
      vars_[basis_[i]].value += col[i] * v.value;
    }
    tableau_[i].push_back(std::move(col[i]));
  }
  vars_.push_back(std::move(v));
  col_var_.push_back(id);
  return num_columns() - 1;
}

int Simplex::AddRow(const std::vector<Term>& terms, Relation relation,
                    const Rational& rhs) {
  const int id = static_cast<int>(vars_.size());
  Var s;
  if (relation != Relation::kGreaterEqual) s.upper = rhs;
  if (relation != Relation::kLessEqual) s.lower = rhs;
  const int n = static_cast<int>(nonbasic_.size());
  std::vector<Rational> row(n, Rational(0));
  Rational tmp;
  for (const Term& t : terms) {
    const Var& x = vars_[col_var_.at(t.col)];
    s.value += t.coef * x.value;
    if (!x.basic) {
      row[x.pos] += t.coef;
      continue;
    }
    const std::vector<Rational>& src = tableau_[x.pos];
    for (int k = 0; k < n; ++k) {
      if (src[k] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), src[k].get_mpq_t(), t.coef.get_mpq_t());
      row[k] += tmp;
    }
  }
  s.basic = true;
  s.pos = static_cast<int>(basis_.size());
  basis_.push_back(id);
  tableau_.push_back(std::move(row));
  vars_.push_back(std::move(s));
  row_var_.push_back(id);
  return num_rows() - 1;
}

void Simplex::MoveNonbasic(int k, const Rational& delta) {
  vars_[nonbasic_[k]].value += delta;
  Rational tmp;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational& t = tableau_[i][k];
    if (t == 0) continue;
    mpq_mul(tmp.get_mpq_t(), t.get_mpq_t(), delta.get_mpq_t());
    vars_[basis_[i]].value += tmp;
  }
}

void Simplex::SetBounds(int col, std::optional<Rational> lower,
                        std::optional<Rational> upper) {
  const int id = col_var_.at(col);
  Var& v = vars_[id];
  v.lower = std::move(lower);
  v.upper = std::move(upper);
  if (v.basic) return;
  Rational target = v.value;
  if (v.lower && target < *v.lower) target = *v.lower;
  if (v.upper && target > *v.upper) target = *v.upper;
  if (target != v.value) MoveNonbasic(v.pos, Rational(target - v.value));
}

void Simplex::SetObjective(int col, const Rational& value) {
  vars_[col_var_.at(col)].cost = value;
  for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
    Rational d = vars_[nonbasic_[k]].cost;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Rational& c = vars_[basis_[i]].cost;
      if (c != 0 && tableau_[i][k] != 0) d += c * tableau_[i][k];
    }
    reduced_[k] = std::move(d);
  }
}

void Simplex::Pivot(int r, int k) {
  std::vector<Rational>& pivot_row = tableau_[r];
  const Rational inv = 1 / pivot_row[k];
  const Rational neg_inv = -inv;
  std::vector<int> nz;
  for (std::size_t j = 0; j < pivot_row.size(); ++j) {
    if (static_cast<int>(j) == k) continue;
    if (pivot_row[j] == 0) continue;
    pivot_row[j] *= neg_inv;
    nz.push_back(static_cast<int>(j));
  }
  pivot_row[k] = inv;
  Rational tmp;
  auto eliminate = [&](std::vector<Rational>& target) {
    const Rational f = target[k];
    if (f == 0) return;
    for (int j : nz) {
      mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), pivot_row[j].get_mpq_t());
      mpq_add(target[j].get_mpq_t(), target[j].get_mpq_t(), tmp.get_mpq_t());
    }
    mpq_mul(target[k].get_mpq_t(), f.get_mpq_t(), inv.get_mpq_t());
  };
  for (std::size_t i = 0; i < tableau_.size(); ++i) {
    if (static_cast<int>(i) != r) eliminate(tableau_[i]);
  }
  eliminate(reduced_);
  const int leaving = basis_[r];
  const int entering = nonbasic_[k];
  basis_[r] = entering;
  nonbasic_[k] = leaving;
  vars_[entering].basic = true;
  vars_[entering].pos = r;
  vars_[leaving].basic = false;
  vars_[leaving].pos = k;
  ++pivots_;
}

LpStatus Simplex::Solve() {
  int degenerate = 0;
  bool bland = false;
  std::vector<int> sign;
  std::vector<Rational> gradient;
  while (true) {
    const int m = static_cast<int>(basis_.size());
    const int n = static_cast<int>(nonbasic_.size());
    sign.assign(m, 0);
    bool infeasible = false;
    for (int i = 0; i < m; ++i) {
      const Var& b = vars_[basis_[i]];
      if (BelowLower(b)) {
        sign[i] = 1;
        infeasible = true;
      } else if (AboveUpper(b)) {
        sign[i] = -1;
        infeasible = true;
      }
    }
    const std::vector<Rational>* price = &reduced_;
    if (infeasible) {
      gradient.assign(n, Rational(0));
      for (int i = 0; i < m; ++i) {
        if (sign[i] == 0) continue;
        const std::vector<Rational>& row = tableau_[i];
        for (int k = 0; k < n; ++k) {
          if (row[k] == 0) continue;
          if (sign[i] > 0) {
            gradient[k] += row[k];
          } else {
            gradient[k] -= row[k];
          }
        }
      }
      price = &gradient;
    }

    int enter = -1;
    int dir = 0;
    for (int k = 0; k < n; ++k) {
      const Rational& s = (*price)[k];
      const int sg = sgn(s);
      if (sg == 0) continue;
      const Var& v = vars_[nonbasic_[k]];
      const bool movable =
          sg > 0 ? (!v.upper || v.value < *v.upper)
                 : (!v.lower || v.value > *v.lower);
      if (!movable) continue;
      if (enter < 0) {
        enter = k;
        dir = sg;
        continue;
      }
      const bool lower_id = nonbasic_[k] < nonbasic_[enter];
      if (bland) {
        if (lower_id) {
          enter = k;
          dir = sg;
        }
        continue;
      }
      const int cmp = CmpAbs(s, (*price)[enter]);
      if (cmp > 0 || (cmp == 0 && lower_id)) {
        enter = k;
        dir = sg;
      }
    }
    if (enter < 0) return infeasible ? LpStatus::kInfeasible : LpStatus::kOptimal;

    const int enter_id = nonbasic_[enter];
    const Var& ev = vars_[enter_id];
    bool have = false;
    Rational step;
    int leave_row = -1;  // -1 means the entering variable flips bounds
    int leave_id = enter_id;
    if (dir > 0 && ev.upper) {
      step = *ev.upper - ev.value;
      have = true;
    } else if (dir < 0 && ev.lower) {
      step = ev.value - *ev.lower;
      have = true;
    }
    Rational limit;
    for (int i = 0; i < m; ++i) {
      const Rational& t = tableau_[i][enter];
      const int ts = sgn(t) * dir;
      if (ts == 0) continue;
      const Var& b = vars_[basis_[i]];
      bool bounded = false;
      if (sign[i] == 0) {
        if (ts > 0 && b.upper) {
          limit = (*b.upper - b.value) / t;
          bounded = true;
        } else if (ts < 0 && b.lower) {
          limit = (b.value - *b.lower) / t;
          bounded = true;
        }
        if (bounded && limit < 0) limit = -limit;
      } else if (sign[i] > 0 && ts > 0) {
        limit = (*b.lower - b.value) / t;
        if (limit < 0) limit = -limit;
        bounded = true;
      } else if (sign[i] < 0 && ts < 0) {
        limit = (b.value - *b.upper) / t;
        if (limit < 0) limit = -limit;
        bounded = true;
      }
      if (!bounded) continue;
      if (!have || limit < step || (limit == step && basis_[i] < leave_id)) {
        step = limit;
        leave_row = i;
        leave_id = basis_[i];
        have = true;
      }
    }
    if (!have) {
      if (infeasible) throw std::logic_error("phase 1 direction unbounded");
      return LpStatus::kUnbounded;
    }
    if (step == 0) {
      if (++degenerate > kDegenerateLimit) bland = true;
    } else {
      degenerate = 0;
      bland = false;
      MoveNonbasic(enter, dir > 0 ? step : Rational(-step));
    }
    if (leave_row < 0) continue;
    // Snap the leaving variable onto the bound it reached.
    Var& lv = vars_[leave_id];
    const int ts = sgn(tableau_[leave_row][enter]) * dir;
    const bool to_upper = sign[leave_row] == 0 ? ts > 0 : sign[leave_row] < 0;
    lv.value = to_upper ? *lv.upper : *lv.lower;
    Pivot(leave_row, enter);
  }
}

std::vector<Rational> Simplex::values() const {
  std::vector<Rational> out;
  out.reserve(col_var_.size());
  for (int id : col_var_) out.push_back(vars_[id].value);
  return out;
}

Rational Simplex::objective_value() const {
  Rational z(0);
  for (int id : col_var_) {
    if (vars_[id].cost != 0) z += vars_[id].cost * vars_[id].value;
  }
  return z;
}

Rational Simplex::row_dual(int row) const {
  const Var& s = vars_[row_var_[row]];
  if (s.basic) return Rational(0);
  return reduced_[s.pos];
}

}  // namespace sparsecut
