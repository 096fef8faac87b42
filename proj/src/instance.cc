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

#include "sparsecut/instance.h"

#include <algorithm>
#include <utility>

#include "sparsecut/errors.h"

namespace sparsecut {

std::string ToString(Sense sense) {
  return sense == Sense::kMaximize ? "max" : "min";
}

std::string ToString(Relation relation) {
  switch (relation) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kGreaterEqual:
      return ">=";
    case Relation::kEqual:
      return "=";
  }
  return "?";
}

std::string ToString(KindTag kind) {
  switch (kind) {
    case KindTag::kPacking:
      return "packing";
    case KindTag::kCovering:
      return "covering";
    case KindTag::kGeneral:
      return "general";
  }
  return "?";
}

KindTag ParseKindTag(const std::string& text) {
  if (text == "packing") return KindTag::kPacking;
  if (text == "covering") return KindTag::kCovering;
  if (text == "general") return KindTag::kGeneral;
  throw DomainError("unknown kind '" + text + "'");
}

bool Instance::all_integer() const {
  return std::all_of(var_kind.begin(), var_kind.end(),
                     [](VarKind k) { return k == VarKind::kInteger; });
}

bool Instance::all_bounded() const {
  return std::all_of(bounds.begin(), bounds.end(),
                     [](const VarBounds& b) { return b.upper.has_value(); });
}

Instance MakeEmptyInstance(Sense sense, KindTag kind, int n, VarKind var_kind,
                           std::optional<Rational> upper) {
  Instance inst;
  inst.sense = sense;
  inst.kind = kind;
  inst.objective.assign(n, Rational(0));
  inst.var_kind.assign(n, var_kind);
  inst.bounds.assign(n, VarBounds{Rational(0), upper});
  return inst;
}

Row MakeRow(std::vector<Term> terms, Relation relation, Rational rhs) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.col < b.col; });
  Row row;
  row.relation = relation;
  row.rhs = std::move(rhs);
  for (Term& t : terms) {
    if (!row.terms.empty() && row.terms.back().col == t.col) {
      row.terms.back().coef += t.coef;
    } else {
      row.terms.push_back(std::move(t));
    }
  }
  std::erase_if(row.terms, [](const Term& t) { return t.coef == 0; });
  return row;
}

namespace {

std::string Col(int j) { return "column " + std::to_string(j + 1); }
std::string RowName(int i) { return "row " + std::to_string(i + 1); }

}  // namespace

std::vector<Diagnostic> Validate(const Instance& inst) {
  std::vector<Diagnostic> out;
  const int n = inst.num_vars();
  if (static_cast<int>(inst.var_kind.size()) != n ||
      static_cast<int>(inst.bounds.size()) != n) {
    out.push_back({"column count mismatch", "instance"});
    return out;
  }
  for (int j = 0; j < n; ++j) {
    if (inst.objective[j] < 0) out.push_back({"objective sign", Col(j)});
    if (inst.bounds[j].lower != 0) out.push_back({"lower bound", Col(j)});
    if (inst.bounds[j].upper && *inst.bounds[j].upper < inst.bounds[j].lower) {
      out.push_back({"empty bound interval", Col(j)});
    }
  }
  const bool signed_ok = inst.kind == KindTag::kGeneral;
  for (int i = 0; i < inst.num_rows(); ++i) {
    const Row& row = inst.rows[i];
    int prev = -1;
    for (const Term& t : row.terms) {
      if (t.col < 0 || t.col >= n) {
        out.push_back({"column index out of range", RowName(i)});
        continue;
      }
      if (t.col <= prev) {
        out.push_back({"column order", RowName(i) + " " + Col(t.col)});
      }
      prev = t.col;
      if (t.coef == 0) {
        out.push_back({"zero coefficient", RowName(i) + " " + Col(t.col)});
      } else if (!signed_ok && t.coef < 0) {
        out.push_back({"coefficient sign", RowName(i) + " " + Col(t.col)});
      }
    }
    if (!signed_ok && row.rhs < 0) out.push_back({"rhs sign", RowName(i)});
    if (inst.kind == KindTag::kPacking &&
        row.relation != Relation::kLessEqual) {
      out.push_back({"relation", RowName(i)});
    }
    if (inst.kind == KindTag::kCovering &&
        row.relation != Relation::kGreaterEqual) {
      out.push_back({"relation", RowName(i)});
    }
  }
  for (std::size_t h = 0; h < inst.hulls.size(); ++h) {
    const HullConstraint& hull = inst.hulls[h];
    const std::string where = "hull " + std::to_string(h + 1);
    int prev = -1;
    for (int c : hull.cols) {
      if (c <= prev || c >= n) out.push_back({"hull columns", where});
      prev = c;
    }
    for (const auto& p : hull.points) {
      if (p.size() != hull.cols.size()) {
        out.push_back({"hull point dimension", where});
        break;
      }
    }
  }
  return out;
}

void CheckValid(const Instance& instance) {
  const std::vector<Diagnostic> d = Validate(instance);
  if (!d.empty()) throw InvariantError(d.front().message());
}

std::vector<Diagnostic> ValidatePartition(const BlockPartition& partition,
                                          int extent) {
  std::vector<Diagnostic> out;
  const std::string unit = partition.axis == Axis::kColumns ? "column " : "row ";
  std::vector<int> owner(std::max(extent, 0), -1);
  for (int b = 0; b < partition.num_blocks(); ++b) {
    const std::string where = "block " + std::to_string(b + 1);
    if (partition.blocks[b].empty()) out.push_back({"empty block", where});
    for (int e : partition.blocks[b]) {
      if (e < 0 || e >= extent) {
        out.push_back({"index out of range", where});
      } else if (owner[e] != -1) {
        out.push_back({"overlapping blocks", unit + std::to_string(e + 1)});
      } else {
        owner[e] = b;
      }
    }
  }
  for (int e = 0; e < extent; ++e) {
    if (owner[e] == -1) {
      out.push_back({"uncovered", unit + std::to_string(e + 1)});
    }
  }
  return out;
}

void CheckValidPartition(const BlockPartition& partition, int extent) {
  const std::vector<Diagnostic> d = ValidatePartition(partition, extent);
  if (!d.empty()) throw InvariantError(d.front().message());
}

BlockPartition SingletonPartition(Axis axis, int n) {
  BlockPartition p;
  p.axis = axis;
  for (int i = 0; i < n; ++i) p.blocks.push_back({i});
  return p;
}

Row CutToRow(const Cut& cut) {
  Row row;
  row.terms = cut.coeffs;
  row.relation = cut.relation;
  row.rhs = cut.rhs;
  return row;
}

Rational Activity(const std::vector<Term>& terms,
                  const std::vector<Rational>& x) {
  Rational sum(0);
  for (const Term& t : terms) sum += t.coef * x[t.col];
  return sum;
}

bool Satisfies(const Row& row, const std::vector<Rational>& x) {
  const Rational a = Activity(row.terms, x);
  switch (row.relation) {
    case Relation::kLessEqual:
      return a <= row.rhs;
    case Relation::kGreaterEqual:
      return a >= row.rhs;
    case Relation::kEqual:
      return a == row.rhs;
  }
  return false;
}

}  // namespace sparsecut
