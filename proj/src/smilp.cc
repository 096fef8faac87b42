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

#include "sparsecut/smilp.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sparsecut/errors.h"

namespace sparsecut {

namespace {

std::vector<std::string> Tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

class Parser {
 public:
  explicit Parser(std::istream& in) : in_(in) {}

  SmilpDocument Run() {
    SmilpDocument doc;
    Instance& inst = doc.instance;
    Expect("SMILP", 2);
    if (tokens_[1] != "1") Fail("unsupported version '" + tokens_[1] + "'");
    Expect("sense", 2);
    if (tokens_[1] == "max") {
      inst.sense = Sense::kMaximize;
    } else if (tokens_[1] == "min") {
      inst.sense = Sense::kMinimize;
    } else {
      Fail("sense must be max or min");
    }
    Expect("kind", 2);
    try {
      inst.kind = ParseKindTag(tokens_[1]);
    } catch (const DomainError& e) {
      Fail(e.what());
    }
    Expect("vars", 2);
    const int n = Int(tokens_[1]);
    if (n < 0) Fail("negative variable count");
    Expect("obj", n + 1);
    for (int j = 0; j < n; ++j) inst.objective.push_back(Rat(tokens_[j + 1]));
    if (n > 0) {
      Expect("vartypes", 2);
      if (static_cast<int>(tokens_[1].size()) != n) {
        Fail("vartypes length differs from vars");
      }
      for (char c : tokens_[1]) {
        switch (c) {
          case 'B':
            inst.var_kind.push_back(VarKind::kInteger);
            inst.bounds.push_back({Rational(0), Rational(1)});
            break;
          case 'I':
            inst.var_kind.push_back(VarKind::kInteger);
            inst.bounds.push_back({Rational(0), std::nullopt});
            break;
          case 'C':
            inst.var_kind.push_back(VarKind::kContinuous);
            inst.bounds.push_back({Rational(0), std::nullopt});
            break;
          default:
            Fail(std::string("unknown vartype '") + c + "'");
        }
      }
    } else if (Next() && tokens_[0] == "vartypes") {
      if (tokens_.size() != 1) Fail("vartypes length differs from vars");
      consumed_ = true;
    }
    while (Next()) {
      consumed_ = true;
      const std::string& key = tokens_[0];
      if (key == "row") {
        inst.rows.push_back(ParseRow(n));
      } else if (key == "colblocks" || key == "rowblocks") {
        const bool cols = key == "colblocks";
        std::optional<BlockPartition>& slot =
            cols ? doc.col_blocks : doc.row_blocks;
        if (slot) Fail("duplicate " + key);
        slot = ParseBlocks(cols ? Axis::kColumns : Axis::kRows);
      } else {
        Fail("unexpected keyword '" + key + "'");
      }
    }
    CheckValid(inst);
    if (doc.col_blocks) CheckValidPartition(*doc.col_blocks, n);
    if (doc.row_blocks) CheckValidPartition(*doc.row_blocks, inst.num_rows());
    return doc;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) {
    throw ParseError(line_no_, what);
  }

  // Loads the next nonblank, noncomment line. False at end of input.
  bool Next() {
    if (!consumed_) return !tokens_.empty();
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      tokens_ = Tokenize(line);
      if (!tokens_.empty()) {
        consumed_ = false;
        return true;
      }
    }
    tokens_.clear();
    consumed_ = false;
    return false;
  }

  void Expect(const std::string& key, std::size_t count) {
    if (!Next()) Fail("missing '" + key + "' line");
    if (tokens_[0] != key) Fail("expected '" + key + "'");
    if (tokens_.size() != count) Fail("wrong token count on '" + key + "'");
    consumed_ = true;
  }

  int Int(const std::string& s) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(s, &pos);
      if (pos != s.size()) Fail("not an integer: '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      Fail("not an integer: '" + s + "'");
    }
  }

  Rational Rat(const std::string& s) {
    try {
      return ParseRational(s);
    } catch (const std::invalid_argument& e) {
      Fail(e.what());
    }
  }

  Row ParseRow(int n) {
    if (tokens_.size() < 4 || tokens_[3] != ":") Fail("malformed row");
    Row row;
    if (tokens_[1] == "<=") {
      row.relation = Relation::kLessEqual;
    } else if (tokens_[1] == ">=") {
      row.relation = Relation::kGreaterEqual;
    } else if (tokens_[1] == "=") {
      row.relation = Relation::kEqual;
    } else {
      Fail("bad relation '" + tokens_[1] + "'");
    }
    row.rhs = Rat(tokens_[2]);
    if ((tokens_.size() - 4) % 2 != 0) Fail("row entries must be pairs");
    for (std::size_t k = 4; k < tokens_.size(); k += 2) {
      const int j = Int(tokens_[k]);
      if (j < 1 || j > n) Fail("column index out of range");
      row.terms.push_back({j - 1, Rat(tokens_[k + 1])});
    }
    return row;
  }

  BlockPartition ParseBlocks(Axis axis) {
    if (tokens_.size() < 3 || tokens_[2] != ":") Fail("malformed blocks");
    const int q = Int(tokens_[1]);
    BlockPartition p;
    p.axis = axis;
    p.blocks.emplace_back();
    for (std::size_t k = 3; k < tokens_.size(); ++k) {
      if (tokens_[k] == "|") {
        p.blocks.emplace_back();
      } else {
        p.blocks.back().push_back(Int(tokens_[k]) - 1);
      }
    }
    if (q == 0 && p.blocks.size() == 1 && p.blocks[0].empty()) p.blocks.clear();
    if (p.num_blocks() != q) Fail("block count differs from header");
    return p;
  }

  std::istream& in_;
  std::vector<std::string> tokens_;
  bool consumed_ = true;
  int line_no_ = 0;
};

void AppendBlocks(const char* key, const BlockPartition& p, std::string* out) {
  *out += key;
  *out += " " + std::to_string(p.num_blocks()) + " :";
  for (int b = 0; b < p.num_blocks(); ++b) {
    if (b > 0) *out += " |";
    std::vector<int> block = p.blocks[b];
    std::sort(block.begin(), block.end());
    for (int e : block) *out += " " + std::to_string(e + 1);
  }
  *out += "\n";
}

}  // namespace

SmilpDocument ParseSmilp(std::istream& in) { return Parser(in).Run(); }

SmilpDocument ParseSmilp(const std::string& text) {
  std::istringstream in(text);
  return ParseSmilp(in);
}

SmilpDocument LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return ParseSmilp(in);
}

std::string FormatSmilp(const SmilpDocument& doc) {
  const Instance& inst = doc.instance;
  if (!inst.hulls.empty()) {
    throw DomainError("hull constraints have no SMILP representation");
  }
  std::string out = "SMILP 1\n";
  out += "sense " + ToString(inst.sense) + "\n";
  out += "kind " + ToString(inst.kind) + "\n";
  out += "vars " + std::to_string(inst.num_vars()) + "\n";
  out += "obj";
  for (const Rational& c : inst.objective) out += " " + ToString(c);
  out += "\nvartypes ";
  for (int j = 0; j < inst.num_vars(); ++j) {
    const VarBounds& b = inst.bounds[j];
    if (b.lower != 0) throw DomainError("nonzero lower bound, column " +
                                        std::to_string(j + 1));
    if (inst.is_integer(j) && b.upper && *b.upper == 1) {
      out += 'B';
    } else if (inst.is_integer(j) && !b.upper) {
      out += 'I';
    } else if (!inst.is_integer(j) && !b.upper) {
      out += 'C';
    } else {
      throw DomainError("upper bound not expressible, column " +
                        std::to_string(j + 1));
    }
  }
  out += "\n";
  for (const Row& source : inst.rows) {
    std::vector<Term> terms = source.terms;
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.col < b.col; });
    out += "row " + ToString(source.relation) + " " + ToString(source.rhs) +
           " :";
    for (const Term& t : terms) {
      out += " " + std::to_string(t.col + 1) + " " + ToString(t.coef);
    }
    out += "\n";
  }
  if (doc.col_blocks) AppendBlocks("colblocks", *doc.col_blocks, &out);
  if (doc.row_blocks) AppendBlocks("rowblocks", *doc.row_blocks, &out);
  return out;
}

void SaveInstance(const SmilpDocument& doc, const std::string& path) {
  const std::string text = FormatSmilp(doc);
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace sparsecut
