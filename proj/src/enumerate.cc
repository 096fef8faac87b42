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

#include <algorithm>
#include <limits>
#include <numeric>

#include "sparsecut/errors.h"
#include "sparsecut/milp.h"
#include "sparsecut/simd/kernels.h"

namespace sparsecut {

namespace {

constexpr std::int64_t kMagnitudeLimit = std::int64_t{1} << 61;

std::int64_t Int64Of(const Rational& v, const std::string& what) {
  std::int64_t out = 0;
  if (!ToInt64(v, &out)) throw DomainError(what + " is not a machine integer");
  return out;
}

// Rows scaled to integers, stored column-major for the enumeration kernels.
class LatticeWalker {
 public:
  LatticeWalker(const Instance& inst, PointSet* out)
      : inst_(inst), out_(out), n_(inst.num_vars()), m_(inst.num_rows()) {
    lower_.resize(n_);
    upper_.resize(n_);
    for (int j = 0; j < n_; ++j) {
      lower_[j] = Int64Of(inst.bounds[j].lower, "lower bound");
      upper_[j] = Int64Of(*inst.bounds[j].upper, "upper bound");
    }
    coef_.assign(static_cast<std::size_t>(n_) * m_, 0);
    row_lo_.assign(m_, std::numeric_limits<std::int64_t>::min());
    row_hi_.assign(m_, std::numeric_limits<std::int64_t>::max());
    for (int i = 0; i < m_; ++i) ScaleRow(i);
    for (const HullConstraint& h : inst.hulls) {
      std::vector<std::vector<std::int64_t>> pts = h.points;
      std::sort(pts.begin(), pts.end());
      hull_points_.push_back(std::move(pts));
    }
  }

  void Run() {
    for (int j = 0; j < n_; ++j) {
      if (upper_[j] < lower_[j]) return;
    }
    low_.assign(static_cast<std::size_t>(n_ + 1) * m_, 0);
    high_.assign(static_cast<std::size_t>(n_ + 1) * m_, 0);
    delta_low_.assign(static_cast<std::size_t>(n_) * m_, 0);
    delta_high_.assign(static_cast<std::size_t>(n_) * m_, 0);
    for (int j = 0; j < n_; ++j) {
      for (int i = 0; i < m_; ++i) {
        const std::int64_t a = coef_[Idx(j, i)];
        const std::int64_t al = a * lower_[j];
        const std::int64_t au = a * upper_[j];
        low_[i] += std::min(al, au);
        high_[i] += std::max(al, au);
        delta_low_[Idx(j, i)] = al - std::min(al, au);
        delta_high_[Idx(j, i)] = al - std::max(al, au);
      }
    }
    const simd::KernelTable& k = simd::Kernels();
    if (!k.intervals_meet_i64(low_.data(), high_.data(), row_lo_.data(),
                              row_hi_.data(), m_)) {
      return;
    }
    x_.assign(n_, 0);
    Recurse(0, k);
  }

 private:
  std::size_t Idx(int j, int i) const {
    return static_cast<std::size_t>(j) * m_ + i;
  }

  void ScaleRow(int i) {
    const Row& row = inst_.rows[i];
    mpz_class scale = row.rhs.get_den();
    for (const Term& t : row.terms) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t.coef.get_den_mpz_t());
    }
    const std::string where = "row " + std::to_string(i + 1);
    mpz_class magnitude = 0;
    for (const Term& t : row.terms) {
      const Rational a = t.coef * scale;
      const std::int64_t v = Int64Of(a, where + " coefficient");
      coef_[Idx(t.col, i)] = v;
      const std::int64_t reach =
          std::max(std::abs(lower_[t.col]), std::abs(upper_[t.col]));
      magnitude += abs(a.get_num()) * reach;
    }
    const std::int64_t rhs = Int64Of(Rational(row.rhs * scale), where + " rhs");
    magnitude += std::abs(rhs);
    if (magnitude >= kMagnitudeLimit) {
      throw DomainError(where + " activity exceeds 64-bit enumeration range");
    }
    if (row.relation != Relation::kGreaterEqual) row_hi_[i] = rhs;
    if (row.relation != Relation::kLessEqual) row_lo_[i] = rhs;
  }

  bool InHulls() const {
    std::vector<std::int64_t> q;
    for (std::size_t h = 0; h < inst_.hulls.size(); ++h) {
      const std::vector<int>& cols = inst_.hulls[h].cols;
      q.resize(cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) q[k] = x_[cols[k]];
      if (!std::binary_search(hull_points_[h].begin(), hull_points_[h].end(),
                              q)) {
        return false;
      }
    }
    return true;
  }

  void Recurse(int j, const simd::KernelTable& k) {
    if (j == n_) {
      if (InHulls()) out_->Add(x_);
      return;
    }
    const std::int64_t* low_in = low_.data() + Idx(j, 0);
    const std::int64_t* high_in = high_.data() + Idx(j, 0);
    std::int64_t* low_out = low_.data() + Idx(j + 1, 0);
    std::int64_t* high_out = high_.data() + Idx(j + 1, 0);
    const std::int64_t* col = coef_.data() + Idx(j, 0);
    k.sum_i64(low_out, low_in, delta_low_.data() + Idx(j, 0), m_);
    k.sum_i64(high_out, high_in, delta_high_.data() + Idx(j, 0), m_);
    for (std::int64_t v = lower_[j]; v <= upper_[j]; ++v) {
      x_[j] = v;
      if (k.intervals_meet_i64(low_out, high_out, row_lo_.data(),
                               row_hi_.data(), m_)) {
        Recurse(j + 1, k);
      }
      if (v < upper_[j]) {
        k.add_i64(low_out, col, m_);
        k.add_i64(high_out, col, m_);
      }
    }
  }

  const Instance& inst_;
  PointSet* out_;
  int n_;
  int m_;
  std::vector<std::int64_t> lower_, upper_;
  std::vector<std::int64_t> coef_;
  std::vector<std::int64_t> row_lo_, row_hi_;
  std::vector<std::int64_t> low_, high_;
  std::vector<std::int64_t> delta_low_, delta_high_;
  std::vector<std::vector<std::vector<std::int64_t>>> hull_points_;
  std::vector<std::int64_t> x_;
};

}  // namespace

std::uint64_t LatticeSize(const Instance& inst) {
  std::uint64_t size = 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (int j = 0; j < inst.num_vars(); ++j) {
    if (!inst.bounds[j].upper) {
      throw DomainError("column " + std::to_string(j + 1) + " is unbounded");
    }
    const Rational span = *inst.bounds[j].upper - inst.bounds[j].lower + 1;
    if (span <= 0) return 0;
    const mpz_class w = Floor(span).get_num();
    if (!w.fits_ulong_p()) return kMax;
    const std::uint64_t width = w.get_ui();
    if (size > kMax / width) return kMax;
    size *= width;
  }
  return size;
}

PointSet EnumerateIntegerPoints(const Instance& instance,
                                const EnumerateOptions& options) {
  if (!instance.all_integer()) {
    throw DomainError("enumeration requires every variable integer");
  }
  const std::uint64_t size = LatticeSize(instance);
  if (size > options.cap) {
    throw CapExceededError("integer lattice", size, options.cap);
  }
  PointSet out(instance.num_vars());
  LatticeWalker walker(instance, &out);
  walker.Run();
  return out;
}

}  // namespace sparsecut
