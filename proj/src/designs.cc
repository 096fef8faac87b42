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

#include "sparsecut/designs.h"

#include <algorithm>

#include "sparsecut/errors.h"

namespace sparsecut {

namespace {

bool Partitions(const SetFamily& family, int universe) {
  std::vector<int> hits(universe, 0);
  for (const auto& s : family) {
    for (int e : s) {
      if (e < 0 || e >= universe || hits[e]++ > 0) return false;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::int64_t IntPow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

bool IsPrime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

AffineDesign MakeAffineDesign(int n) {
  if (!IsPrime(n)) throw DomainError("affine design order must be prime");
  AffineDesign design;
  design.n = n;
  SetFamily vertical(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) vertical[x].push_back(x * n + y);
  }
  design.families.push_back(std::move(vertical));
  for (int s = 0; s + 1 < n; ++s) {
    SetFamily lines(n);
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < n; ++x) lines[b].push_back(x * n + (s * x + b) % n);
      std::sort(lines[b].begin(), lines[b].end());
    }
    design.families.push_back(std::move(lines));
  }
  if (!VerifyAffineDesign(design)) {
    throw InvariantError("affine design failed verification");
  }
  return design;
}

bool VerifyAffineDesign(const AffineDesign& design) {
  const int n = design.n;
  if (static_cast<int>(design.families.size()) != n) return false;
  for (const SetFamily& f : design.families) {
    if (static_cast<int>(f.size()) != n) return false;
    for (const auto& s : f) {
      if (static_cast<int>(s.size()) != n) return false;
    }
    if (!Partitions(f, n * n)) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (const auto& a : design.families[i]) {
        for (const auto& b : design.families[j]) {
          std::vector<int> common;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(common));
          if (common.size() > 1) return false;
        }
      }
    }
  }
  return true;
}

PlanesPartition MakePlanesPartition(int n, std::int64_t cap) {
  if (n < 2) throw DomainError("planes partition needs n >= 2");
  std::int64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= n;
    if (size > cap) throw CapExceededError("planes partition ground set",
                                           static_cast<std::uint64_t>(size),
                                           static_cast<std::uint64_t>(cap));
  }
  PlanesPartition planes;
  planes.n = n;
  planes.families.assign(n, SetFamily(n));
  for (std::int64_t g = 0; g < size; ++g) {
    std::int64_t rest = g;
    for (int i = 0; i < n; ++i) {
      const int digit = static_cast<int>(rest % n);
      rest /= n;
      planes.families[i][digit].push_back(static_cast<int>(g));
    }
  }
  if (!VerifyPlanesPartition(planes)) {
    throw InvariantError("planes partition failed verification");
  }
  return planes;
}

bool VerifyPlanesPartition(const PlanesPartition& planes) {
  const int n = planes.n;
  const std::int64_t size = IntPow(n, n);
  const std::int64_t part = size / n;
  if (static_cast<int>(planes.families.size()) != n) return false;
  for (const SetFamily& f : planes.families) {
    if (static_cast<int>(f.size()) != n) return false;
    for (const auto& s : f) {
      if (static_cast<std::int64_t>(s.size()) != part) return false;
    }
    if (!Partitions(f, static_cast<int>(size))) return false;
  }
  // Membership table: which set of family i holds element e.
  std::vector<std::vector<int>> which(n, std::vector<int>(size));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int e : planes.families[i][j]) which[i][e] = j;
    }
  }
  // Every selection (j_1..j_n) must share an element.
  std::vector<char> hit(size, 0);
  for (std::int64_t e = 0; e < size; ++e) {
    std::int64_t code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * n + which[i][e];
    hit[code] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

bool VerifyCompleteFamilyProperty(const PlanesPartition& planes) {
  const int n = planes.n;
  const int bits = n * n;
  if (bits > 20) throw CapExceededError("sub-family enumeration", bits, 20);
  const std::int64_t size = IntPow(n, n);
  for (std::uint32_t choice = 0; choice < (1u << bits); ++choice) {
    std::vector<char> covered(size, 0);
    bool some_complete = false;
    for (int i = 0; i < n; ++i) {
      const std::uint32_t fam = (choice >> (i * n)) & ((1u << n) - 1);
      if (fam == (1u << n) - 1) some_complete = true;
      for (int j = 0; j < n; ++j) {
        if (!(fam & (1u << j))) continue;
        for (int e : planes.families[i][j]) covered[e] = 1;
      }
    }
    const bool covers =
        std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
    if (covers && !some_complete) return false;
  }
  return true;
}

}  // namespace sparsecut
