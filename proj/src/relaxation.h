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

#ifndef SPARSECUT_SRC_RELAXATION_H_
#define SPARSECUT_SRC_RELAXATION_H_

#include <span>
#include <vector>

#include "sparsecut/instance.h"
#include "sparsecut/simplex.h"

namespace sparsecut::internal {

// The LP relaxation as a maximization. Structural columns [0, n) are the
// instance columns; hull multipliers follow. Rows are the instance rows, then
// the cuts, then hull rows.
struct Relaxation {
  Simplex lp;
  int num_vars = 0;
  bool negated = false;  // objective multiplied by -1 for minimization
  int first_cut_row = 0;
};

Relaxation BuildRelaxation(const Instance& instance, std::span<const Cut> cuts);

// Adds rows x_c - sum_k lambda_k p_k[c] = 0 and sum_k lambda_k = 1, with one
// multiplier column per point. Returns the index of the first new row.
int AddHullRows(Simplex* lp, const std::vector<int>& cols);
void AddHullPoint(Simplex* lp, int first_row, std::span<const std::int64_t> p);

}  // namespace sparsecut::internal

#endif  // SPARSECUT_SRC_RELAXATION_H_
