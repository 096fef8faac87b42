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

#ifndef SPARSECUT_RATIONAL_H_
#define SPARSECUT_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sparsecut {

// Exact arithmetic for every solver path. Values are always canonical.
using Rational = mpq_class;

// p/q in lowest terms. mpq_class(p, q) alone does not canonicalize.
inline Rational Ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q" with an optional sign. Throws std::invalid_argument.
Rational ParseRational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string ToString(const Rational& value);

bool IsInteger(const Rational& value);
Rational Floor(const Rational& value);
Rational Ceil(const Rational& value);
Rational Abs(const Rational& value);
double ToDouble(const Rational& value);

// Fractional distance from the nearest integer below, in [0, 1).
Rational FractionalPart(const Rational& value);

// Returns false if `value` is not an integer or does not fit.
bool ToInt64(const Rational& value, std::int64_t* out);

std::string JoinRationals(const std::vector<Rational>& values,
                          std::string_view separator);

}  // namespace sparsecut

#endif  // SPARSECUT_RATIONAL_H_
