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

#include "sparsecut/rational.h"

#include <cctype>
#include <stdexcept>

namespace sparsecut {

namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  const std::size_t slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!IsDigits(num) || !IsDigits(den)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) +
                                "'");
  }
  if (!text.empty() && text.front() == '-') n = -n;
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string ToString(const Rational& value) { return value.get_str(); }

bool IsInteger(const Rational& value) { return value.get_den() == 1; }

Rational Floor(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

Rational Ceil(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

Rational Abs(const Rational& value) { return abs(value); }

double ToDouble(const Rational& value) { return value.get_d(); }

Rational FractionalPart(const Rational& value) {
  return Rational(value - Floor(value));
}

bool ToInt64(const Rational& value, std::int64_t* out) {
  if (!IsInteger(value)) return false;
  const mpz_class& n = value.get_num();
  if (!n.fits_slong_p()) return false;
  *out = n.get_si();
  return true;
}

std::string JoinRationals(const std::vector<Rational>& values,
                          std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += separator;
    out += ToString(values[i]);
  }
  return out;
}

}  // namespace sparsecut
