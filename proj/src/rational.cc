// Copyright 2026 The Authors.
//
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

#include "delegation_lab/rational.h"

#include <string>

#include "delegation_lab/errors.h"

namespace delegation_lab {
namespace {

mpz_class from_i64(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through text.
  return mpz_class(std::to_string(v));
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string s(text);
  if (s.empty()) throw InputError("empty integer in rational '" + std::string(whole) + "'");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InputError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s);
}

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) {
    throw InputError("integer " + z.get_str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational r(from_i64(num), from_i64(den));
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int places) {
  mpz_class scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  mpz_class num = abs(value.get_num()) * scale;
  const mpz_class& den = value.get_den();
  mpz_class q = num / den;
  mpz_class r = num % den;
  if (2 * r >= den) q += 1;

  std::string digits = q.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (sgn(value) < 0 && q != 0) digits.insert(0, "-");
  return digits;
}

std::string render(const Rational& value) {
  return to_fraction_string(value) + " (≈ " + to_decimal_string(value) + ")";
}

double to_double(const Rational& value) { return value.get_d(); }

std::int64_t numerator_i64(const Rational& value) { return to_i64(value.get_num()); }

std::int64_t denominator_i64(const Rational& value) { return to_i64(value.get_den()); }

Rational ratio_or_one(const Rational& num, const Rational& den) {
  if (den == 0) return Rational(1);
  return Rational(num / den);
}

}  // namespace delegation_lab
