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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace delegation_lab {

// Exact arbitrary-precision rational. Every value on an evaluation path
// (utilities, probabilities, expectations, ratios) is one of these.
using Rational = mpq_class;

// Canonical num/den. Throws InputError when den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "n", "n/d" and "-n/d".
Rational parse_rational(std::string_view text);

// "num/den", always with an explicit denominator ("2/1").
std::string to_fraction_string(const Rational& value);

// Decimal rounded half away from zero, computed without floating point.
std::string to_decimal_string(const Rational& value, int places = 6);

// "num/den (≈ d.dddddd)"
std::string render(const Rational& value);

double to_double(const Rational& value);

// Numerator/denominator as int64; throws InputError when they do not fit.
std::int64_t numerator_i64(const Rational& value);
std::int64_t denominator_i64(const Rational& value);

// 1 when den == 0 (the convention for ratios against a zero benchmark).
Rational ratio_or_one(const Rational& num, const Rational& den);

}  // namespace delegation_lab
