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

#include <string>
#include <vector>

#include "delegation_lab/instance.h"

namespace delegation_lab {

// Two elements "1" and "2", 1-uniform inner, no outer constraint.
//   element 1: (0, 0) w.p. 1-eps, (1/eps, 1-eps) w.p. eps
//   element 2: (1, 1) w.p. 1
// Lotteries strictly beat deterministic mechanisms here.
Instance table1_instance(const Rational& eps);

// As table1_instance, but the agent values the rare high outcome at 0:
//   element 1: (0, 0) w.p. 1-eps, (1/eps, 0) w.p. eps
// Lotteries do not help here.
Instance table2_instance(const Rational& eps);

// Two iid fair coins "a", "b" with x = y in {0, 1}, 1-uniform inner, no
// outer constraint.
Instance coins2_instance();

// "table1", "table2" (need eps in (0, 1)) or "coins2".
Instance builtin_instance(const std::string& name, const Rational& eps);

std::vector<std::string> builtin_instance_names();

}  // namespace delegation_lab
