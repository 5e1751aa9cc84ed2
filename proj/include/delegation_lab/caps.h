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

#include <cstdint>
#include <string>
#include <string_view>

namespace delegation_lab {

// Size limits for the exhaustive computations. Exceeding one raises
// CapacityError naming the offending size.
struct Caps {
  std::uint64_t scenarios = 1'000'000;           // product of support sizes
  std::uint64_t dp_states = 1'000'000;           // memoized probing states
  std::uint64_t outer_sets = 100'000;            // outer-feasible probe sets
  std::uint64_t adversary_products = 1'000'000;  // |E|! x scenarios
  std::uint64_t greedy_families = 100'000;       // downward-closed families
  std::uint64_t policy_candidates = 20;          // realizable Omega_in sets
  std::uint64_t outcome_sets = 1'000'000;        // materialized outcome sets

  // Parses "key=value,key=value" overrides on top of `base`. Keys are the
  // field names above. Values must be positive.
  static Caps parse(std::string_view text, const Caps& base);

  // Applies DELEGATION_LAB_CAPS when set.
  static Caps from_environment();

  std::string to_string() const;
};

}  // namespace delegation_lab
