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

// The non-delegating principal: she probes and selects for herself.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "delegation_lab/caps.h"
#include "delegation_lab/instance.h"
#include "delegation_lab/probing.h"

namespace delegation_lab {

// u(F) = max over inner-feasible G within F of x(G), under realization r.
Rational utility_u(const Instance& instance, const Realization& r, ElementSet f);

// E_r u(F), enumerating only the atoms of F.
Rational expected_utility(const Instance& instance, ElementSet f, const Caps& caps = {});

struct AdaptiveValueReport {
  Rational expected_value;                  // E u(F*)
  std::optional<ElementIndex> first_probe;  // nullopt: probe nothing
  std::vector<ProbeDecision> optimal_probes;
  std::uint64_t state_count = 0;
};

// Exact optimal adaptive probing value. Throws CapacityError beyond
// caps.dp_states.
AdaptiveValueReport optimal_adaptive_value(const Instance& instance, const Caps& caps = {});

struct NonAdaptiveReport {
  ElementSet best_set;
  Rational expected_value;     // E u(best_set)
  Rational adaptive_value;     // E u(F*)
  Rational ratio_to_adaptive;  // 1 when the adaptive value is 0
  std::uint64_t candidates = 0;
};

// Best fixed outer-feasible probe set. Ties prefer larger sets, then the
// lexicographically smaller one. Throws CapacityError beyond
// caps.outer_sets feasible sets.
NonAdaptiveReport best_nonadaptive_set(const Instance& instance, const Caps& caps = {});

}  // namespace delegation_lab
