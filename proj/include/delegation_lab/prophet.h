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

// Greedy gamblers against the almighty adversary.
//
// The gambler sees the principal utilities X_e only; agent utilities play
// no role here. A greedy gambler is described by a downward-closed family
// A of sets of (element, x) outcomes and accepts an arriving outcome iff
// the accepted set stays in A. The almighty adversary knows every
// realization and picks the arrival order per scenario; it is modelled
// exactly as the minimum over all |E|! orders.

#pragma once

#include <cstdint>
#include <vector>

#include "delegation_lab/caps.h"
#include "delegation_lab/instance.h"
#include "delegation_lab/set_system.h"

namespace delegation_lab {

struct GamblerOutcome {
  ElementIndex element = 0;
  Rational x;

  bool operator==(const GamblerOutcome& other) const {
    return element == other.element && x == other.x;
  }
};

// Sorted by (element, x).
using GamblerSet = std::vector<GamblerOutcome>;

class GreedyFamily {
 public:
  // Stores the antichain of maximal members of the downward closure of
  // `acceptable`. Throws InputError when a set repeats an element or its
  // element set is infeasible in `constraint`.
  GreedyFamily(SetSystem constraint, std::vector<GamblerSet> acceptable);

  // Singletons {(e, x)} for every realizable x >= tau, constrained by the
  // instance's inner system.
  static GreedyFamily threshold(const Instance& instance, const Rational& tau);

  const SetSystem& constraint() const { return constraint_; }
  const std::vector<GamblerSet>& maximal() const { return maximal_; }

  // Membership in the downward closure; the empty set is always a member.
  bool accepts(const GamblerSet& set) const;

 private:
  SetSystem constraint_;
  std::vector<GamblerSet> maximal_;
};

struct ScenarioGamble {
  Realization realization;
  Rational probability;
  Rational gambler_value;  // minimum over arrival orders
  Rational prophet_value;
  std::vector<ElementIndex> worst_order;  // first order attaining the minimum
};

struct ProphetReport {
  Rational gambler_value;
  Rational prophet_value;
  Rational ratio;  // 1 when prophet_value is 0
  std::vector<ScenarioGamble> scenarios;
};

// Total x the greedy gambler accepts when outcomes arrive in `order`.
Rational run_greedy_gambler(const Instance& instance, const GreedyFamily& family,
                            const Realization& r, const std::vector<ElementIndex>& order);

// Throws CapacityError when |E|! x scenarios exceeds caps.adversary_products.
ProphetReport evaluate_vs_almighty(const Instance& instance, const GreedyFamily& family,
                                   const Caps& caps = {});

// A median of max_e X_e: the smallest value m in the support of the max
// with P[max >= m] >= 1/2 and P[max <= m] >= 1/2. The induced family
// accepts x >= m. Throws UnsupportedError unless the inner constraint is
// 1-uniform.
Rational samuel_cahn_threshold(const Instance& instance);

// The median m above, or the next realizable value above it (equivalently
// strict acceptance x > m), whichever earns the gambler more against the
// almighty adversary; m on ties. Unlike weak acceptance at m alone, this is
// 1/2-competitive on every finite-support instance.
Rational half_competitive_threshold(const Instance& instance, const Caps& caps = {});

// Every nonempty set of realizable (element, x) outcomes with distinct
// elements whose element set is inner-feasible, ordered by size and then
// lexicographically. Throws CapacityError beyond caps.outcome_sets.
std::vector<GamblerSet> realizable_gambler_sets(const Instance& instance, const Caps& caps = {});

struct GreedySearchResult {
  GreedyFamily family;
  ProphetReport report;
  std::uint64_t families_enumerated = 0;
};

// Exhaustive search over downward-closed families of realizable outcome
// sets for the best ratio against the almighty adversary; the first
// maximizer in enumeration order wins. Throws CapacityError beyond
// caps.greedy_families families.
GreedySearchResult best_greedy_family(const Instance& instance, const Caps& caps = {});

}  // namespace delegation_lab
