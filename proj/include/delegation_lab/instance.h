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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delegation_lab/caps.h"
#include "delegation_lab/element_set.h"
#include "delegation_lab/rational.h"
#include "delegation_lab/set_system.h"

namespace delegation_lab {

// One point of an element's joint (principal, agent) utility distribution.
struct UtilityAtom {
  Rational x;  // principal utility
  Rational y;  // agent utility
  Rational prob;
};

// (element, x, y). Outcome identity is the whole triple.
struct Outcome {
  ElementIndex element = 0;
  Rational x;
  Rational y;

  bool operator==(const Outcome& other) const {
    return element == other.element && x == other.x && y == other.y;
  }
};

// Sorted by (element, x, y); see canonical().
using OutcomeSet = std::vector<Outcome>;

bool outcome_less(const Outcome& a, const Outcome& b);
OutcomeSet canonical(OutcomeSet set);
// Lexicographic over canonical sets; the empty set is smallest.
bool outcome_set_less(const OutcomeSet& a, const OutcomeSet& b);
ElementSet elements_of(const OutcomeSet& set);
Rational total_x(const OutcomeSet& set);
Rational total_y(const OutcomeSet& set);

// A full draw: atom[e] indexes into the support of element e.
struct Realization {
  std::vector<std::size_t> atom;

  bool operator==(const Realization&) const = default;
};

struct Scenario {
  Realization realization;
  Rational probability;
};

// A delegated stochastic probing instance: elements with independent finite
// bivariate distributions, an outer constraint on what may be probed and an
// inner constraint on what may be selected.
//
// Supports are canonicalized on construction: duplicate (x, y) atoms are
// merged by summing their probabilities and atoms are sorted by (x, y).
class Instance {
 public:
  // Throws InputError unless every probability is in (0, 1], each support
  // sums to exactly 1, utilities are nonnegative, ids are unique and both
  // constraints have ground set {0, ..., n-1}.
  Instance(std::vector<std::string> ids, std::vector<std::vector<UtilityAtom>> supports,
           SetSystem outer, SetSystem inner);

  std::size_t size() const { return ids_.size(); }
  ElementSet all() const { return ElementSet::first_n(ids_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(ElementIndex e) const { return ids_.at(e); }
  // Throws InputError for an unknown id.
  ElementIndex index_of(const std::string& id) const;

  const std::vector<UtilityAtom>& support(ElementIndex e) const { return supports_.at(e); }
  const SetSystem& outer() const { return outer_; }
  const SetSystem& inner() const { return inner_; }

  std::optional<std::size_t> atom_index(ElementIndex e, const Rational& x,
                                        const Rational& y) const;
  Outcome outcome(ElementIndex e, std::size_t atom) const;

  // I_F = (F, free, inner|F): elements of F in their original order, ids
  // preserved, outer constraint dropped.
  Instance restrict(ElementSet f) const;

  // A copy with a different outer constraint (same ground set).
  Instance with_outer(SetSystem outer) const;

  // Element ids of a set, in index order.
  std::vector<std::string> ids_of(ElementSet s) const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<UtilityAtom>> supports_;
  SetSystem outer_;
  SetSystem inner_;
};

// Product of support sizes, saturating at UINT64_MAX.
std::uint64_t scenario_count(const Instance& instance);

// Every point of the product support with its probability. The last
// element varies fastest. Throws CapacityError above caps.scenarios.
std::vector<Scenario> enumerate_scenarios(const Instance& instance, const Caps& caps = {});

// Same, over the elements of `f` only; atoms outside `f` are left at 0.
std::vector<Scenario> enumerate_scenarios_over(const Instance& instance, ElementSet f,
                                               const Caps& caps = {});

// The realized outcome of every element of `f`.
OutcomeSet outcomes_of(const Instance& instance, const Realization& r, ElementSet f);

// Distinct elements, inner-feasible element set, every (x, y) an atom.
bool is_inner_feasible_outcome_set(const Instance& instance, const OutcomeSet& set);

}  // namespace delegation_lab
