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
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "delegation_lab/element_set.h"
#include "delegation_lab/rational.h"

namespace delegation_lab {

struct WeightedSet {
  ElementSet set;
  Rational value;
};

// A downward-closed set system (E, I) over element indices.
//
// The empty set is always feasible and feasibility is closed under taking
// subsets. Uniform and partition kinds are downward closed by their
// definition; explicit families are stored as the antichain of their
// maximal members, so closure holds by construction; intersections inherit
// it from their parts.
//
// Values are immutable after construction.
class SetSystem {
 public:
  // The trivial system: every subset of the ground set is feasible.
  struct Free {};
  struct Uniform {
    std::size_t k = 0;
  };
  // Disjoint blocks with per-block capacities. Ground elements outside every
  // block are unconstrained.
  struct Partition {
    std::vector<ElementSet> blocks;
    std::vector<std::size_t> caps;
  };
  struct Explicit {
    std::vector<ElementSet> maximal;  // antichain, sorted lexicographically
  };
  struct Intersection {
    std::vector<SetSystem> parts;
  };
  using Kind = std::variant<Free, Uniform, Partition, Explicit, Intersection>;

  static SetSystem free(ElementSet ground);
  static SetSystem uniform(ElementSet ground, std::size_t k);
  static SetSystem partition(ElementSet ground, std::vector<ElementSet> blocks,
                             std::vector<std::size_t> caps);
  // `feasible` may list any sets (not necessarily maximal); the stored
  // family is their downward closure.
  static SetSystem explicit_family(ElementSet ground, std::vector<ElementSet> feasible);
  static SetSystem intersection(ElementSet ground, std::vector<SetSystem> parts);

  ElementSet ground() const { return ground_; }
  const Kind& kind() const { return kind_; }

  // Throws InputError when `subset` is not contained in the ground set.
  bool is_feasible(ElementSet subset) const;

  // M|F. Throws InputError when F is not contained in the ground set.
  SetSystem restrict(ElementSet f) const;

  // Renames element `e` to `mapping[e]` for every ground element. The
  // mapping must be injective on the ground set.
  SetSystem relabel(std::span<const ElementIndex> mapping) const;

  // A feasible set of maximum total weight, with that weight. `weights` is
  // indexed by element and must cover the ground set. Uniform, partition and
  // free systems use the matroid greedy algorithm (decreasing weight, ties
  // to the lower index); explicit and intersection systems search
  // exhaustively and break ties toward the lexicographically smallest set.
  // Zero-weight elements are never selected. Throws InputError on a
  // negative weight.
  WeightedSet max_weight_feasible(std::span<const Rational> weights) const;

  // Same, restricted to subsets of `within` (which must lie in the ground
  // set). Equivalent to restrict(within).max_weight_feasible(weights).
  WeightedSet max_weight_feasible_within(ElementSet within,
                                         std::span<const Rational> weights) const;

  // True for the kinds where greedy is exact.
  bool is_greedy_exact() const;

 private:
  SetSystem(ElementSet ground, Kind kind) : ground_(ground), kind_(std::move(kind)) {}

  bool feasible_unchecked(ElementSet subset) const;
  WeightedSet greedy(ElementSet within, std::span<const Rational> weights) const;
  WeightedSet exhaustive(ElementSet within, std::span<const Rational> weights) const;

  ElementSet ground_;
  Kind kind_;
};

// Reduces a family to its maximal members, sorted lexicographically and
// deduplicated.
std::vector<ElementSet> maximal_antichain(std::vector<ElementSet> sets);

// True when all singletons of the ground set are feasible and no pair is.
bool is_one_uniform(const SetSystem& system);

// True when swapping a and b maps feasible sets onto feasible sets.
bool is_invariant_under_swap(const SetSystem& system, ElementIndex a, ElementIndex b);

}  // namespace delegation_lab
