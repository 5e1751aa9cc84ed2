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

#include <variant>
#include <vector>

#include "delegation_lab/caps.h"
#include "delegation_lab/instance.h"
#include "delegation_lab/prophet.h"

namespace delegation_lab {

// A deterministic single-proposal policy: the family of outcome sets the
// principal accepts. The empty proposal is always acceptable and worth 0 to
// both parties.
class Policy {
 public:
  // Members in canonical order, deduplicated, without the empty set.
  struct Explicit {
    std::vector<OutcomeSet> acceptable;
  };
  // Any single inner-feasible outcome with x >= tau.
  struct XThreshold {
    Rational tau;
  };
  // Any inner-feasible outcome set whose (element, x) projection belongs to
  // the family; agent utilities are ignored.
  struct GreedyProjection {
    GreedyFamily family;
  };
  using Kind = std::variant<Explicit, XThreshold, GreedyProjection>;

  static Policy explicit_family(std::vector<OutcomeSet> acceptable);
  static Policy x_threshold(Rational tau);
  static Policy greedy_projection(GreedyFamily family);

  const Kind& kind() const { return kind_; }

  // `set` must be canonical.
  bool accepts(const Instance& instance, const OutcomeSet& set) const;

  // Throws InputError when an explicit member is not a realizable
  // inner-feasible outcome set of `instance`.
  void validate(const Instance& instance) const;

  // The acceptable realizable sets, as an explicit family.
  std::vector<OutcomeSet> materialize(const Instance& instance, const Caps& caps = {}) const;

 private:
  explicit Policy(Kind kind) : kind_(std::move(kind)) {}

  Kind kind_;
};

// Every nonempty realizable outcome set with distinct elements and an
// inner-feasible element set, by size and then canonical order. Throws
// CapacityError beyond caps.outcome_sets.
std::vector<OutcomeSet> realizable_inner_sets(const Instance& instance, const Caps& caps = {});

}  // namespace delegation_lab
