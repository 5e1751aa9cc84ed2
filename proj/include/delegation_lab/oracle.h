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

// Brute force over every deterministic policy of a tiny instance.

#pragma once

#include <cstdint>
#include <vector>

#include "delegation_lab/caps.h"
#include "delegation_lab/delegation.h"
#include "delegation_lab/instance.h"
#include "delegation_lab/policy.h"
#include "delegation_lab/probing.h"

namespace delegation_lab {

// Policies are the subsets of the realizable inner-feasible outcome sets.
// Policy i accepts candidate j iff bit j of i is set.
class PolicyEnumerator {
 public:
  // Throws CapacityError when there are more than caps.policy_candidates
  // candidate sets.
  explicit PolicyEnumerator(const Instance& instance, const Caps& caps = {});

  const std::vector<OutcomeSet>& candidates() const { return candidates_; }
  std::uint64_t size() const { return std::uint64_t{1} << candidates_.size(); }
  Policy operator[](std::uint64_t index) const;

 private:
  std::vector<OutcomeSet> candidates_;
};

std::vector<Policy> enumerate_policies(const Instance& instance, const Caps& caps = {});

struct GapReport {
  Policy best_policy;
  Rational alpha_star;
  Rational best_value;  // principal value of best_policy
  Rational benchmark;   // E u(F*)
  std::uint64_t policies_enumerated = 0;
};

// The first policy in enumeration order attaining the best principal value.
GapReport exact_delegation_gap(const Instance& instance,
                               TieBreakMode mode = TieBreakMode::kAdversarial,
                               const Caps& caps = {});

}  // namespace delegation_lab
