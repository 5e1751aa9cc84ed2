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

#include "delegation_lab/oracle.h"

#include <optional>
#include <string>
#include <utility>

#include "delegation_lab/benchmark.h"
#include "delegation_lab/errors.h"

namespace delegation_lab {

PolicyEnumerator::PolicyEnumerator(const Instance& instance, const Caps& caps)
    : candidates_(realizable_inner_sets(instance, caps)) {
  if (candidates_.size() > caps.policy_candidates || candidates_.size() >= 64) {
    throw CapacityError("policy enumeration over " + std::to_string(candidates_.size()) +
                        " candidate sets exceeds the cap of " +
                        std::to_string(caps.policy_candidates));
  }
}

Policy PolicyEnumerator::operator[](std::uint64_t index) const {
  std::vector<OutcomeSet> accepted;
  for (std::size_t j = 0; j < candidates_.size(); ++j) {
    if ((index >> j) & 1U) accepted.push_back(candidates_[j]);
  }
  return Policy::explicit_family(std::move(accepted));
}

std::vector<Policy> enumerate_policies(const Instance& instance, const Caps& caps) {
  PolicyEnumerator policies(instance, caps);
  std::vector<Policy> out;
  out.reserve(policies.size());
  for (std::uint64_t i = 0; i < policies.size(); ++i) out.push_back(policies[i]);
  return out;
}

GapReport exact_delegation_gap(const Instance& instance, TieBreakMode mode, const Caps& caps) {
  PolicyEnumerator policies(instance, caps);
  Rational benchmark = optimal_adaptive_value(instance, caps).expected_value;

  std::optional<GapReport> best;
  for (std::uint64_t i = 0; i < policies.size(); ++i) {
    Policy policy = policies[i];
    PolicyEvaluation eval = evaluate_policy(instance, policy, mode, benchmark, caps);
    if (!best || eval.principal_value > best->best_value) {
      best = GapReport{std::move(policy), eval.alpha, eval.principal_value, benchmark, 0};
    }
  }
  best->policies_enumerated = policies.size();
  return std::move(*best);
}

}  // namespace delegation_lab
