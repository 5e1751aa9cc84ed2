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

// Delegation with a committed policy: the agent probes adaptively to
// maximize his own expected utility and proposes his favorite acceptable
// subset of what he saw; the principal collects x of the proposal.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "delegation_lab/benchmark.h"
#include "delegation_lab/caps.h"
#include "delegation_lab/instance.h"
#include "delegation_lab/policy.h"
#include "delegation_lab/probing.h"
#include "delegation_lab/prophet.h"

namespace delegation_lab {

// The agent's favorite acceptable T within `probed` (canonical, one outcome
// per element). Candidates are visited in canonical order starting with
// the empty set.
OutcomeSet agent_best_response(const Instance& instance, const Policy& policy,
                               const OutcomeSet& probed, TieBreakMode mode);

struct AgentProbeReport {
  std::uint64_t state_count = 0;
  std::optional<ElementIndex> first_probe;
  std::map<ElementSet, Rational> probed_distribution;  // P[F*_R = F]
};

struct ScenarioTrace {
  Realization realization;
  Rational probability;
  ElementSet probed;
  OutcomeSet proposal;                 // deterministic policies
  std::optional<std::size_t> lottery;  // lottery menus; nullopt: nothing
  Rational principal;                  // in expectation over the lottery
  Rational agent;
};

struct PolicyEvaluation {
  Rational principal_value;  // E v_R(F*_R)
  Rational agent_value;
  Rational benchmark_value;  // E u(F*)
  Rational alpha;            // 1 when benchmark_value is 0
  AgentProbeReport agent;
  std::vector<ScenarioTrace> traces;
};

// What the agent does once he stops probing, given what he observed.
struct Response {
  Payoff payoff;
  OutcomeSet proposal;
  std::optional<std::size_t> lottery;
};
using Responder = std::function<Response(const OutcomeSet& observed)>;

// Solves the agent's probing problem for an arbitrary final response and
// replays it on every scenario. Shared by deterministic and lottery
// mechanisms.
PolicyEvaluation evaluate_responder(const Instance& instance, TieBreakMode mode,
                                    const Responder& responder, const Rational& benchmark,
                                    const Caps& caps);

PolicyEvaluation evaluate_policy(const Instance& instance, const Policy& policy,
                                 TieBreakMode mode = TieBreakMode::kAdversarial,
                                 const Caps& caps = {});
// Same, with E u(F*) supplied by the caller.
PolicyEvaluation evaluate_policy(const Instance& instance, const Policy& policy,
                                 TieBreakMode mode, const Rational& benchmark,
                                 const Caps& caps);

Policy policy_from_greedy(GreedyFamily family);

using PolicyBuilder = std::function<Policy(const Instance&)>;

// x >= half_competitive_threshold(instance).
Policy threshold_policy(const Instance& instance, const Caps& caps = {});
PolicyBuilder threshold_builder(const Caps& caps = {});
// policy_from_greedy of best_greedy_family(instance).
PolicyBuilder greedy_builder(const Caps& caps = {});

struct ComposedPolicy {
  Policy policy;
  ElementSet probe_set;  // F
  NonAdaptiveReport nonadaptive;
};

// Builds the inner policy on I_F for the best non-adaptive probe set F and
// lifts it back to the instance. When F is every element the builder's
// policy is returned as is; otherwise it is materialized on I_F, so the
// result only accepts outcomes of F.
ComposedPolicy compose_outer(const Instance& instance, const PolicyBuilder& inner_builder,
                             const Caps& caps = {});

// Maximal groups (size >= 2) of elements with identical distributions that
// both constraints treat interchangeably.
std::vector<std::vector<ElementIndex>> symmetric_groups(const Instance& instance);

// Whether the policy's realizable family is invariant under every
// permutation within each symmetric group.
bool is_symmetric_policy(const Instance& instance, const Policy& policy, const Caps& caps = {});

}  // namespace delegation_lab
