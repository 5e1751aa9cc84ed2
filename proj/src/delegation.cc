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

#include "delegation_lab/delegation.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "delegation_lab/errors.h"

namespace delegation_lab {
namespace {

// Subsets of {0, ..., k-1} as bitmasks, in lexicographic order of their
// sorted member lists (the empty set first).
const std::vector<std::uint64_t>& canonical_masks(std::size_t k) {
  static std::vector<std::vector<std::uint64_t>> cache;
  if (cache.size() <= k) cache.resize(k + 1);
  std::vector<std::uint64_t>& masks = cache[k];
  if (masks.empty()) {
    masks.resize(std::size_t{1} << k);
    std::iota(masks.begin(), masks.end(), std::uint64_t{0});
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
      return lexicographically_less(ElementSet::from_bits(a), ElementSet::from_bits(b));
    });
  }
  return masks;
}

bool same_distribution(const std::vector<UtilityAtom>& a, const std::vector<UtilityAtom>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].x != b[i].x || a[i].y != b[i].y || a[i].prob != b[i].prob) return false;
  }
  return true;
}

OutcomeSet swapped(const OutcomeSet& set, ElementIndex a, ElementIndex b) {
  OutcomeSet out = set;
  for (Outcome& o : out) {
    if (o.element == a) {
      o.element = b;
    } else if (o.element == b) {
      o.element = a;
    }
  }
  return canonical(std::move(out));
}

}  // namespace

OutcomeSet agent_best_response(const Instance& instance, const Policy& policy,
                               const OutcomeSet& probed, TieBreakMode mode) {
  OutcomeSet sorted = canonical(probed);
  if (sorted.size() >= 20) throw CapacityError("too many probed outcomes to enumerate proposals");
  OutcomeSet best;
  Payoff best_payoff{0, 0};
  OutcomeSet candidate;
  for (std::uint64_t mask : canonical_masks(sorted.size())) {
    if (mask == 0) continue;
    candidate.clear();
    ElementSet elements;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if ((mask >> i) & 1U) {
        candidate.push_back(sorted[i]);
        elements.insert(sorted[i].element);
      }
    }
    if (!instance.inner().is_feasible(elements)) continue;
    if (!policy.accepts(instance, candidate)) continue;
    Payoff payoff{total_y(candidate), total_x(candidate)};
    if (prefers(payoff, best_payoff, mode)) {
      best = candidate;
      best_payoff = std::move(payoff);
    }
  }
  return best;
}

PolicyEvaluation evaluate_responder(const Instance& instance, TieBreakMode mode,
                                    const Responder& responder, const Rational& benchmark,
                                    const Caps& caps) {
  ProbingDp dp(
      instance, mode,
      [&](const ProbeState& state) {
        return ProbingDp::StopChoice{responder(state.observed(instance)).payoff, 0};
      },
      caps.dp_states);
  Payoff root = dp.root_value();

  PolicyEvaluation eval;
  eval.principal_value = 0;
  eval.agent_value = 0;
  eval.benchmark_value = benchmark;
  for (Scenario& s : enumerate_scenarios(instance, caps)) {
    ProbeState state = ProbingDp::initial_state(instance);
    while (std::optional<ElementIndex> e = dp.decision(state)) {
      state.probed.insert(*e);
      state.atom[*e] = s.realization.atom[*e];
    }
    Response response = responder(state.observed(instance));

    eval.principal_value += s.probability * response.payoff.principal;
    eval.agent_value += s.probability * response.payoff.agent;
    eval.agent.probed_distribution[state.probed] += s.probability;
    eval.traces.push_back(ScenarioTrace{std::move(s.realization), s.probability, state.probed,
                                        std::move(response.proposal), response.lottery,
                                        std::move(response.payoff.principal),
                                        std::move(response.payoff.agent)});
  }
  if (eval.principal_value != root.principal || eval.agent_value != root.agent) {
    throw std::logic_error("forward simulation disagrees with the probing program");
  }
  eval.agent.state_count = dp.state_count();
  eval.agent.first_probe = dp.decision(ProbingDp::initial_state(instance));
  eval.alpha = ratio_or_one(eval.principal_value, benchmark);
  return eval;
}

PolicyEvaluation evaluate_policy(const Instance& instance, const Policy& policy,
                                 TieBreakMode mode, const Caps& caps) {
  return evaluate_policy(instance, policy, mode,
                         optimal_adaptive_value(instance, caps).expected_value, caps);
}

PolicyEvaluation evaluate_policy(const Instance& instance, const Policy& policy,
                                 TieBreakMode mode, const Rational& benchmark,
                                 const Caps& caps) {
  policy.validate(instance);
  Responder responder = [&](const OutcomeSet& observed) {
    OutcomeSet proposal = agent_best_response(instance, policy, observed, mode);
    Payoff payoff{total_y(proposal), total_x(proposal)};
    return Response{std::move(payoff), std::move(proposal), std::nullopt};
  };
  return evaluate_responder(instance, mode, responder, benchmark, caps);
}

Policy policy_from_greedy(GreedyFamily family) {
  return Policy::greedy_projection(std::move(family));
}

Policy threshold_policy(const Instance& instance, const Caps& caps) {
  return Policy::x_threshold(half_competitive_threshold(instance, caps));
}

PolicyBuilder threshold_builder(const Caps& caps) {
  return [caps](const Instance& instance) { return threshold_policy(instance, caps); };
}

PolicyBuilder greedy_builder(const Caps& caps) {
  return [caps](const Instance& instance) {
    return policy_from_greedy(best_greedy_family(instance, caps).family);
  };
}

ComposedPolicy compose_outer(const Instance& instance, const PolicyBuilder& inner_builder,
                             const Caps& caps) {
  NonAdaptiveReport nonadaptive = best_nonadaptive_set(instance, caps);
  ElementSet f = nonadaptive.best_set;
  if (f == instance.all()) {
    return ComposedPolicy{inner_builder(instance), f, std::move(nonadaptive)};
  }

  Instance restricted = instance.restrict(f);
  Policy inner = inner_builder(restricted);
  std::vector<ElementIndex> original = f.to_vector();
  std::vector<OutcomeSet> lifted;
  for (OutcomeSet set : inner.materialize(restricted, caps)) {
    for (Outcome& o : set) o.element = original[o.element];
    lifted.push_back(std::move(set));
  }
  return ComposedPolicy{Policy::explicit_family(std::move(lifted)), f, std::move(nonadaptive)};
}

std::vector<std::vector<ElementIndex>> symmetric_groups(const Instance& instance) {
  const std::size_t n = instance.size();
  std::vector<ElementIndex> parent(n);
  std::iota(parent.begin(), parent.end(), ElementIndex{0});
  auto find = [&](ElementIndex e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = a + 1; b < n; ++b) {
      if (find(a) == find(b)) continue;
      if (!same_distribution(instance.support(a), instance.support(b))) continue;
      if (!is_invariant_under_swap(instance.inner(), a, b)) continue;
      if (!is_invariant_under_swap(instance.outer(), a, b)) continue;
      parent[find(b)] = find(a);
    }
  }
  std::vector<std::vector<ElementIndex>> groups;
  for (ElementIndex e = 0; e < n; ++e) {
    if (find(e) != e) continue;
    std::vector<ElementIndex> group;
    for (ElementIndex f = 0; f < n; ++f) {
      if (find(f) == e) group.push_back(f);
    }
    if (group.size() >= 2) groups.push_back(std::move(group));
  }
  return groups;
}

bool is_symmetric_policy(const Instance& instance, const Policy& policy, const Caps& caps) {
  std::vector<std::vector<ElementIndex>> groups = symmetric_groups(instance);
  if (groups.empty()) return true;
  std::vector<OutcomeSet> family = policy.materialize(instance, caps);
  for (const auto& group : groups) {
    for (std::size_t i = 1; i < group.size(); ++i) {
      for (const OutcomeSet& set : family) {
        OutcomeSet image = swapped(set, group[0], group[i]);
        if (!std::binary_search(family.begin(), family.end(), image, outcome_set_less)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace delegation_lab
