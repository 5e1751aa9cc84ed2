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

#include "delegation_lab/benchmark.h"

#include <string>

#include "delegation_lab/errors.h"

namespace delegation_lab {
namespace {

std::vector<Rational> realized_x(const Instance& instance, const std::vector<std::size_t>& atom,
                                 ElementSet f) {
  std::vector<Rational> weights(instance.size(), 0);
  f.for_each([&](ElementIndex e) { weights[e] = instance.support(e)[atom[e]].x; });
  return weights;
}

}  // namespace

Rational utility_u(const Instance& instance, const Realization& r, ElementSet f) {
  if (!f.is_subset_of(instance.all())) throw InputError("probe set contains unknown elements");
  std::vector<Rational> weights = realized_x(instance, r.atom, f);
  return instance.inner().max_weight_feasible_within(f, weights).value;
}

Rational expected_utility(const Instance& instance, ElementSet f, const Caps& caps) {
  Rational total = 0;
  for (const Scenario& s : enumerate_scenarios_over(instance, f, caps)) {
    total += s.probability * utility_u(instance, s.realization, f);
  }
  return total;
}

AdaptiveValueReport optimal_adaptive_value(const Instance& instance, const Caps& caps) {
  auto stop = [&](const ProbeState& state) {
    std::vector<Rational> weights = realized_x(instance, state.atom, state.probed);
    Rational u = instance.inner().max_weight_feasible_within(state.probed, weights).value;
    return ProbingDp::StopChoice{Payoff{u, u}, 0};
  };
  ProbingDp dp(instance, TieBreakMode::kLexicographic, stop, caps.dp_states);

  AdaptiveValueReport report;
  report.expected_value = dp.root_value().agent;
  report.first_probe = dp.decision(ProbingDp::initial_state(instance));
  report.optimal_probes = dp.decisions();
  report.state_count = dp.state_count();
  return report;
}

NonAdaptiveReport best_nonadaptive_set(const Instance& instance, const Caps& caps) {
  std::vector<ElementSet> feasible;
  instance.all().for_each_subset([&](ElementSet s) {
    if (!instance.outer().is_feasible(s)) return;
    if (feasible.size() >= caps.outer_sets) {
      throw CapacityError("more than " + std::to_string(caps.outer_sets) +
                          " outer-feasible probe sets");
    }
    feasible.push_back(s);
  });

  NonAdaptiveReport report;
  report.candidates = feasible.size();
  bool first = true;
  for (ElementSet s : feasible) {
    Rational value = expected_utility(instance, s, caps);
    bool better = first || value > report.expected_value ||
                  (value == report.expected_value &&
                   (s.size() > report.best_set.size() ||
                    (s.size() == report.best_set.size() &&
                     lexicographically_less(s, report.best_set))));
    if (better) {
      report.best_set = s;
      report.expected_value = value;
      first = false;
    }
  }
  report.adaptive_value = optimal_adaptive_value(instance, caps).expected_value;
  report.ratio_to_adaptive = ratio_or_one(report.expected_value, report.adaptive_value);
  return report;
}

}  // namespace delegation_lab
