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

#include <random>
#include <vector>

#include "delegation_lab/benchmark.h"
#include "delegation_lab/builtin_instances.h"
#include "delegation_lab/delegation.h"
#include "delegation_lab/errors.h"
#include "delegation_lab/oracle.h"
#include "delegation_lab/random_instance.h"
#include "doctest.h"
#include "oracles.h"

namespace delegation_lab {
namespace {

const std::vector<TieBreakMode> kOrderFreeModes = {TieBreakMode::kAdversarial,
                                                   TieBreakMode::kPrincipalFavoring};

oracle::Acceptable acceptable_by(const Instance& inst, const Policy& policy) {
  return [&inst, &policy](const OutcomeSet& s) { return policy.accepts(inst, s); };
}

// A random explicit policy over the realizable inner-feasible sets.
Policy random_explicit_policy(const Instance& inst, std::mt19937_64& rng) {
  std::vector<OutcomeSet> chosen;
  for (const OutcomeSet& s : realizable_inner_sets(inst)) {
    if (rng() % 2 == 0) chosen.push_back(s);
  }
  return Policy::explicit_family(std::move(chosen));
}

Instance safe_or_risky() {
  ElementSet g = ElementSet::first_n(2);
  Rational half(1, 2);
  return Instance({"safe", "risky"}, {{{1, 1, 1}}, {{0, 1, half}, {3, 1, half}}},
                  SetSystem::uniform(g, 1), SetSystem::uniform(g, 1));
}

TEST_CASE("agent best response examples") {
  Rational eps(1, 2);
  Instance t2 = table2_instance(eps);
  Outcome omega1{0, 1 / eps, 0};
  Outcome omega2{1, 1, 1};
  OutcomeSet probed = {omega1, omega2};

  Policy both = Policy::explicit_family({{omega1}, {omega2}});
  CHECK(agent_best_response(t2, both, probed, TieBreakMode::kAdversarial) == OutcomeSet{omega2});

  Policy nothing = Policy::explicit_family({});
  CHECK(agent_best_response(t2, nothing, probed, TieBreakMode::kAdversarial).empty());

  Policy only_rare = Policy::explicit_family({{omega1}});
  CHECK(agent_best_response(t2, only_rare, probed, TieBreakMode::kAdversarial).empty());
  CHECK(agent_best_response(t2, only_rare, probed, TieBreakMode::kPrincipalFavoring) ==
        OutcomeSet{omega1});
  CHECK(agent_best_response(t2, only_rare, probed, TieBreakMode::kLexicographic).empty());
}

TEST_CASE("policy evaluation examples") {
  for (Rational eps : {Rational(1, 10), Rational(1, 4), Rational(1, 2)}) {
    PolicyEvaluation eval = evaluate_policy(table2_instance(eps), Policy::x_threshold(1));
    CHECK(eval.principal_value == 1);
    CHECK(eval.alpha == 1 / (2 - eps));
  }

  Instance coins = coins2_instance();
  Policy everything = Policy::explicit_family(realizable_inner_sets(coins));
  CHECK(evaluate_policy(coins, everything).alpha == 1);

  ElementSet g = ElementSet::first_n(2);
  Rational half(1, 2);
  Instance two({"a", "b"}, {{{2, 0, half}, {0, 0, half}}, {{1, 1, 1}}}, SetSystem::free(g),
               SetSystem::uniform(g, 1));
  GapReport gap = exact_delegation_gap(two, TieBreakMode::kAdversarial);
  CHECK(gap.best_value == 1);
  CHECK(gap.alpha_star == Rational(2, 3));
}

TEST_CASE("evaluation reports the agent's probing") {
  PolicyEvaluation eval = evaluate_policy(safe_or_risky(), Policy::x_threshold(0));
  Rational total = 0;
  for (const auto& [set, p] : eval.agent.probed_distribution) {
    CHECK(set.size() == 1);
    total += p;
  }
  CHECK(total == 1);
  CHECK(eval.traces.size() == 2);
  CHECK(eval.agent.state_count > 0);
}

TEST_CASE("policies from greedy families") {
  Rational eps(1, 4);
  Instance t1 = table1_instance(eps);
  Policy p = policy_from_greedy(GreedyFamily::threshold(t1, 1));
  CHECK(p.accepts(t1, {{0, 1 / eps, 1 - eps}}));
  CHECK(p.accepts(t1, {{1, 1, 1}}));
  CHECK_FALSE(p.accepts(t1, {{0, 0, 0}}));
  CHECK_FALSE(p.accepts(t1, {{0, 1 / eps, 1 - eps}, {1, 1, 1}}));
  PolicyEvaluation eval = evaluate_policy(t1, p);
  CHECK(eval.principal_value == 1);
  CHECK(eval.principal_value >= (2 - eps) / 2);

  Policy empty = policy_from_greedy(GreedyFamily(t1.inner(), {}));
  CHECK(empty.materialize(t1).empty());
  CHECK(empty.accepts(t1, {}));
}

TEST_CASE("explicit policies are validated") {
  Instance coins = coins2_instance();
  Policy bad = Policy::explicit_family({{{0, 5, 5}}});
  CHECK_THROWS_AS(evaluate_policy(coins, bad), InputError);
  Policy pair = Policy::explicit_family({{{0, 1, 1}, {1, 1, 1}}});
  CHECK_THROWS_AS(pair.validate(coins), InputError);
}

TEST_CASE("outer composition examples") {
  Instance t1 = table1_instance(Rational(1, 4));
  ComposedPolicy free = compose_outer(t1, threshold_builder());
  CHECK(free.probe_set == t1.all());
  CHECK(std::holds_alternative<Policy::XThreshold>(free.policy.kind()));

  Instance sr = safe_or_risky();
  ComposedPolicy composed = compose_outer(sr, threshold_builder());
  CHECK(composed.probe_set == ElementSet::of({1}));
  for (const OutcomeSet& s : composed.policy.materialize(sr)) CHECK(s.front().element == 1);
  PolicyEvaluation eval = evaluate_policy(sr, composed.policy);
  CHECK(eval.principal_value >= Rational(3, 4));
}

TEST_CASE("symmetry detection examples") {
  Instance coins = coins2_instance();
  CHECK(symmetric_groups(coins) == std::vector<std::vector<ElementIndex>>{{0, 1}});
  CHECK(is_symmetric_policy(coins, Policy::x_threshold(1)));
  CHECK_FALSE(is_symmetric_policy(coins, Policy::explicit_family({{{0, 1, 1}}})));
  Instance t1 = table1_instance(Rational(1, 4));
  CHECK(symmetric_groups(t1).empty());
  CHECK(is_symmetric_policy(t1, Policy::explicit_family({{{1, 1, 1}}})));
}

TEST_CASE("evaluation agrees with brute-force delegation") {
  std::mt19937_64 rng(101);
  RandomInstanceOptions opts;
  opts.outer = OuterKind::kMatroid;
  opts.positive_agent_utility = false;
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = random_instance(rng, opts);
    std::vector<Policy> policies = {Policy::x_threshold(samuel_cahn_threshold(inst)),
                                    random_explicit_policy(inst, rng),
                                    random_explicit_policy(inst, rng),
                                    policy_from_greedy(oracle::random_greedy_family(inst, rng))};
    for (const Policy& policy : policies) {
      Rational previous = -1;
      for (TieBreakMode mode : kOrderFreeModes) {
        PolicyEvaluation eval = evaluate_policy(inst, policy, mode);
        oracle::Pay brute = oracle::brute_delegation(inst, acceptable_by(inst, policy), mode);
        CHECK(eval.principal_value == brute.principal);
        CHECK(eval.agent_value == brute.agent);
        CHECK(eval.principal_value >= previous);
        previous = eval.principal_value;
      }
    }
  }
}

TEST_CASE("no fixed probe set beats the agent's adaptive strategy") {
  std::mt19937_64 rng(202);
  RandomInstanceOptions opts;
  opts.outer = OuterKind::kMatroid;
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = random_instance(rng, opts);
    Policy policy = random_explicit_policy(inst, rng);
    PolicyEvaluation eval = evaluate_policy(inst, policy, TieBreakMode::kAdversarial);
    inst.all().for_each_subset([&](ElementSet f) {
      if (!inst.outer().is_feasible(f)) return;
      Rational fixed = 0;
      for (const Scenario& s : enumerate_scenarios_over(inst, f)) {
        OutcomeSet proposal = agent_best_response(inst, policy, outcomes_of(inst, s.realization, f),
                                                  TieBreakMode::kAdversarial);
        fixed += s.probability * total_y(proposal);
      }
      CHECK(fixed <= eval.agent_value);
    });
  }
}

TEST_CASE("greedy policies dominate the gambler against the almighty adversary") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = random_instance(rng, RandomInstanceOptions{});
    std::vector<GreedyFamily> families = {
        GreedyFamily::threshold(inst, samuel_cahn_threshold(inst)),
        oracle::random_greedy_family(inst, rng), oracle::random_greedy_family(inst, rng)};
    for (const GreedyFamily& fam : families) {
      Rational gambler = evaluate_vs_almighty(inst, fam).gambler_value;
      CHECK(evaluate_policy(inst, policy_from_greedy(fam)).principal_value >= gambler);
    }
    CHECK(evaluate_policy(inst, threshold_policy(inst)).alpha >= Rational(1, 2));
  }
}

TEST_CASE("composition keeps the inner guarantee up to the adaptivity ratio") {
  std::mt19937_64 rng(404);
  RandomInstanceOptions opts;
  opts.outer = OuterKind::kPartition;
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = random_instance(rng, opts);
    ComposedPolicy composed = compose_outer(inst, threshold_builder());
    PolicyEvaluation eval = evaluate_policy(inst, composed.policy);
    Instance sub = inst.restrict(composed.probe_set);
    Rational inner_alpha = evaluate_policy(sub, threshold_policy(sub)).alpha;
    CHECK(eval.principal_value >=
          inner_alpha * composed.nonadaptive.ratio_to_adaptive * eval.benchmark_value);
    for (const OutcomeSet& s : composed.policy.materialize(inst)) {
      CHECK(elements_of(s).is_subset_of(composed.probe_set));
    }
  }
}

TEST_CASE("greedy policies inherit symmetry") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 30; ++trial) {
    Instance base = random_instance(rng, RandomInstanceOptions{});
    ElementSet g = ElementSet::first_n(3);
    std::vector<std::vector<UtilityAtom>> supports(3, base.support(0));
    Instance iid({"a", "b", "c"}, supports, SetSystem::free(g), SetSystem::uniform(g, 1));
    CHECK(symmetric_groups(iid).size() == 1);
    Policy p = policy_from_greedy(GreedyFamily::threshold(iid, samuel_cahn_threshold(iid)));
    CHECK(is_symmetric_policy(iid, p));
  }
}

}  // namespace
}  // namespace delegation_lab
