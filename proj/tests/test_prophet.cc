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

#include <map>
#include <random>
#include <vector>

#include "delegation_lab/builtin_instances.h"
#include "delegation_lab/errors.h"
#include "delegation_lab/prophet.h"
#include "delegation_lab/random_instance.h"
#include "doctest.h"
#include "oracles.h"

namespace delegation_lab {
namespace {

Instance one_uniform(std::vector<std::vector<UtilityAtom>> supports) {
  std::vector<std::string> ids;
  for (std::size_t e = 0; e < supports.size(); ++e) ids.push_back("e" + std::to_string(e));
  ElementSet g = ElementSet::first_n(supports.size());
  return Instance(ids, std::move(supports), SetSystem::free(g), SetSystem::uniform(g, 1));
}

oracle::Acceptable projection_of(const GreedyFamily& family) {
  return [&family](const OutcomeSet& s) {
    GamblerSet g;
    for (const Outcome& o : s) g.push_back({o.element, o.x});
    return family.accepts(g);
  };
}

// Smallest support value m of the max with P[max >= m] >= 1/2 and
// P[max <= m] >= 1/2, from the explicit distribution of the max.
Rational brute_median(const Instance& inst) {
  std::map<Rational, Rational> dist;
  for (const Scenario& s : enumerate_scenarios(inst)) {
    Rational m = 0;
    for (ElementIndex e = 0; e < inst.size(); ++e) {
      m = std::max(m, Rational(inst.support(e)[s.realization.atom[e]].x));
    }
    dist[m] += s.probability;
  }
  Rational below = 0;
  for (const auto& [v, p] : dist) {
    if (1 - below >= Rational(1, 2) && below + p >= Rational(1, 2)) return v;
    below += p;
  }
  return -1;
}

TEST_CASE("median threshold examples") {
  CHECK(samuel_cahn_threshold(coins2_instance()) == 1);
  for (Rational eps : {Rational(1, 10), Rational(1, 4), Rational(1, 3)}) {
    CHECK(samuel_cahn_threshold(table1_instance(eps)) == 1);
  }
  CHECK(samuel_cahn_threshold(one_uniform({{{7, 0, 1}}})) == 7);

  ElementSet g = ElementSet::first_n(2);
  Instance free_inner({"a", "b"}, {{{1, 1, 1}}, {{1, 1, 1}}}, SetSystem::free(g),
                      SetSystem::free(g));
  CHECK_THROWS_AS(samuel_cahn_threshold(free_inner), UnsupportedError);
}

TEST_CASE("almighty adversary examples") {
  Instance coins = coins2_instance();
  ProphetReport r = evaluate_vs_almighty(coins, GreedyFamily::threshold(coins, 1));
  CHECK(r.gambler_value == Rational(3, 4));
  CHECK(r.prophet_value == Rational(3, 4));
  CHECK(r.ratio == 1);
  CHECK(r.scenarios.size() == 4);

  Instance det = one_uniform({{{2, 0, 1}}, {{1, 0, 1}}});
  GreedyFamily everything = GreedyFamily::threshold(det, 0);
  ProphetReport all = evaluate_vs_almighty(det, everything);
  CHECK(all.gambler_value == 1);
  CHECK(all.prophet_value == 2);
  CHECK(all.ratio == Rational(1, 2));
  REQUIRE(all.scenarios.size() == 1);
  CHECK(all.scenarios[0].worst_order == std::vector<ElementIndex>{1, 0});

  GreedyFamily none(det.inner(), {});
  CHECK(none.maximal().empty());
  CHECK(evaluate_vs_almighty(det, none).gambler_value == 0);

  Caps tight;
  tight.adversary_products = 7;
  CHECK_THROWS_AS(evaluate_vs_almighty(coins, GreedyFamily::threshold(coins, 1), tight),
                  CapacityError);
}

TEST_CASE("greedy families validate their members") {
  Instance coins = coins2_instance();
  CHECK_THROWS_AS(GreedyFamily(coins.inner(), {{{0, 1}, {1, 1}}}), InputError);
  CHECK_THROWS_AS(GreedyFamily(SetSystem::free(coins.all()), {{{0, 1}, {0, 0}}}), InputError);
  GreedyFamily fam(SetSystem::free(coins.all()), {{{0, 1}, {1, 1}}, {{0, 1}}});
  REQUIRE(fam.maximal().size() == 1);
  CHECK(fam.accepts({{1, 1}}));
  CHECK(fam.accepts({}));
  CHECK_FALSE(fam.accepts({{1, 0}}));
}

// Weak acceptance at the median loses more than half here: the adversary
// shows the sure 1 first.
TEST_CASE("weak median acceptance is not half-competitive on discrete supports") {
  Instance inst = one_uniform({{{1, 0, 1}}, {{0, 0, Rational(4, 5)}, {10, 0, Rational(1, 5)}}});
  Rational tau = samuel_cahn_threshold(inst);
  CHECK(tau == 1);
  ProphetReport weak = evaluate_vs_almighty(inst, GreedyFamily::threshold(inst, tau));
  CHECK(weak.gambler_value == 1);
  CHECK(weak.prophet_value == Rational(14, 5));
  CHECK(weak.ratio == Rational(5, 14));

  Rational tuned = half_competitive_threshold(inst);
  CHECK(tuned == 10);
  ProphetReport strict = evaluate_vs_almighty(inst, GreedyFamily::threshold(inst, tuned));
  CHECK(strict.ratio == Rational(5, 7));
}

TEST_CASE("best greedy family examples") {
  GreedySearchResult coins = best_greedy_family(coins2_instance());
  CHECK(coins.report.ratio == 1);
  CHECK(coins.families_enumerated <= 16);

  GreedySearchResult single = best_greedy_family(one_uniform({{{0, 0, Rational(1, 2)},
                                                               {3, 0, Rational(1, 2)}}}));
  CHECK(single.report.ratio == 1);

  GreedySearchResult t1 = best_greedy_family(table1_instance(Rational(1, 2)));
  CHECK(t1.report.ratio >= Rational(1, 2));

  Caps tight;
  tight.greedy_families = 3;
  CHECK_THROWS_AS(best_greedy_family(coins2_instance(), tight), CapacityError);
}

TEST_CASE("almighty evaluation agrees with brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    Instance inst = random_instance(rng, RandomInstanceOptions{});
    CHECK(samuel_cahn_threshold(inst) == brute_median(inst));

    std::vector<GreedyFamily> families = {
        GreedyFamily::threshold(inst, samuel_cahn_threshold(inst)),
        GreedyFamily::threshold(inst, half_competitive_threshold(inst))};
    for (int k = 0; k < 5; ++k) families.push_back(oracle::random_greedy_family(inst, rng));
    for (const GreedyFamily& fam : families) {
      ProphetReport r = evaluate_vs_almighty(inst, fam);
      auto [gambler, prophet] = oracle::brute_gambler(inst, projection_of(fam));
      CHECK(r.gambler_value == gambler);
      CHECK(r.prophet_value == prophet);
      CHECK(r.gambler_value <= r.prophet_value);
    }
    CHECK(evaluate_vs_almighty(inst, families[1]).ratio >= Rational(1, 2));
  }
}

TEST_CASE("best greedy family dominates the threshold families") {
  std::mt19937_64 rng(23);
  RandomInstanceOptions opts;
  opts.max_elements = 3;
  opts.max_support = 2;
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = random_instance(rng, opts);
    GreedySearchResult best = best_greedy_family(inst);
    ProphetReport tuned = evaluate_vs_almighty(
        inst, GreedyFamily::threshold(inst, half_competitive_threshold(inst)));
    CHECK(best.report.ratio >= tuned.ratio);
  }
}

TEST_CASE("adversary value is invariant under symmetric relabelling") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Instance base = random_instance(rng, RandomInstanceOptions{});
    std::vector<std::vector<UtilityAtom>> supports(3, base.support(0));
    Instance iid = one_uniform(supports);
    GreedyFamily fam = GreedyFamily::threshold(iid, samuel_cahn_threshold(iid));
    ProphetReport r = evaluate_vs_almighty(iid, fam);
    std::map<std::vector<std::size_t>, Rational> by_realization;
    for (const ScenarioGamble& g : r.scenarios) by_realization[g.realization.atom] = g.gambler_value;
    for (const ScenarioGamble& g : r.scenarios) {
      std::vector<std::size_t> swapped = g.realization.atom;
      std::swap(swapped[0], swapped[2]);
      CHECK(by_realization.at(swapped) == g.gambler_value);
    }
  }
}

}  // namespace
}  // namespace delegation_lab
