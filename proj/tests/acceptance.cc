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

// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "delegation_lab/benchmark.h"
#include "delegation_lab/builtin_instances.h"
#include "delegation_lab/delegation.h"
#include "delegation_lab/json_io.h"
#include "delegation_lab/lottery.h"
#include "delegation_lab/oracle.h"
#include "delegation_lab/prophet.h"
#include "delegation_lab/random_instance.h"
#include "oracles.h"

namespace delegation_lab {
namespace {

const double kOneMinusInvE = 1.0 - std::exp(-1.0);
const double kDecimalTolerance = 1e-9;
const std::vector<Rational> kEpsilons = {Rational(1, 10), Rational(1, 4), Rational(1, 3)};

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

// The instances shared by criteria 3 and 4.
std::vector<Instance> free_outer_suite() {
  std::mt19937_64 rng(20260301);
  RandomInstanceOptions opts;  // |E| <= 4, support <= 3, values <= 10, free outer
  std::vector<Instance> out;
  for (int i = 0; i < 200; ++i) out.push_back(random_instance(rng, opts));
  return out;
}

void table1(Check& c) {
  for (const Rational& eps : kEpsilons) {
    Instance inst = table1_instance(eps);
    Rational benchmark = optimal_adaptive_value(inst).expected_value;
    GapReport gap = exact_delegation_gap(inst);
    Outcome omega0{0, 0, 0};
    Outcome omega1{0, 1 / eps, 1 - eps};
    Outcome omega2{1, 1, 1};
    LotteryMenu menu({Lottery{{{{omega1}, 1}}},
                      Lottery{{{{omega2}, 1 - 2 * eps}, {{omega0}, 2 * eps}}}});
    Rational menu_value = evaluate_lottery_menu(inst, menu).principal_value;
    if (benchmark != 2 - eps) c.fail("benchmark " + to_fraction_string(benchmark));
    if (gap.alpha_star != 1 / (2 - eps)) c.fail("alpha_star " + to_fraction_string(gap.alpha_star));
    if (menu_value != 2 - 3 * eps + 2 * eps * eps) c.fail("menu " + to_fraction_string(menu_value));
    c.detail << "eps=" << to_fraction_string(eps) << ": u=" << to_fraction_string(benchmark)
             << " alpha*=" << to_fraction_string(gap.alpha_star) << " menu=" << to_fraction_string(menu_value)
             << "; ";
  }
}

void table2(Check& c) {
  for (const Rational& eps : kEpsilons) {
    Instance inst = table2_instance(eps);
    GapReport gap = exact_delegation_gap(inst, TieBreakMode::kPrincipalFavoring);
    LotterySearchResult best =
        search_two_lottery_menus(inst, Rational(1, 100), TieBreakMode::kPrincipalFavoring);
    if (gap.alpha_star != 1 / (2 - eps)) c.fail("alpha_star " + to_fraction_string(gap.alpha_star));
    // The search returns the maximum over the grid, so equality with 1 also
    // shows no grid point exceeds 1.
    if (best.evaluation.principal_value != 1) {
      c.fail("grid best " + to_fraction_string(best.evaluation.principal_value));
    }
    c.detail << "eps=" << to_fraction_string(eps) << ": alpha*=" << to_fraction_string(gap.alpha_star)
             << " grid best=" << to_fraction_string(best.evaluation.principal_value) << " over "
             << best.grid_points << " menus; ";
  }
}

void half_policy(const std::vector<Instance>& suite, Check& c) {
  Rational worst = 1;
  for (const Instance& inst : suite) {
    Rational alpha = evaluate_policy(inst, threshold_policy(inst)).alpha;
    if (alpha < worst) worst = alpha;
    if (alpha < Rational(1, 2)) c.fail(instance_to_json(inst).dump() + " ");
  }
  c.detail << suite.size() << " instances, min alpha=" << to_fraction_string(worst);
}

void domination(const std::vector<Instance>& suite, Check& c) {
  std::mt19937_64 rng(20260302);
  std::size_t checks = 0;
  for (const Instance& inst : suite) {
    std::vector<GreedyFamily> families = {
        GreedyFamily::threshold(inst, samuel_cahn_threshold(inst))};
    for (int k = 0; k < 20; ++k) families.push_back(oracle::random_greedy_family(inst, rng));
    Rational benchmark = optimal_adaptive_value(inst).expected_value;
    for (const GreedyFamily& fam : families) {
      Rational gambler = evaluate_vs_almighty(inst, fam).gambler_value;
      Rational principal =
          evaluate_policy(inst, policy_from_greedy(fam), TieBreakMode::kAdversarial, benchmark, Caps{})
              .principal_value;
      ++checks;
      if (principal < gambler) c.fail(instance_to_json(inst).dump() + " ");
    }
  }
  c.detail << checks << " (instance, family) pairs";
}

void composition(Check& c) {
  std::mt19937_64 rng(20260303);
  RandomInstanceOptions opts;
  opts.outer = OuterKind::kPartition;
  opts.max_blocks = 3;
  double worst_alpha = 1;
  int strong = 0;
  for (int i = 0; i < 100; ++i) {
    Instance inst = random_instance(rng, opts);
    ComposedPolicy composed = compose_outer(inst, threshold_builder());
    Rational alpha = evaluate_policy(inst, composed.policy).alpha;
    Rational ratio = composed.nonadaptive.ratio_to_adaptive;
    worst_alpha = std::min(worst_alpha, to_double(alpha));
    if (alpha < ratio / 2) c.fail(instance_to_json(inst).dump() + " ");
    if (to_double(ratio) >= kOneMinusInvE) {
      ++strong;
      if (to_double(alpha) < 0.5 * kOneMinusInvE - kDecimalTolerance) {
        c.fail(instance_to_json(inst).dump() + " ");
      }
    }
  }
  c.detail << "100 instances, " << strong << " with ratio >= 1-1/e, min alpha="
           << worst_alpha;
}

bool tiny(const Instance& inst) {
  return realizable_inner_sets(inst).size() <= 3 && enumerate_scenarios(inst).size() <= 16;
}

void oracle_consistency(Check& c) {
  std::mt19937_64 rng(20260304);
  RandomInstanceOptions opts;
  opts.max_elements = 3;
  opts.max_support = 2;
  opts.outer = OuterKind::kMatroid;
  int found = 0;
  std::size_t compared = 0;
  while (found < 50) {
    Instance inst = random_instance(rng, opts);
    if (!tiny(inst)) continue;
    ++found;
    Rational alpha_star = exact_delegation_gap(inst).alpha_star;
    std::vector<Policy> constructive = {threshold_policy(inst),
                                        policy_from_greedy(best_greedy_family(inst).family),
                                        compose_outer(inst, threshold_builder()).policy,
                                        compose_outer(inst, greedy_builder()).policy};
    for (const Policy& p : constructive) {
      ++compared;
      if (evaluate_policy(inst, p).alpha > alpha_star) c.fail(instance_to_json(inst).dump() + " ");
    }
  }
  c.detail << found << " instances, " << compared << " constructive policies";
}

void prophet_baseline(Check& c) {
  Instance coins = coins2_instance();
  std::vector<GreedyFamily> families = {
      GreedyFamily::threshold(coins, half_competitive_threshold(coins)),
      best_greedy_family(coins).family};
  for (const GreedyFamily& fam : families) {
    ProphetReport report = evaluate_vs_almighty(coins, fam);
    auto [gambler, prophet] = oracle::brute_gambler(coins, [&](const OutcomeSet& s) {
      GamblerSet g;
      for (const Outcome& o : s) g.push_back({o.element, o.x});
      return fam.accepts(g);
    });
    if (report.gambler_value != Rational(3, 4) || report.prophet_value != Rational(3, 4)) {
      c.fail("library " + to_fraction_string(report.gambler_value) + "/" + to_fraction_string(report.prophet_value));
    }
    if (gambler != report.gambler_value || prophet != report.prophet_value) {
      c.fail("brute force " + to_fraction_string(gambler) + "/" + to_fraction_string(prophet));
    }
    if (report.scenarios.size() != 4) c.fail("scenario count");
    c.detail << "gambler=" << to_fraction_string(report.gambler_value) << " prophet="
             << to_fraction_string(report.prophet_value) << " (brute force " << to_fraction_string(gambler) << " and "
             << to_fraction_string(prophet) << "); ";
  }
}

void adaptivity(Check& c) {
  std::mt19937_64 rng(20260305);
  RandomInstanceOptions opts;
  opts.outer = OuterKind::kMatroid;
  double worst = 1;
  for (int i = 0; i < 100; ++i) {
    Instance inst = random_instance(rng, opts);
    double ratio = to_double(best_nonadaptive_set(inst).ratio_to_adaptive);
    worst = std::min(worst, ratio);
    if (ratio < kOneMinusInvE) c.fail("counterexample " + instance_to_json(inst).dump() + " ");
  }
  c.detail << "100 instances, min ratio=" << worst;
}

}  // namespace
}  // namespace delegation_lab

int main() {
  using namespace delegation_lab;
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::vector<Instance> suite = free_outer_suite();

  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 table1 reproduction", table1},
      {"2 table2 reproduction", table2},
      {"3 threshold policy alpha >= 1/2", [&](Check& c) { half_policy(suite, c); }},
      {"4 greedy policy dominates gambler", [&](Check& c) { domination(suite, c); }},
      {"5 outer composition bound", composition},
      {"6 constructive alpha <= oracle", oracle_consistency},
      {"7 coins2 prophet baseline", prophet_baseline},
      {"8 adaptivity ratio >= 1-1/e", adaptivity},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    const auto t0 = Clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (!check.pass) ++failures;
    std::printf("%s [%s] %s (%.0f ms)\n", check.pass ? "PASS" : "FAIL", criterion.name,
                check.detail.str().c_str(), ms);
  }
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
