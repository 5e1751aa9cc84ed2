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

#include "delegation_lab/lottery.h"

#include <algorithm>
#include <utility>

#include "delegation_lab/benchmark.h"
#include "delegation_lab/errors.h"

namespace delegation_lab {
namespace {

Lottery canonical_lottery(Lottery lottery) {
  std::vector<LotteryAtom> atoms;
  Rational total = 0;
  for (LotteryAtom& atom : lottery.atoms) {
    if (atom.p < 0) throw InputError("lottery probability is negative");
    total += atom.p;
    if (atom.p == 0) continue;
    atoms.push_back({canonical(std::move(atom.set)), std::move(atom.p)});
  }
  if (total != 1) throw InputError("lottery probabilities must sum to 1");
  std::sort(atoms.begin(), atoms.end(), [](const LotteryAtom& a, const LotteryAtom& b) {
    return outcome_set_less(a.set, b.set);
  });
  Lottery out;
  for (LotteryAtom& atom : atoms) {
    if (!out.atoms.empty() && out.atoms.back().set == atom.set) {
      out.atoms.back().p += atom.p;
    } else {
      out.atoms.push_back(std::move(atom));
    }
  }
  return out;
}

bool same_support(const Lottery& a, const Lottery& b) {
  if (a.atoms.size() != b.atoms.size()) return false;
  for (std::size_t i = 0; i < a.atoms.size(); ++i) {
    if (a.atoms[i].set != b.atoms[i].set) return false;
  }
  return true;
}

struct TwoLotteryShape {
  Outcome omega0;
  Outcome omega1;
  Outcome omega2;
};

TwoLotteryShape two_lottery_shape(const Instance& instance) {
  if (instance.size() != 2 || !is_one_uniform(instance.inner())) {
    throw UnsupportedError("two-lottery search needs two elements and a 1-uniform inner constraint");
  }
  std::size_t s0 = instance.support(0).size();
  std::size_t s1 = instance.support(1).size();
  ElementIndex risky = 0;
  if (s0 == 1 && s1 == 2) {
    risky = 1;
  } else if (!((s0 == 2 && s1 == 1) || (s0 == 1 && s1 == 1))) {
    throw UnsupportedError(
        "two-lottery search needs one two-atom element and one deterministic element");
  }
  const std::size_t last = instance.support(risky).size() - 1;
  return TwoLotteryShape{instance.outcome(risky, 0), instance.outcome(risky, last),
                         instance.outcome(1 - risky, 0)};
}

}  // namespace

Payoff Lottery::value_given(const OutcomeSet& probed) const {
  Payoff value{0, 0};
  for (const LotteryAtom& atom : atoms) {
    if (!std::includes(probed.begin(), probed.end(), atom.set.begin(), atom.set.end(),
                       outcome_less)) {
      continue;
    }
    value.agent += atom.p * total_y(atom.set);
    value.principal += atom.p * total_x(atom.set);
  }
  return value;
}

LotteryMenu::LotteryMenu(std::vector<Lottery> lotteries) {
  for (Lottery& raw : lotteries) {
    Lottery lottery = canonical_lottery(std::move(raw));
    bool duplicate = false;
    for (const Lottery& kept : lotteries_) {
      if (!same_support(kept, lottery)) continue;
      if (kept == lottery) {
        duplicate = true;
        break;
      }
      throw InputError("two different lotteries share a support");
    }
    if (!duplicate) lotteries_.push_back(std::move(lottery));
  }
}

LotteryMenu LotteryMenu::from_policy(const Instance& instance, const Policy& policy,
                                     const Caps& caps) {
  std::vector<Lottery> lotteries;
  for (OutcomeSet& set : policy.materialize(instance, caps)) {
    lotteries.push_back(Lottery{{LotteryAtom{std::move(set), 1}}});
  }
  return LotteryMenu(std::move(lotteries));
}

void LotteryMenu::validate(const Instance& instance) const {
  for (const Lottery& lottery : lotteries_) {
    for (const LotteryAtom& atom : lottery.atoms) {
      if (!atom.set.empty() && !is_inner_feasible_outcome_set(instance, atom.set)) {
        throw InputError("lottery atom is not a realizable inner-feasible outcome set");
      }
    }
  }
}

std::optional<std::size_t> agent_lottery_choice(const LotteryMenu& menu,
                                                const OutcomeSet& probed, TieBreakMode mode) {
  OutcomeSet sorted = canonical(probed);
  std::optional<std::size_t> choice;
  Payoff best{0, 0};
  for (std::size_t i = 0; i < menu.lotteries().size(); ++i) {
    Payoff value = menu.lotteries()[i].value_given(sorted);
    if (prefers(value, best, mode)) {
      best = std::move(value);
      choice = i;
    }
  }
  return choice;
}

PolicyEvaluation evaluate_lottery_menu(const Instance& instance, const LotteryMenu& menu,
                                       TieBreakMode mode, const Caps& caps) {
  return evaluate_lottery_menu(instance, menu, mode,
                               optimal_adaptive_value(instance, caps).expected_value, caps);
}

PolicyEvaluation evaluate_lottery_menu(const Instance& instance, const LotteryMenu& menu,
                                       TieBreakMode mode, const Rational& benchmark,
                                       const Caps& caps) {
  menu.validate(instance);
  Responder responder = [&](const OutcomeSet& observed) {
    std::optional<std::size_t> choice = agent_lottery_choice(menu, observed, mode);
    Payoff payoff{0, 0};
    if (choice) payoff = menu.lotteries()[*choice].value_given(observed);
    return Response{std::move(payoff), OutcomeSet{}, choice};
  };
  return evaluate_responder(instance, mode, responder, benchmark, caps);
}

LotteryMenu two_lottery_menu(const Instance& instance, const Rational& a, const Rational& b) {
  if (a < 0 || a > 1 || b < 0 || b > 1) throw InputError("lottery parameters must lie in [0, 1]");
  TwoLotteryShape shape = two_lottery_shape(instance);
  Lottery lottery_a{{{{shape.omega2}, a}, {{shape.omega0}, 1 - a}}};
  Lottery lottery_b{{{{shape.omega2}, b}, {{shape.omega1}, 1 - b}}};
  return LotteryMenu({std::move(lottery_a), std::move(lottery_b)});
}

LotterySearchResult search_two_lottery_menus(const Instance& instance, const Rational& step,
                                             TieBreakMode mode, const Caps& caps) {
  two_lottery_shape(instance);
  if (step <= 0 || step > 1 || step.get_num() != 1) {
    throw InputError("grid step must be 1/k for a positive integer k");
  }
  const long k = step.get_den().get_si();
  Rational benchmark = optimal_adaptive_value(instance, caps).expected_value;

  std::optional<LotterySearchResult> best;
  std::uint64_t points = 0;
  // a runs from 1 down to 0 and b from 0 up to 1; the first best menu wins.
  for (long i = k; i >= 0; --i) {
    for (long j = 0; j <= k; ++j) {
      ++points;
      Rational a = step * i;
      Rational b = step * j;
      LotteryMenu menu;
      try {
        menu = two_lottery_menu(instance, a, b);
      } catch (const InputError&) {
        continue;
      }
      PolicyEvaluation eval = evaluate_lottery_menu(instance, menu, mode, benchmark, caps);
      if (!best || eval.principal_value > best->evaluation.principal_value) {
        best = LotterySearchResult{std::move(menu), std::move(eval), a, b, 0};
      }
    }
  }
  best->grid_points = points;
  return std::move(*best);
}

}  // namespace delegation_lab
