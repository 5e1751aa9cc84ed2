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

// Lottery mechanisms: the agent proposes a distribution over outcome sets
// from a menu, the principal draws T from it, and both are paid for T only
// when T lies within what the agent probed.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "delegation_lab/caps.h"
#include "delegation_lab/delegation.h"
#include "delegation_lab/instance.h"
#include "delegation_lab/policy.h"
#include "delegation_lab/probing.h"

namespace delegation_lab {

struct LotteryAtom {
  OutcomeSet set;  // canonical; may be empty
  Rational p;

  bool operator==(const LotteryAtom&) const = default;
};

// Atoms have positive probability, distinct sets, canonical order.
struct Lottery {
  std::vector<LotteryAtom> atoms;

  bool operator==(const Lottery&) const = default;

  // (E y(T) [T within probed], E x(T) [T within probed]).
  Payoff value_given(const OutcomeSet& probed) const;
};

class LotteryMenu {
 public:
  LotteryMenu() = default;

  // Canonicalizes every lottery (drops zero-probability atoms, merges
  // repeated sets) and merges identical lotteries, keeping the first
  // occurrence. Throws InputError on a negative probability, on a lottery
  // whose probabilities do not sum to 1, or when two different lotteries
  // share a support.
  explicit LotteryMenu(std::vector<Lottery> lotteries);

  // A point-mass lottery per acceptable realizable set, in canonical order.
  static LotteryMenu from_policy(const Instance& instance, const Policy& policy,
                                 const Caps& caps = {});

  const std::vector<Lottery>& lotteries() const { return lotteries_; }
  bool empty() const { return lotteries_.empty(); }

  // Throws InputError unless every atom set is empty or a realizable
  // inner-feasible outcome set.
  void validate(const Instance& instance) const;

 private:
  std::vector<Lottery> lotteries_;
};

// The agent's favorite lottery given his probed outcomes; nullopt (worth 0
// to both) is the first option, then lotteries in menu order.
std::optional<std::size_t> agent_lottery_choice(const LotteryMenu& menu,
                                                const OutcomeSet& probed, TieBreakMode mode);

PolicyEvaluation evaluate_lottery_menu(const Instance& instance, const LotteryMenu& menu,
                                       TieBreakMode mode = TieBreakMode::kAdversarial,
                                       const Caps& caps = {});
PolicyEvaluation evaluate_lottery_menu(const Instance& instance, const LotteryMenu& menu,
                                       TieBreakMode mode, const Rational& benchmark,
                                       const Caps& caps);

// The menu {A, B} with A = omega2 w.p. a, omega0 w.p. 1 - a and
// B = omega2 w.p. b, omega1 w.p. 1 - b. See search_two_lottery_menus.
LotteryMenu two_lottery_menu(const Instance& instance, const Rational& a, const Rational& b);

struct LotterySearchResult {
  LotteryMenu menu;
  PolicyEvaluation evaluation;
  Rational a;
  Rational b;
  std::uint64_t grid_points = 0;
};

// Grid search over two-lottery menus for two-element, 1-uniform instances
// where one element has two atoms omega0 (lower x) and omega1 and the other
// is deterministic with atom omega2. When both elements are deterministic,
// element 0 plays omega0 = omega1. `step` must be 1/k for a positive
// integer k; a and b range over {0, step, ..., 1}, a in the outer loop, and
// the first best menu wins. Menus where the two lotteries share a support
// without being equal are skipped. Throws UnsupportedError on any other
// shape.
LotterySearchResult search_two_lottery_menus(const Instance& instance, const Rational& step,
                                             TieBreakMode mode = TieBreakMode::kAdversarial,
                                             const Caps& caps = {});

}  // namespace delegation_lab
