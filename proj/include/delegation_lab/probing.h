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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "delegation_lab/instance.h"
#include "delegation_lab/rational.h"

namespace delegation_lab {

// How an agent picks among options that give him the same utility.
enum class TieBreakMode {
  kAdversarial,        // the option worst for the principal
  kPrincipalFavoring,  // the option best for the principal
  kLexicographic,      // the first option in canonical order
};

std::string to_string(TieBreakMode mode);
// "adversarial", "principal-favoring" (or "principal_favoring"),
// "lexicographic". Throws InputError otherwise.
TieBreakMode parse_tie_break(std::string_view text);

// (agent utility, principal utility), possibly in expectation.
struct Payoff {
  Rational agent;
  Rational principal;
};

// Whether the agent strictly prefers `candidate` over `incumbent`: higher
// agent utility, or equal agent utility and the tie rule favors it.
// Lexicographic mode never replaces an incumbent on a tie.
bool prefers(const Payoff& candidate, const Payoff& incumbent, TieBreakMode mode);

// Elements probed so far and the atom observed for each of them.
struct ProbeState {
  ElementSet probed;
  std::vector<std::size_t> atom;  // indexed by element; read only if probed

  OutcomeSet observed(const Instance& instance) const;
};

struct ProbeDecision {
  ProbeState state;
  std::optional<ElementIndex> probe;  // nullopt: stop
};

// Exact adaptive probing by memoized recursion over (probed set, observed
// atoms). At each state the prober either stops, receiving the payoff of
// the stop rule, or probes an element e with probed + {e} outer-feasible,
// receiving the expectation over e's atoms. Options are ranked by the agent
// component with ties broken by `mode`; the canonical option order is stop
// first, then elements by increasing index.
class ProbingDp {
 public:
  struct StopChoice {
    Payoff payoff;
    std::size_t option = 0;  // caller-defined id of what is proposed
  };
  using StopRule = std::function<StopChoice(const ProbeState&)>;

  // Throws CapacityError when more than `state_cap` states are reached, or
  // when the state encoding would not fit in 64 bits.
  ProbingDp(const Instance& instance, TieBreakMode mode, StopRule stop_rule,
            std::uint64_t state_cap);

  Payoff root_value();
  // The optimal action at a reachable state.
  std::optional<ElementIndex> decision(const ProbeState& state);
  std::size_t state_count() const { return memo_.size(); }
  // Every memoized state with its action, sorted by state encoding.
  std::vector<ProbeDecision> decisions() const;

  static ProbeState initial_state(const Instance& instance);

 private:
  struct Node {
    Payoff value;
    std::optional<ElementIndex> action;
  };

  std::uint64_t key_of(const ProbeState& state) const;
  ProbeState state_of(std::uint64_t key) const;
  Payoff solve(ProbeState& state, std::uint64_t key);

  const Instance& instance_;
  TieBreakMode mode_;
  StopRule stop_rule_;
  std::uint64_t state_cap_;
  std::vector<std::uint64_t> radix_;
  std::unordered_map<std::uint64_t, Node> memo_;
};

}  // namespace delegation_lab
