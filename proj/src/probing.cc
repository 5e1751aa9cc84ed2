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

#include "delegation_lab/probing.h"

#include <algorithm>
#include <limits>
#include <utility>

#include "delegation_lab/errors.h"

namespace delegation_lab {

std::string to_string(TieBreakMode mode) {
  switch (mode) {
    case TieBreakMode::kAdversarial:
      return "adversarial";
    case TieBreakMode::kPrincipalFavoring:
      return "principal-favoring";
    case TieBreakMode::kLexicographic:
      return "lexicographic";
  }
  return "adversarial";
}

TieBreakMode parse_tie_break(std::string_view text) {
  if (text == "adversarial") return TieBreakMode::kAdversarial;
  if (text == "principal-favoring" || text == "principal_favoring") {
    return TieBreakMode::kPrincipalFavoring;
  }
  if (text == "lexicographic") return TieBreakMode::kLexicographic;
  throw InputError("unknown tie-break mode '" + std::string(text) + "'");
}

bool prefers(const Payoff& candidate, const Payoff& incumbent, TieBreakMode mode) {
  if (candidate.agent != incumbent.agent) return candidate.agent > incumbent.agent;
  switch (mode) {
    case TieBreakMode::kAdversarial:
      return candidate.principal < incumbent.principal;
    case TieBreakMode::kPrincipalFavoring:
      return candidate.principal > incumbent.principal;
    case TieBreakMode::kLexicographic:
      return false;
  }
  return false;
}

OutcomeSet ProbeState::observed(const Instance& instance) const {
  OutcomeSet out;
  probed.for_each([&](ElementIndex e) { out.push_back(instance.outcome(e, atom[e])); });
  return out;
}

ProbingDp::ProbingDp(const Instance& instance, TieBreakMode mode, StopRule stop_rule,
                     std::uint64_t state_cap)
    : instance_(instance), mode_(mode), stop_rule_(std::move(stop_rule)), state_cap_(state_cap) {
  std::uint64_t radix = 1;
  for (ElementIndex e = 0; e < instance.size(); ++e) {
    radix_.push_back(radix);
    std::uint64_t base = instance.support(e).size() + 1;
    if (radix > std::numeric_limits<std::uint64_t>::max() / base) {
      throw CapacityError("probing state space does not fit a 64-bit encoding");
    }
    radix *= base;
  }
}

ProbeState ProbingDp::initial_state(const Instance& instance) {
  return ProbeState{ElementSet{}, std::vector<std::size_t>(instance.size(), 0)};
}

std::uint64_t ProbingDp::key_of(const ProbeState& state) const {
  std::uint64_t key = 0;
  state.probed.for_each([&](ElementIndex e) { key += (state.atom[e] + 1) * radix_[e]; });
  return key;
}

ProbeState ProbingDp::state_of(std::uint64_t key) const {
  ProbeState state = initial_state(instance_);
  for (ElementIndex e = instance_.size(); e-- > 0;) {
    std::uint64_t digit = key / radix_[e];
    key %= radix_[e];
    if (digit > 0) {
      state.probed.insert(e);
      state.atom[e] = static_cast<std::size_t>(digit - 1);
    }
  }
  return state;
}

Payoff ProbingDp::root_value() {
  ProbeState state = initial_state(instance_);
  return solve(state, 0);
}

std::optional<ElementIndex> ProbingDp::decision(const ProbeState& state) {
  std::uint64_t key = key_of(state);
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    ProbeState copy = state;
    solve(copy, key);
    it = memo_.find(key);
  }
  return it->second.action;
}

std::vector<ProbeDecision> ProbingDp::decisions() const {
  std::vector<std::uint64_t> keys;
  keys.reserve(memo_.size());
  for (const auto& [key, node] : memo_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  std::vector<ProbeDecision> out;
  out.reserve(keys.size());
  for (std::uint64_t key : keys) out.push_back({state_of(key), memo_.at(key).action});
  return out;
}

Payoff ProbingDp::solve(ProbeState& state, std::uint64_t key) {
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.value;

  Node node{stop_rule_(state).payoff, std::nullopt};
  for (ElementIndex e = 0; e < instance_.size(); ++e) {
    if (state.probed.contains(e)) continue;
    ElementSet grown = state.probed.with(e);
    if (!instance_.outer().is_feasible(grown)) continue;

    Payoff expected{0, 0};
    const auto& atoms = instance_.support(e);
    state.probed = grown;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      state.atom[e] = a;
      Payoff child = solve(state, key + (a + 1) * radix_[e]);
      expected.agent += atoms[a].prob * child.agent;
      expected.principal += atoms[a].prob * child.principal;
    }
    state.probed.erase(e);
    state.atom[e] = 0;

    if (prefers(expected, node.value, mode_)) {
      node.value = std::move(expected);
      node.action = e;
    }
  }

  if (memo_.size() >= state_cap_) {
    throw CapacityError("probing dynamic program exceeds the cap of " +
                        std::to_string(state_cap_) + " states");
  }
  Payoff value = node.value;
  memo_.emplace(key, std::move(node));
  return value;
}

}  // namespace delegation_lab
