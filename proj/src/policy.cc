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

#include "delegation_lab/policy.h"

#include <algorithm>
#include <string>
#include <utility>

#include "delegation_lab/errors.h"

namespace delegation_lab {
namespace {

bool by_size_then_canonical(const OutcomeSet& a, const OutcomeSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return outcome_set_less(a, b);
}

bool distinct_feasible(const Instance& instance, const OutcomeSet& set) {
  ElementSet elements;
  for (const Outcome& o : set) {
    if (o.element >= instance.size() || elements.contains(o.element)) return false;
    elements.insert(o.element);
  }
  return instance.inner().is_feasible(elements);
}

}  // namespace

Policy Policy::explicit_family(std::vector<OutcomeSet> acceptable) {
  std::vector<OutcomeSet> sets;
  for (OutcomeSet& set : acceptable) {
    if (!set.empty()) sets.push_back(canonical(std::move(set)));
  }
  std::sort(sets.begin(), sets.end(), outcome_set_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return Policy(Explicit{std::move(sets)});
}

Policy Policy::x_threshold(Rational tau) { return Policy(XThreshold{std::move(tau)}); }

Policy Policy::greedy_projection(GreedyFamily family) {
  return Policy(GreedyProjection{std::move(family)});
}

bool Policy::accepts(const Instance& instance, const OutcomeSet& set) const {
  if (set.empty()) return true;
  if (const auto* e = std::get_if<Explicit>(&kind_)) {
    return std::binary_search(e->acceptable.begin(), e->acceptable.end(), set,
                              outcome_set_less);
  }
  if (!distinct_feasible(instance, set)) return false;
  if (const auto* t = std::get_if<XThreshold>(&kind_)) {
    return set.size() == 1 && set.front().x >= t->tau;
  }
  const auto& g = std::get<GreedyProjection>(kind_);
  GamblerSet projection;
  for (const Outcome& o : set) projection.push_back({o.element, o.x});
  return g.family.accepts(projection);
}

void Policy::validate(const Instance& instance) const {
  const auto* e = std::get_if<Explicit>(&kind_);
  if (e == nullptr) return;
  for (const OutcomeSet& set : e->acceptable) {
    if (!is_inner_feasible_outcome_set(instance, set)) {
      throw InputError("policy accepts a set that is not a realizable inner-feasible outcome set");
    }
  }
}

std::vector<OutcomeSet> Policy::materialize(const Instance& instance, const Caps& caps) const {
  std::vector<OutcomeSet> out;
  for (OutcomeSet& set : realizable_inner_sets(instance, caps)) {
    if (accepts(instance, set)) out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), outcome_set_less);
  return out;
}

std::vector<OutcomeSet> realizable_inner_sets(const Instance& instance, const Caps& caps) {
  std::vector<OutcomeSet> out;
  instance.all().for_each_subset([&](ElementSet s) {
    if (s.empty() || !instance.inner().is_feasible(s)) return;
    std::vector<ElementIndex> elems = s.to_vector();
    std::vector<std::size_t> digit(elems.size(), 0);
    while (true) {
      if (out.size() >= caps.outcome_sets) {
        throw CapacityError("more than " + std::to_string(caps.outcome_sets) +
                            " realizable inner-feasible outcome sets");
      }
      OutcomeSet set;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        set.push_back(instance.outcome(elems[i], digit[i]));
      }
      out.push_back(std::move(set));
      std::size_t i = elems.size();
      while (i > 0 && ++digit[i - 1] == instance.support(elems[i - 1]).size()) digit[--i] = 0;
      if (i == 0) break;
    }
  });
  std::sort(out.begin(), out.end(), by_size_then_canonical);
  return out;
}

}  // namespace delegation_lab
