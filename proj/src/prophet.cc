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

#include "delegation_lab/prophet.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "delegation_lab/errors.h"

namespace delegation_lab {
namespace {

bool gambler_outcome_less(const GamblerOutcome& a, const GamblerOutcome& b) {
  if (a.element != b.element) return a.element < b.element;
  return a.x < b.x;
}

bool gambler_set_less(const GamblerSet& a, const GamblerSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      gambler_outcome_less);
}

// Both sorted by (element, x) with distinct elements.
bool is_subset(const GamblerSet& small, const GamblerSet& big) {
  auto it = big.begin();
  for (const GamblerOutcome& o : small) {
    while (it != big.end() && it->element < o.element) ++it;
    if (it == big.end() || !(*it == o)) return false;
    ++it;
  }
  return true;
}

ElementSet elements_of(const GamblerSet& set) {
  ElementSet s;
  for (const GamblerOutcome& o : set) s.insert(o.element);
  return s;
}

// Distinct realizable x values per element, ascending.
std::vector<std::vector<Rational>> realizable_x(const Instance& instance) {
  std::vector<std::vector<Rational>> xs(instance.size());
  for (ElementIndex e = 0; e < instance.size(); ++e) {
    for (const UtilityAtom& atom : instance.support(e)) {
      if (xs[e].empty() || xs[e].back() != atom.x) xs[e].push_back(atom.x);
    }
  }
  return xs;
}

std::uint64_t factorial_saturating(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > UINT64_MAX / i) return UINT64_MAX;
    f *= i;
  }
  return f;
}

}  // namespace

GreedyFamily::GreedyFamily(SetSystem constraint, std::vector<GamblerSet> acceptable)
    : constraint_(std::move(constraint)) {
  for (GamblerSet& set : acceptable) {
    std::sort(set.begin(), set.end(), gambler_outcome_less);
    for (std::size_t i = 1; i < set.size(); ++i) {
      if (set[i].element == set[i - 1].element) {
        throw InputError("acceptable gambler set repeats an element");
      }
    }
    if (!constraint_.is_feasible(elements_of(set))) {
      throw InputError("acceptable gambler set is infeasible in the constraint");
    }
  }
  std::sort(acceptable.begin(), acceptable.end(), [](const GamblerSet& a, const GamblerSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return gambler_set_less(a, b);
  });
  for (GamblerSet& set : acceptable) {
    if (set.empty()) continue;
    bool dominated = std::any_of(maximal_.begin(), maximal_.end(),
                                 [&](const GamblerSet& m) { return is_subset(set, m); });
    if (!dominated) maximal_.push_back(std::move(set));
  }
  std::sort(maximal_.begin(), maximal_.end(), gambler_set_less);
}

GreedyFamily GreedyFamily::threshold(const Instance& instance, const Rational& tau) {
  std::vector<GamblerSet> sets;
  std::vector<std::vector<Rational>> xs = realizable_x(instance);
  for (ElementIndex e = 0; e < instance.size(); ++e) {
    if (!instance.inner().is_feasible(ElementSet::of({e}))) continue;
    for (const Rational& x : xs[e]) {
      if (x >= tau) sets.push_back({GamblerOutcome{e, x}});
    }
  }
  return GreedyFamily(instance.inner(), std::move(sets));
}

bool GreedyFamily::accepts(const GamblerSet& set) const {
  if (set.empty()) return true;
  GamblerSet sorted = set;
  std::sort(sorted.begin(), sorted.end(), gambler_outcome_less);
  return std::any_of(maximal_.begin(), maximal_.end(),
                     [&](const GamblerSet& m) { return is_subset(sorted, m); });
}

Rational run_greedy_gambler(const Instance& instance, const GreedyFamily& family,
                            const Realization& r, const std::vector<ElementIndex>& order) {
  GamblerSet accepted;
  Rational total = 0;
  for (ElementIndex e : order) {
    GamblerOutcome o{e, instance.support(e)[r.atom[e]].x};
    GamblerSet trial = accepted;
    trial.insert(std::upper_bound(trial.begin(), trial.end(), o, gambler_outcome_less), o);
    if (family.accepts(trial)) {
      accepted = std::move(trial);
      total += o.x;
    }
  }
  return total;
}

ProphetReport evaluate_vs_almighty(const Instance& instance, const GreedyFamily& family,
                                   const Caps& caps) {
  std::uint64_t orders = factorial_saturating(instance.size());
  std::uint64_t scenarios = scenario_count(instance);
  if (orders != 0 && scenarios > caps.adversary_products / orders) {
    throw CapacityError("adversary enumeration needs " + std::to_string(orders) +
                        " orderings x " + std::to_string(scenarios) +
                        " scenarios, above the cap of " +
                        std::to_string(caps.adversary_products));
  }

  ProphetReport report;
  report.gambler_value = 0;
  report.prophet_value = 0;
  std::vector<Rational> weights(instance.size());
  for (Scenario& s : enumerate_scenarios(instance, caps)) {
    ScenarioGamble g;
    g.realization = std::move(s.realization);
    g.probability = s.probability;

    std::vector<ElementIndex> order(instance.size());
    std::iota(order.begin(), order.end(), ElementIndex{0});
    bool first = true;
    do {
      Rational value = run_greedy_gambler(instance, family, g.realization, order);
      if (first || value < g.gambler_value) {
        g.gambler_value = value;
        g.worst_order = order;
        first = false;
      }
    } while (std::next_permutation(order.begin(), order.end()));

    for (ElementIndex e = 0; e < instance.size(); ++e) {
      weights[e] = instance.support(e)[g.realization.atom[e]].x;
    }
    g.prophet_value = instance.inner().max_weight_feasible(weights).value;

    report.gambler_value += g.probability * g.gambler_value;
    report.prophet_value += g.probability * g.prophet_value;
    report.scenarios.push_back(std::move(g));
  }
  report.ratio = ratio_or_one(report.gambler_value, report.prophet_value);
  return report;
}

Rational samuel_cahn_threshold(const Instance& instance) {
  if (!is_one_uniform(instance.inner())) {
    throw UnsupportedError("the median threshold needs a 1-uniform inner constraint");
  }
  std::set<Rational> values;
  for (ElementIndex e = 0; e < instance.size(); ++e) {
    for (const UtilityAtom& atom : instance.support(e)) values.insert(atom.x);
  }
  const Rational half(1, 2);
  Rational below = 0;  // P[max < v] for the current v
  for (const Rational& v : values) {
    Rational at_most = 1;  // P[max <= v]
    for (ElementIndex e = 0; e < instance.size(); ++e) {
      Rational p = 0;
      for (const UtilityAtom& atom : instance.support(e)) {
        if (atom.x <= v) p += atom.prob;
      }
      at_most *= p;
    }
    if (at_most > below && 1 - below >= half && at_most >= half) return v;
    below = at_most;
  }
  throw InputError("instance has no elements");
}

Rational half_competitive_threshold(const Instance& instance, const Caps& caps) {
  Rational tau = samuel_cahn_threshold(instance);
  std::optional<Rational> next;
  for (ElementIndex e = 0; e < instance.size(); ++e) {
    for (const UtilityAtom& atom : instance.support(e)) {
      if (atom.x > tau && (!next || atom.x < *next)) next = atom.x;
    }
  }
  if (!next) return tau;
  Rational weak = evaluate_vs_almighty(instance, GreedyFamily::threshold(instance, tau), caps)
                      .gambler_value;
  Rational strict =
      evaluate_vs_almighty(instance, GreedyFamily::threshold(instance, *next), caps)
          .gambler_value;
  return strict > weak ? *next : tau;
}

std::vector<GamblerSet> realizable_gambler_sets(const Instance& instance, const Caps& caps) {
  std::vector<std::vector<Rational>> xs = realizable_x(instance);
  std::vector<GamblerSet> out;
  instance.all().for_each_subset([&](ElementSet s) {
    if (s.empty() || !instance.inner().is_feasible(s)) return;
    std::vector<ElementIndex> elems = s.to_vector();
    std::vector<std::size_t> digit(elems.size(), 0);
    while (true) {
      if (out.size() >= caps.outcome_sets) {
        throw CapacityError("more than " + std::to_string(caps.outcome_sets) +
                            " realizable gambler outcome sets");
      }
      GamblerSet set;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        set.push_back({elems[i], xs[elems[i]][digit[i]]});
      }
      out.push_back(std::move(set));
      std::size_t i = elems.size();
      while (i > 0 && ++digit[i - 1] == xs[elems[i - 1]].size()) digit[--i] = 0;
      if (i == 0) break;
    }
  });
  std::sort(out.begin(), out.end(), [](const GamblerSet& a, const GamblerSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return gambler_set_less(a, b);
  });
  return out;
}

GreedySearchResult best_greedy_family(const Instance& instance, const Caps& caps) {
  std::vector<GamblerSet> candidates = realizable_gambler_sets(instance, caps);
  const std::size_t n = candidates.size();

  // Immediate nonempty subsets of each candidate, which precede it.
  std::vector<std::vector<std::size_t>> parents(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (candidates[i].size() < 2) continue;
    for (std::size_t drop = 0; drop < candidates[i].size(); ++drop) {
      GamblerSet sub = candidates[i];
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      auto it = std::lower_bound(candidates.begin(), candidates.begin() + i, sub,
                                 [](const GamblerSet& a, const GamblerSet& b) {
                                   if (a.size() != b.size()) return a.size() < b.size();
                                   return gambler_set_less(a, b);
                                 });
      parents[i].push_back(static_cast<std::size_t>(it - candidates.begin()));
    }
  }

  std::optional<GreedySearchResult> best;
  std::uint64_t count = 0;
  std::vector<bool> included(n, false);

  auto visit = [&]() {
    if (++count > caps.greedy_families) {
      throw CapacityError("more than " + std::to_string(caps.greedy_families) +
                          " greedy families to search");
    }
    std::vector<GamblerSet> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (included[i]) members.push_back(candidates[i]);
    }
    GreedyFamily family(instance.inner(), std::move(members));
    ProphetReport report = evaluate_vs_almighty(instance, family, caps);
    if (!best || report.ratio > best->report.ratio) {
      best = GreedySearchResult{std::move(family), std::move(report), 0};
    }
  };

  // Downsets in order: exclude before include, candidates by size.
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      visit();
      return;
    }
    self(self, i + 1);
    bool allowed = std::all_of(parents[i].begin(), parents[i].end(),
                               [&](std::size_t p) { return included[p]; });
    if (allowed) {
      included[i] = true;
      self(self, i + 1);
      included[i] = false;
    }
  };
  recurse(recurse, 0);

  best->families_enumerated = count;
  return std::move(*best);
}

}  // namespace delegation_lab
