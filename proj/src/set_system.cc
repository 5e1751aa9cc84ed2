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

#include "delegation_lab/set_system.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "delegation_lab/errors.h"

namespace delegation_lab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_subset(ElementSet subset, ElementSet ground, const char* what) {
  if (!subset.is_subset_of(ground)) {
    auto stray = (subset - ground).to_vector();
    throw InputError(std::string(what) + ": element index " + std::to_string(stray.front()) +
                     " is not in the ground set");
  }
}

ElementSet relabel_set(ElementSet s, std::span<const ElementIndex> mapping) {
  ElementSet out;
  s.for_each([&](ElementIndex e) { out.insert(mapping[e]); });
  return out;
}

void check_weights(ElementSet within, std::span<const Rational> weights) {
  within.for_each([&](ElementIndex e) {
    if (e >= weights.size()) {
      throw InputError("no weight for element index " + std::to_string(e));
    }
    if (sgn(weights[e]) < 0) {
      throw InputError("negative weight for element index " + std::to_string(e));
    }
  });
}

Rational weight_of(ElementSet s, std::span<const Rational> weights) {
  Rational total = 0;
  s.for_each([&](ElementIndex e) { total += weights[e]; });
  return total;
}

}  // namespace

std::vector<ElementSet> maximal_antichain(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](ElementSet a, ElementSet b) { return a.size() > b.size(); });
  std::vector<ElementSet> kept;
  for (ElementSet s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](ElementSet k) { return s.is_subset_of(k); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), lexicographically_less);
  return kept;
}

SetSystem SetSystem::free(ElementSet ground) { return SetSystem(ground, Free{}); }

SetSystem SetSystem::uniform(ElementSet ground, std::size_t k) {
  return SetSystem(ground, Uniform{k});
}

SetSystem SetSystem::partition(ElementSet ground, std::vector<ElementSet> blocks,
                               std::vector<std::size_t> caps) {
  if (blocks.size() != caps.size()) {
    throw InputError("partition has " + std::to_string(blocks.size()) + " blocks but " +
                     std::to_string(caps.size()) + " capacities");
  }
  ElementSet seen;
  for (ElementSet block : blocks) {
    require_subset(block, ground, "partition block");
    if (!(block & seen).empty()) throw InputError("partition blocks overlap");
    seen = seen | block;
  }
  return SetSystem(ground, Partition{std::move(blocks), std::move(caps)});
}

SetSystem SetSystem::explicit_family(ElementSet ground, std::vector<ElementSet> feasible) {
  for (ElementSet s : feasible) require_subset(s, ground, "explicit feasible set");
  return SetSystem(ground, Explicit{maximal_antichain(std::move(feasible))});
}

SetSystem SetSystem::intersection(ElementSet ground, std::vector<SetSystem> parts) {
  for (const SetSystem& part : parts) {
    if (part.ground() != ground) {
      throw InputError("intersection parts must share the ground set");
    }
  }
  return SetSystem(ground, Intersection{std::move(parts)});
}

bool SetSystem::is_feasible(ElementSet subset) const {
  require_subset(subset, ground_, "feasibility query");
  return feasible_unchecked(subset);
}

bool SetSystem::feasible_unchecked(ElementSet subset) const {
  return std::visit(
      Overloaded{
          [](const Free&) { return true; },
          [&](const Uniform& u) { return subset.size() <= u.k; },
          [&](const Partition& p) {
            for (std::size_t i = 0; i < p.blocks.size(); ++i) {
              if ((subset & p.blocks[i]).size() > p.caps[i]) return false;
            }
            return true;
          },
          [&](const Explicit& x) {
            if (subset.empty()) return true;
            return std::any_of(x.maximal.begin(), x.maximal.end(),
                               [&](ElementSet m) { return subset.is_subset_of(m); });
          },
          [&](const Intersection& in) {
            return std::all_of(in.parts.begin(), in.parts.end(),
                               [&](const SetSystem& p) { return p.feasible_unchecked(subset); });
          },
      },
      kind_);
}

SetSystem SetSystem::restrict(ElementSet f) const {
  require_subset(f, ground_, "restriction");
  return std::visit(
      Overloaded{
          [&](const Free&) { return SetSystem::free(f); },
          [&](const Uniform& u) { return SetSystem::uniform(f, u.k); },
          [&](const Partition& p) {
            std::vector<ElementSet> blocks;
            std::vector<std::size_t> caps;
            for (std::size_t i = 0; i < p.blocks.size(); ++i) {
              ElementSet b = p.blocks[i] & f;
              if (b.empty()) continue;
              blocks.push_back(b);
              caps.push_back(p.caps[i]);
            }
            return SetSystem::partition(f, std::move(blocks), std::move(caps));
          },
          [&](const Explicit& x) {
            std::vector<ElementSet> sets;
            sets.reserve(x.maximal.size());
            for (ElementSet m : x.maximal) sets.push_back(m & f);
            return SetSystem::explicit_family(f, std::move(sets));
          },
          [&](const Intersection& in) {
            std::vector<SetSystem> parts;
            parts.reserve(in.parts.size());
            for (const SetSystem& p : in.parts) parts.push_back(p.restrict(f));
            return SetSystem::intersection(f, std::move(parts));
          },
      },
      kind_);
}

SetSystem SetSystem::relabel(std::span<const ElementIndex> mapping) const {
  ElementSet ground = relabel_set(ground_, mapping);
  if (ground.size() != ground_.size()) throw InputError("relabeling is not injective");
  return std::visit(
      Overloaded{
          [&](const Free&) { return SetSystem::free(ground); },
          [&](const Uniform& u) { return SetSystem::uniform(ground, u.k); },
          [&](const Partition& p) {
            std::vector<ElementSet> blocks;
            for (ElementSet b : p.blocks) blocks.push_back(relabel_set(b, mapping));
            return SetSystem::partition(ground, std::move(blocks), p.caps);
          },
          [&](const Explicit& x) {
            std::vector<ElementSet> sets;
            for (ElementSet m : x.maximal) sets.push_back(relabel_set(m, mapping));
            return SetSystem::explicit_family(ground, std::move(sets));
          },
          [&](const Intersection& in) {
            std::vector<SetSystem> parts;
            for (const SetSystem& p : in.parts) parts.push_back(p.relabel(mapping));
            return SetSystem::intersection(ground, std::move(parts));
          },
      },
      kind_);
}

bool SetSystem::is_greedy_exact() const {
  return std::holds_alternative<Free>(kind_) || std::holds_alternative<Uniform>(kind_) ||
         std::holds_alternative<Partition>(kind_);
}

WeightedSet SetSystem::max_weight_feasible(std::span<const Rational> weights) const {
  return max_weight_feasible_within(ground_, weights);
}

WeightedSet SetSystem::max_weight_feasible_within(ElementSet within,
                                                  std::span<const Rational> weights) const {
  require_subset(within, ground_, "weighted rank query");
  check_weights(within, weights);
  return is_greedy_exact() ? greedy(within, weights) : exhaustive(within, weights);
}

WeightedSet SetSystem::greedy(ElementSet within, std::span<const Rational> weights) const {
  std::vector<ElementIndex> order;
  within.for_each([&](ElementIndex e) {
    if (sgn(weights[e]) > 0) order.push_back(e);
  });
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementIndex a, ElementIndex b) { return weights[a] > weights[b]; });

  WeightedSet best{ElementSet{}, Rational(0)};
  for (ElementIndex e : order) {
    ElementSet grown = best.set.with(e);
    if (feasible_unchecked(grown)) {
      best.set = grown;
      best.value += weights[e];
    }
  }
  return best;
}

WeightedSet SetSystem::exhaustive(ElementSet within, std::span<const Rational> weights) const {
  ElementSet positive;
  within.for_each([&](ElementIndex e) {
    if (sgn(weights[e]) > 0) positive.insert(e);
  });

  WeightedSet best{ElementSet{}, Rational(0)};
  auto consider = [&](ElementSet s) {
    Rational w = weight_of(s, weights);
    if (w > best.value || (w == best.value && lexicographically_less(s, best.set))) {
      best.set = s;
      best.value = w;
    }
  };

  if (const auto* x = std::get_if<Explicit>(&kind_)) {
    // Weights are nonnegative, so some maximal member (trimmed to the
    // positive-weight elements) attains the optimum. Ties among those may
    // still prefer a strict subset lexicographically; search their subsets.
    Rational top = 0;
    for (ElementSet m : x->maximal) top = std::max(top, weight_of(m & positive, weights));
    for (ElementSet m : x->maximal) {
      ElementSet trimmed = m & positive;
      if (weight_of(trimmed, weights) != top) continue;
      trimmed.for_each_subset([&](ElementSet s) {
        if (weight_of(s, weights) == top) consider(s);
      });
    }
    return best;
  }

  positive.for_each_subset([&](ElementSet s) {
    if (feasible_unchecked(s)) consider(s);
  });
  return best;
}

bool is_one_uniform(const SetSystem& system) {
  std::vector<ElementIndex> ground = system.ground().to_vector();
  for (ElementIndex e : ground) {
    if (!system.is_feasible(ElementSet::of({e}))) return false;
  }
  for (std::size_t i = 0; i < ground.size(); ++i) {
    for (std::size_t j = i + 1; j < ground.size(); ++j) {
      if (system.is_feasible(ElementSet::of({ground[i], ground[j]}))) return false;
    }
  }
  return true;
}

bool is_invariant_under_swap(const SetSystem& system, ElementIndex a, ElementIndex b) {
  ElementSet ground = system.ground();
  if (!ground.contains(a) || !ground.contains(b)) return false;
  bool invariant = true;
  ground.for_each_subset([&](ElementSet s) {
    if (!invariant) return;
    ElementSet swapped = s;
    if (s.contains(a) != s.contains(b)) {
      swapped = s.contains(a) ? s.without(a).with(b) : s.without(b).with(a);
    }
    if (system.is_feasible(s) != system.is_feasible(swapped)) invariant = false;
  });
  return invariant;
}

}  // namespace delegation_lab
