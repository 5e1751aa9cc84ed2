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

#include "delegation_lab/instance.h"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "delegation_lab/errors.h"

namespace delegation_lab {
namespace {

std::vector<UtilityAtom> canonical_support(std::vector<UtilityAtom> atoms,
                                           const std::string& id) {
  if (atoms.empty()) throw InputError("element '" + id + "' has an empty support");
  for (const UtilityAtom& a : atoms) {
    if (sgn(a.prob) <= 0 || a.prob > 1) {
      throw InputError("element '" + id + "' has an atom probability outside (0, 1]");
    }
    if (sgn(a.x) < 0 || sgn(a.y) < 0) {
      throw InputError("element '" + id + "' has a negative utility");
    }
  }
  std::sort(atoms.begin(), atoms.end(), [](const UtilityAtom& a, const UtilityAtom& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<UtilityAtom> merged;
  for (UtilityAtom& a : atoms) {
    if (!merged.empty() && merged.back().x == a.x && merged.back().y == a.y) {
      merged.back().prob += a.prob;
    } else {
      merged.push_back(std::move(a));
    }
  }
  Rational total = 0;
  for (const UtilityAtom& a : merged) total += a.prob;
  if (total != 1) {
    throw InputError("probabilities of element '" + id + "' sum to " +
                     to_fraction_string(total) + ", not 1");
  }
  return merged;
}

std::uint64_t saturating_product(const Instance& instance, ElementSet f) {
  std::uint64_t product = 1;
  bool saturated = false;
  f.for_each([&](ElementIndex e) {
    std::uint64_t s = instance.support(e).size();
    if (saturated) return;
    if (product > std::numeric_limits<std::uint64_t>::max() / s) {
      saturated = true;
      product = std::numeric_limits<std::uint64_t>::max();
    } else {
      product *= s;
    }
  });
  return product;
}

}  // namespace

bool outcome_less(const Outcome& a, const Outcome& b) {
  if (a.element != b.element) return a.element < b.element;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

OutcomeSet canonical(OutcomeSet set) {
  std::sort(set.begin(), set.end(), outcome_less);
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

bool outcome_set_less(const OutcomeSet& a, const OutcomeSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), outcome_less);
}

ElementSet elements_of(const OutcomeSet& set) {
  ElementSet s;
  for (const Outcome& o : set) s.insert(o.element);
  return s;
}

Rational total_x(const OutcomeSet& set) {
  Rational total = 0;
  for (const Outcome& o : set) total += o.x;
  return total;
}

Rational total_y(const OutcomeSet& set) {
  Rational total = 0;
  for (const Outcome& o : set) total += o.y;
  return total;
}

Instance::Instance(std::vector<std::string> ids, std::vector<std::vector<UtilityAtom>> supports,
                   SetSystem outer, SetSystem inner)
    : ids_(std::move(ids)), outer_(std::move(outer)), inner_(std::move(inner)) {
  if (ids_.size() != supports.size()) {
    throw InputError("instance has " + std::to_string(ids_.size()) + " ids but " +
                     std::to_string(supports.size()) + " supports");
  }
  if (ids_.size() > ElementSet::kMaxElements) {
    throw CapacityError("instance has " + std::to_string(ids_.size()) +
                        " elements; at most 64 are supported");
  }
  std::set<std::string> seen;
  for (const std::string& id : ids_) {
    if (!seen.insert(id).second) throw InputError("duplicate element id '" + id + "'");
  }
  supports_.reserve(supports.size());
  for (std::size_t e = 0; e < supports.size(); ++e) {
    supports_.push_back(canonical_support(std::move(supports[e]), ids_[e]));
  }
  if (outer_.ground() != all()) throw InputError("outer constraint ground set != elements");
  if (inner_.ground() != all()) throw InputError("inner constraint ground set != elements");
}

ElementIndex Instance::index_of(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw InputError("unknown element id '" + id + "'");
  return static_cast<ElementIndex>(it - ids_.begin());
}

std::optional<std::size_t> Instance::atom_index(ElementIndex e, const Rational& x,
                                                const Rational& y) const {
  if (e >= supports_.size()) return std::nullopt;
  const auto& atoms = supports_[e];
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    if (atoms[a].x == x && atoms[a].y == y) return a;
  }
  return std::nullopt;
}

Outcome Instance::outcome(ElementIndex e, std::size_t atom) const {
  const UtilityAtom& a = supports_.at(e).at(atom);
  return Outcome{e, a.x, a.y};
}

Instance Instance::restrict(ElementSet f) const {
  if (!f.is_subset_of(all())) throw InputError("restriction set contains unknown elements");
  std::vector<ElementIndex> mapping(size(), 0);
  std::vector<std::string> ids;
  std::vector<std::vector<UtilityAtom>> supports;
  f.for_each([&](ElementIndex e) {
    mapping[e] = ids.size();
    ids.push_back(ids_[e]);
    supports.push_back(supports_[e]);
  });
  SetSystem inner = inner_.restrict(f).relabel(mapping);
  SetSystem outer = SetSystem::free(ElementSet::first_n(ids.size()));
  return Instance(std::move(ids), std::move(supports), std::move(outer), std::move(inner));
}

Instance Instance::with_outer(SetSystem outer) const {
  return Instance(ids_, supports_, std::move(outer), inner_);
}

std::vector<std::string> Instance::ids_of(ElementSet s) const {
  std::vector<std::string> out;
  s.for_each([&](ElementIndex e) { out.push_back(ids_.at(e)); });
  return out;
}

std::uint64_t scenario_count(const Instance& instance) {
  return saturating_product(instance, instance.all());
}

std::vector<Scenario> enumerate_scenarios(const Instance& instance, const Caps& caps) {
  return enumerate_scenarios_over(instance, instance.all(), caps);
}

std::vector<Scenario> enumerate_scenarios_over(const Instance& instance, ElementSet f,
                                               const Caps& caps) {
  std::uint64_t count = saturating_product(instance, f);
  if (count > caps.scenarios) {
    throw CapacityError("scenario enumeration needs " + std::to_string(count) +
                        " scenarios; cap is " + std::to_string(caps.scenarios));
  }
  std::vector<ElementIndex> elements = f.to_vector();
  std::vector<Scenario> out;
  out.reserve(count);

  Realization r{std::vector<std::size_t>(instance.size(), 0)};
  while (true) {
    Rational p = 1;
    for (ElementIndex e : elements) p *= instance.support(e)[r.atom[e]].prob;
    out.push_back(Scenario{r, p});

    // Odometer, last element fastest.
    std::size_t i = elements.size();
    while (i > 0) {
      ElementIndex e = elements[i - 1];
      if (++r.atom[e] < instance.support(e).size()) break;
      r.atom[e] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

OutcomeSet outcomes_of(const Instance& instance, const Realization& r, ElementSet f) {
  if (!f.is_subset_of(instance.all())) throw InputError("probe set contains unknown elements");
  OutcomeSet out;
  f.for_each([&](ElementIndex e) { out.push_back(instance.outcome(e, r.atom.at(e))); });
  return out;
}

bool is_inner_feasible_outcome_set(const Instance& instance, const OutcomeSet& set) {
  ElementSet elements;
  for (const Outcome& o : set) {
    if (o.element >= instance.size() || elements.contains(o.element)) return false;
    if (!instance.atom_index(o.element, o.x, o.y)) return false;
    elements.insert(o.element);
  }
  return instance.inner().is_feasible(elements);
}

}  // namespace delegation_lab
