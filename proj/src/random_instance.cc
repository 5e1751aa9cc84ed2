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

#include "delegation_lab/random_instance.h"

#include <algorithm>
#include <string>
#include <vector>

#include "delegation_lab/errors.h"

namespace delegation_lab {
namespace {

// Uniform-ish integer in [lo, hi].
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

SetSystem random_partition(std::mt19937_64& rng, std::size_t n, std::size_t max_blocks) {
  auto blocks_wanted = static_cast<std::size_t>(
      draw(rng, 1, static_cast<std::int64_t>(std::min(max_blocks, n))));
  std::vector<ElementSet> blocks(blocks_wanted);
  for (ElementIndex e = 0; e < n; ++e) {
    blocks[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(blocks_wanted) - 1))]
        .insert(e);
  }
  std::vector<ElementSet> nonempty;
  std::vector<std::size_t> caps;
  for (ElementSet b : blocks) {
    if (b.empty()) continue;
    nonempty.push_back(b);
    caps.push_back(static_cast<std::size_t>(draw(rng, 1, static_cast<std::int64_t>(b.size()))));
  }
  return SetSystem::partition(ElementSet::first_n(n), std::move(nonempty), std::move(caps));
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& options) {
  if (options.min_elements == 0 || options.min_elements > options.max_elements ||
      options.max_support == 0 || options.value_denominator <= 0 || options.max_weight <= 0) {
    throw InputError("invalid random instance options");
  }
  auto n = static_cast<std::size_t>(draw(rng, static_cast<std::int64_t>(options.min_elements),
                                         static_cast<std::int64_t>(options.max_elements)));
  std::int64_t top = options.max_value * options.value_denominator;

  std::vector<std::string> ids;
  std::vector<std::vector<UtilityAtom>> supports;
  for (std::size_t e = 0; e < n; ++e) {
    ids.push_back("e" + std::to_string(e));
    auto k = static_cast<std::size_t>(
        draw(rng, 1, static_cast<std::int64_t>(options.max_support)));
    std::vector<std::int64_t> weights;
    std::int64_t total = 0;
    for (std::size_t a = 0; a < k; ++a) {
      weights.push_back(draw(rng, 1, options.max_weight));
      total += weights.back();
    }
    std::vector<UtilityAtom> atoms;
    for (std::size_t a = 0; a < k; ++a) {
      std::int64_t x = draw(rng, 0, top);
      std::int64_t y = draw(rng, options.positive_agent_utility ? 1 : 0, top);
      atoms.push_back(UtilityAtom{make_rational(x, options.value_denominator),
                                  make_rational(y, options.value_denominator),
                                  make_rational(weights[a], total)});
    }
    supports.push_back(std::move(atoms));
  }

  ElementSet ground = ElementSet::first_n(n);
  OuterKind kind = options.outer;
  if (kind == OuterKind::kMatroid) {
    kind = draw(rng, 0, 1) == 0 ? OuterKind::kPartition : OuterKind::kUniform;
  }
  SetSystem outer = SetSystem::free(ground);
  if (kind == OuterKind::kPartition) {
    outer = random_partition(rng, n, options.max_blocks);
  } else if (kind == OuterKind::kUniform) {
    outer = SetSystem::uniform(ground,
                               static_cast<std::size_t>(draw(rng, 1, static_cast<std::int64_t>(n))));
  }
  return Instance(std::move(ids), std::move(supports), std::move(outer),
                  SetSystem::uniform(ground, 1));
}

}  // namespace delegation_lab
