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
#include <random>

#include "delegation_lab/instance.h"

namespace delegation_lab {

enum class OuterKind {
  kFree,
  kPartition,  // random partition matroid, at most max_blocks blocks
  kUniform,    // uniform matroid of random rank
  kMatroid,    // kPartition or kUniform, chosen at random
};

// Random desk-scale instances with a 1-uniform inner constraint.
//
// Utilities are multiples of 1/value_denominator in [0, max_value]; atom
// probabilities are w_i / sum(w) for weights w_i in [1, max_weight].
struct RandomInstanceOptions {
  std::size_t min_elements = 1;
  std::size_t max_elements = 4;
  std::size_t max_support = 3;
  std::int64_t max_value = 10;
  std::int64_t value_denominator = 2;
  std::int64_t max_weight = 4;
  // When true agent utilities are drawn from (0, max_value] instead of
  // [0, max_value].
  bool positive_agent_utility = true;
  OuterKind outer = OuterKind::kFree;
  std::size_t max_blocks = 3;
};

// Deterministic for a given engine state on every platform: draws use
// modular reduction of raw 64-bit outputs rather than <random>
// distributions.
Instance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& options);

}  // namespace delegation_lab
