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

#include "delegation_lab/builtin_instances.h"

#include "delegation_lab/errors.h"

namespace delegation_lab {
namespace {

void require_epsilon(const Rational& eps) {
  if (sgn(eps) <= 0 || eps >= 1) {
    throw InputError("epsilon must lie in (0, 1), got " + to_fraction_string(eps));
  }
}

Instance two_element_instance(const Rational& eps, const Rational& rare_agent_utility) {
  require_epsilon(eps);
  ElementSet ground = ElementSet::first_n(2);
  std::vector<std::vector<UtilityAtom>> supports = {
      {UtilityAtom{0, 0, Rational(1 - eps)},
       UtilityAtom{Rational(1 / eps), rare_agent_utility, eps}},
      {UtilityAtom{1, 1, 1}},
  };
  return Instance({"1", "2"}, std::move(supports), SetSystem::free(ground),
                  SetSystem::uniform(ground, 1));
}

}  // namespace

Instance table1_instance(const Rational& eps) {
  return two_element_instance(eps, Rational(1 - eps));
}

Instance table2_instance(const Rational& eps) { return two_element_instance(eps, 0); }

Instance coins2_instance() {
  ElementSet ground = ElementSet::first_n(2);
  Rational half(1, 2);
  std::vector<UtilityAtom> coin = {UtilityAtom{0, 0, half}, UtilityAtom{1, 1, half}};
  return Instance({"a", "b"}, {coin, coin}, SetSystem::free(ground),
                  SetSystem::uniform(ground, 1));
}

Instance builtin_instance(const std::string& name, const Rational& eps) {
  if (name == "table1") return table1_instance(eps);
  if (name == "table2") return table2_instance(eps);
  if (name == "coins2") return coins2_instance();
  throw InputError("unknown built-in instance '" + name + "'");
}

std::vector<std::string> builtin_instance_names() { return {"table1", "table2", "coins2"}; }

}  // namespace delegation_lab
