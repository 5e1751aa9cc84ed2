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

// JSON forms of instances, policies and lottery menus. Rationals are
// [numerator, denominator] integer pairs; elements are referred to by id.
// All parse errors are reported as InputError.

#pragma once

#include <string>
#include <vector>

#include "delegation_lab/caps.h"
#include "delegation_lab/instance.h"
#include "delegation_lab/lottery.h"
#include "delegation_lab/policy.h"
#include "json.hpp"

namespace delegation_lab {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);

Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& json);

Json set_system_to_json(const SetSystem& system, const std::vector<std::string>& ids);
SetSystem set_system_from_json(const Json& json, const std::vector<std::string>& ids);

Json instance_to_json(const Instance& instance);
Instance instance_from_json(const Json& json);

Json outcome_set_to_json(const Instance& instance, const OutcomeSet& set);
OutcomeSet outcome_set_from_json(const Instance& instance, const Json& json);

// Threshold policies keep their compact form; greedy projections are
// written as their explicit realizable family.
Json policy_to_json(const Instance& instance, const Policy& policy, const Caps& caps = {});
Policy policy_from_json(const Instance& instance, const Json& json);

Json menu_to_json(const Instance& instance, const LotteryMenu& menu);
LotteryMenu menu_from_json(const Instance& instance, const Json& json);

}  // namespace delegation_lab
