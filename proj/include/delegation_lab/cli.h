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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "delegation_lab/caps.h"
#include "delegation_lab/probing.h"
#include "delegation_lab/rational.h"

namespace delegation_lab {

enum class Command {
  kGap,
  kEvalPolicy,
  kBuildPolicy,
  kProphetCheck,
  kAdaptivity,
  kReproduce,
};

enum class OutputFormat { kJson, kCsv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitCapacity = 3;

struct RunConfig {
  Command command = Command::kGap;
  // build-policy: "threshold", "from-greedy" or "composed".
  // reproduce: "prop-lottery-positive", "prop-lottery-negative", "cor-half".
  std::string target;
  std::optional<std::string> instance_path;
  std::optional<std::string> builtin;
  Rational epsilon{1, 4};
  std::optional<TieBreakMode> tie_break;  // adversarial unless stated
  Caps caps;
  OutputFormat output = OutputFormat::kJson;
  Rational grid{1, 100};
  std::optional<std::string> policy_path;
  std::optional<std::string> menu_path;
  std::string inner_builder = "threshold";  // for build-policy composed
  std::uint64_t seed = 1;
  std::uint64_t count = 200;
};

// Executes one command, writing the report to `out` and diagnostics to
// `err`. Returns kExitOk, kExitInvalid (bad input or unsupported
// instance) or kExitCapacity.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses the command line into a RunConfig and runs it. Caps start from
// DELEGATION_LAB_CAPS and are then overridden by --caps.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace delegation_lab
