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

#include "delegation_lab/caps.h"

#include <charconv>
#include <cstdlib>
#include <utility>
#include <vector>

#include "delegation_lab/errors.h"

namespace delegation_lab {
namespace {

using Field = std::uint64_t Caps::*;

const std::vector<std::pair<std::string_view, Field>>& fields() {
  static const std::vector<std::pair<std::string_view, Field>> kFields = {
      {"scenarios", &Caps::scenarios},
      {"dp_states", &Caps::dp_states},
      {"outer_sets", &Caps::outer_sets},
      {"adversary_products", &Caps::adversary_products},
      {"greedy_families", &Caps::greedy_families},
      {"policy_candidates", &Caps::policy_candidates},
      {"outcome_sets", &Caps::outcome_sets},
  };
  return kFields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Caps Caps::parse(std::string_view text, const Caps& base) {
  Caps caps = base;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;

    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("cap override '" + std::string(item) + "' is not key=value");
    }
    std::string_view key = trim(item.substr(0, eq));
    std::string_view value = trim(item.substr(eq + 1));

    std::uint64_t parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc() || ptr != value.data() + value.size() || parsed == 0) {
      throw InputError("cap '" + std::string(key) + "' needs a positive integer, got '" +
                       std::string(value) + "'");
    }

    bool known = false;
    for (const auto& [name, field] : fields()) {
      if (name == key) {
        caps.*field = parsed;
        known = true;
      }
    }
    if (!known) throw InputError("unknown cap '" + std::string(key) + "'");
  }
  return caps;
}

Caps Caps::from_environment() {
  const char* env = std::getenv("DELEGATION_LAB_CAPS");
  if (env == nullptr) return Caps{};
  return parse(env, Caps{});
}

std::string Caps::to_string() const {
  std::string out;
  for (const auto& [name, field] : fields()) {
    if (!out.empty()) out += ",";
    out += std::string(name) + "=" + std::to_string(this->*field);
  }
  return out;
}

}  // namespace delegation_lab
