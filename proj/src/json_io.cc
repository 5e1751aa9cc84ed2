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

#include "delegation_lab/json_io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "delegation_lab/errors.h"

namespace delegation_lab {
namespace {

// Runs `f`, reporting nlohmann's type and key errors as InputError.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

ElementIndex index_of_id(const std::vector<std::string>& ids, const Json& json) {
  const std::string id = json.get<std::string>();
  for (ElementIndex e = 0; e < ids.size(); ++e) {
    if (ids[e] == id) return e;
  }
  throw InputError("unknown element id '" + id + "'");
}

ElementSet set_from_ids(const std::vector<std::string>& ids, const Json& json) {
  if (!json.is_array()) throw InputError("expected an array of element ids");
  ElementSet s;
  for (const Json& id : json) s.insert(index_of_id(ids, id));
  return s;
}

Json ids_of_set(const std::vector<std::string>& ids, ElementSet s) {
  Json out = Json::array();
  s.for_each([&](ElementIndex e) { out.push_back(ids.at(e)); });
  return out;
}

std::size_t nonnegative_size(const Json& json) {
  if (!json.is_number_integer() || json.get<std::int64_t>() < 0) {
    throw InputError("expected a nonnegative integer");
  }
  return json.get<std::size_t>();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

Json rational_to_json(const Rational& value) {
  return Json::array({numerator_i64(value), denominator_i64(value)});
}

Rational rational_from_json(const Json& json) {
  if (!json.is_array() || json.size() != 2 || !json[0].is_number_integer() ||
      !json[1].is_number_integer()) {
    throw InputError("a rational must be a [numerator, denominator] integer pair");
  }
  return make_rational(json[0].get<std::int64_t>(), json[1].get<std::int64_t>());
}

Json set_system_to_json(const SetSystem& system, const std::vector<std::string>& ids) {
  Json out;
  const SetSystem::Kind& kind = system.kind();
  if (std::holds_alternative<SetSystem::Free>(kind)) {
    out["kind"] = "free";
  } else if (const auto* u = std::get_if<SetSystem::Uniform>(&kind)) {
    out["kind"] = "uniform";
    out["k"] = u->k;
  } else if (const auto* p = std::get_if<SetSystem::Partition>(&kind)) {
    out["kind"] = "partition";
    out["blocks"] = Json::array();
    for (ElementSet block : p->blocks) out["blocks"].push_back(ids_of_set(ids, block));
    out["caps"] = p->caps;
  } else if (const auto* x = std::get_if<SetSystem::Explicit>(&kind)) {
    out["kind"] = "explicit";
    out["maximal"] = Json::array();
    for (ElementSet m : x->maximal) out["maximal"].push_back(ids_of_set(ids, m));
  } else {
    const auto& i = std::get<SetSystem::Intersection>(kind);
    out["kind"] = "intersection";
    out["parts"] = Json::array();
    for (const SetSystem& part : i.parts) out["parts"].push_back(set_system_to_json(part, ids));
  }
  return out;
}

SetSystem set_system_from_json(const Json& json, const std::vector<std::string>& ids) {
  return guarded("set system", [&] {
    const ElementSet ground = ElementSet::first_n(ids.size());
    const std::string kind = json.at("kind").get<std::string>();
    if (kind == "free") return SetSystem::free(ground);
    if (kind == "uniform") return SetSystem::uniform(ground, nonnegative_size(json.at("k")));
    if (kind == "partition") {
      std::vector<ElementSet> blocks;
      for (const Json& block : json.at("blocks")) blocks.push_back(set_from_ids(ids, block));
      std::vector<std::size_t> caps;
      for (const Json& cap : json.at("caps")) caps.push_back(nonnegative_size(cap));
      return SetSystem::partition(ground, std::move(blocks), std::move(caps));
    }
    if (kind == "explicit") {
      std::vector<ElementSet> maximal;
      for (const Json& set : json.at("maximal")) maximal.push_back(set_from_ids(ids, set));
      return SetSystem::explicit_family(ground, std::move(maximal));
    }
    if (kind == "intersection") {
      std::vector<SetSystem> parts;
      for (const Json& part : json.at("parts")) parts.push_back(set_system_from_json(part, ids));
      return SetSystem::intersection(ground, std::move(parts));
    }
    throw InputError("unknown set system kind '" + kind + "'");
  });
}

Json instance_to_json(const Instance& instance) {
  Json out;
  out["elements"] = Json::array();
  for (ElementIndex e = 0; e < instance.size(); ++e) {
    Json element;
    element["id"] = instance.id(e);
    element["support"] = Json::array();
    for (const UtilityAtom& atom : instance.support(e)) {
      Json a;
      a["x"] = rational_to_json(atom.x);
      a["y"] = rational_to_json(atom.y);
      a["p"] = rational_to_json(atom.prob);
      element["support"].push_back(std::move(a));
    }
    out["elements"].push_back(std::move(element));
  }
  out["outer"] = set_system_to_json(instance.outer(), instance.ids());
  out["inner"] = set_system_to_json(instance.inner(), instance.ids());
  return out;
}

Instance instance_from_json(const Json& json) {
  return guarded("instance", [&] {
    std::vector<std::string> ids;
    std::vector<std::vector<UtilityAtom>> supports;
    const Json& elements = json.at("elements");
    if (!elements.is_array()) throw InputError("'elements' must be an array");
    for (const Json& element : elements) {
      ids.push_back(element.at("id").get<std::string>());
      std::vector<UtilityAtom> support;
      for (const Json& atom : element.at("support")) {
        support.push_back({rational_from_json(atom.at("x")), rational_from_json(atom.at("y")),
                           rational_from_json(atom.at("p"))});
      }
      supports.push_back(std::move(support));
    }
    if (ids.size() > ElementSet::kMaxElements) {
      throw InputError("at most 64 elements are supported");
    }
    SetSystem outer = set_system_from_json(json.at("outer"), ids);
    SetSystem inner = set_system_from_json(json.at("inner"), ids);
    return Instance(std::move(ids), std::move(supports), std::move(outer), std::move(inner));
  });
}

Json outcome_set_to_json(const Instance& instance, const OutcomeSet& set) {
  Json out = Json::array();
  for (const Outcome& o : set) {
    Json j;
    j["element"] = instance.id(o.element);
    j["x"] = rational_to_json(o.x);
    j["y"] = rational_to_json(o.y);
    out.push_back(std::move(j));
  }
  return out;
}

OutcomeSet outcome_set_from_json(const Instance& instance, const Json& json) {
  return guarded("outcome set", [&] {
    if (!json.is_array()) throw InputError("an outcome set must be an array");
    OutcomeSet set;
    for (const Json& o : json) {
      set.push_back(Outcome{index_of_id(instance.ids(), o.at("element")),
                            rational_from_json(o.at("x")), rational_from_json(o.at("y"))});
    }
    return canonical(std::move(set));
  });
}

Json policy_to_json(const Instance& instance, const Policy& policy, const Caps& caps) {
  Json out;
  if (const auto* t = std::get_if<Policy::XThreshold>(&policy.kind())) {
    out["kind"] = "x-threshold";
    out["tau"] = rational_to_json(t->tau);
    return out;
  }
  const std::vector<OutcomeSet> sets =
      std::holds_alternative<Policy::Explicit>(policy.kind())
          ? std::get<Policy::Explicit>(policy.kind()).acceptable
          : policy.materialize(instance, caps);
  out["kind"] = "explicit";
  out["acceptable"] = Json::array();
  for (const OutcomeSet& set : sets) out["acceptable"].push_back(outcome_set_to_json(instance, set));
  return out;
}

Policy policy_from_json(const Instance& instance, const Json& json) {
  return guarded("policy", [&] {
    const std::string kind = json.at("kind").get<std::string>();
    if (kind == "x-threshold") return Policy::x_threshold(rational_from_json(json.at("tau")));
    if (kind != "explicit") throw InputError("unknown policy kind '" + kind + "'");
    std::vector<OutcomeSet> sets;
    for (const Json& set : json.at("acceptable")) {
      sets.push_back(outcome_set_from_json(instance, set));
    }
    Policy policy = Policy::explicit_family(std::move(sets));
    policy.validate(instance);
    return policy;
  });
}

Json menu_to_json(const Instance& instance, const LotteryMenu& menu) {
  Json out;
  out["lotteries"] = Json::array();
  for (const Lottery& lottery : menu.lotteries()) {
    Json l;
    l["atoms"] = Json::array();
    for (const LotteryAtom& atom : lottery.atoms) {
      Json a;
      a["set"] = outcome_set_to_json(instance, atom.set);
      a["p"] = rational_to_json(atom.p);
      l["atoms"].push_back(std::move(a));
    }
    out["lotteries"].push_back(std::move(l));
  }
  return out;
}

LotteryMenu menu_from_json(const Instance& instance, const Json& json) {
  return guarded("lottery menu", [&] {
    std::vector<Lottery> lotteries;
    for (const Json& l : json.at("lotteries")) {
      Lottery lottery;
      for (const Json& atom : l.at("atoms")) {
        lottery.atoms.push_back(
            {outcome_set_from_json(instance, atom.at("set")), rational_from_json(atom.at("p"))});
      }
      lotteries.push_back(std::move(lottery));
    }
    LotteryMenu menu(std::move(lotteries));
    menu.validate(instance);
    return menu;
  });
}

}  // namespace delegation_lab
