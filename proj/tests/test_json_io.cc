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

#include <random>
#include <string>
#include <vector>

#include "delegation_lab/builtin_instances.h"
#include "delegation_lab/errors.h"
#include "delegation_lab/json_io.h"
#include "delegation_lab/random_instance.h"
#include "doctest.h"

namespace delegation_lab {
namespace {

TEST_CASE("rationals serialize as reduced pairs") {
  CHECK(rational_to_json(make_rational(6, 8)).dump() == "[3,4]");
  CHECK(rational_from_json(parse_json("[6,8]")) == Rational(3, 4));
  CHECK(rational_from_json(parse_json("[-1,3]")) == Rational(-1, 3));
  CHECK_THROWS_AS(rational_from_json(parse_json("[1,0]")), InputError);
  CHECK_THROWS_AS(rational_from_json(parse_json("[1]")), InputError);
  CHECK_THROWS_AS(rational_from_json(parse_json("\"1/2\"")), InputError);
  CHECK_THROWS_AS(rational_from_json(parse_json("[0.5,1]")), InputError);
}

TEST_CASE("malformed documents are input errors") {
  CHECK_THROWS_AS(parse_json("{\"elements\": ["), InputError);
  CHECK_THROWS_AS(instance_from_json(parse_json("{}")), InputError);
  CHECK_THROWS_AS(instance_from_json(parse_json(
                      R"({"elements": [{"id": "a", "support": [{"x": [1,1], "y": [1,1], "p": [1,2]}]}],
                          "outer": {"kind": "free"}, "inner": {"kind": "uniform", "k": 1}})")),
                  InputError);
  CHECK_THROWS_AS(instance_from_json(parse_json(
                      R"({"elements": [{"id": "a", "support": [{"x": [1,1], "y": [1,1], "p": [1,1]}]}],
                          "outer": {"kind": "matching"}, "inner": {"kind": "uniform", "k": 1}})")),
                  InputError);
  CHECK_THROWS_AS(instance_from_json(parse_json(
                      R"({"elements": [{"id": "a", "support": [{"x": [1,1], "y": [1,1], "p": [1,1]}]}],
                          "outer": {"kind": "partition", "blocks": [["b"]], "caps": [1]},
                          "inner": {"kind": "uniform", "k": 1}})")),
                  InputError);
  CHECK_THROWS_AS(load_json_file("/nonexistent/instance.json"), InputError);
}

TEST_CASE("instances round-trip") {
  std::mt19937_64 rng(81);
  RandomInstanceOptions opts;
  opts.outer = OuterKind::kMatroid;
  std::vector<Instance> instances = {table1_instance(Rational(1, 4)), coins2_instance()};
  for (int i = 0; i < 20; ++i) instances.push_back(random_instance(rng, opts));
  for (const Instance& inst : instances) {
    Json json = instance_to_json(inst);
    Instance back = instance_from_json(parse_json(json.dump()));
    CHECK(instance_to_json(back) == json);
    CHECK(back.ids() == inst.ids());
  }

  ElementSet g = ElementSet::first_n(3);
  Instance nested({"a", "b", "c"}, {{{1, 1, 1}}, {{2, 2, 1}}, {{3, 3, 1}}},
                  SetSystem::intersection(g, {SetSystem::uniform(g, 2),
                                              SetSystem::explicit_family(g, {ElementSet::of({0, 1}),
                                                                             ElementSet::of({2})})}),
                  SetSystem::uniform(g, 1));
  Json json = instance_to_json(nested);
  CHECK(instance_to_json(instance_from_json(json)) == json);
}

TEST_CASE("policies and menus round-trip") {
  Rational eps(1, 4);
  Instance t1 = table1_instance(eps);
  Outcome omega0{0, 0, 0};
  Outcome omega1{0, 1 / eps, 1 - eps};
  Outcome omega2{1, 1, 1};

  Policy threshold = Policy::x_threshold(Rational(3, 2));
  Json tj = policy_to_json(t1, threshold);
  CHECK(tj.dump() == R"({"kind":"x-threshold","tau":[3,2]})");
  CHECK(std::get<Policy::XThreshold>(policy_from_json(t1, tj).kind()).tau == Rational(3, 2));

  Policy family = Policy::explicit_family({{omega2}, {omega1}});
  Policy back = policy_from_json(t1, parse_json(policy_to_json(t1, family).dump()));
  CHECK(back.materialize(t1) == family.materialize(t1));

  Policy greedy = policy_from_greedy(GreedyFamily::threshold(t1, 1));
  Json gj = policy_to_json(t1, greedy);
  CHECK(gj["kind"] == "explicit");
  CHECK(policy_from_json(t1, gj).materialize(t1) == greedy.materialize(t1));

  CHECK_THROWS_AS(policy_from_json(t1, parse_json(
                      R"({"kind": "explicit", "acceptable": [[{"element": "2", "x": [5,1], "y": [1,1]}]]})")),
                  InputError);
  CHECK_THROWS_AS(policy_from_json(t1, parse_json(R"({"kind": "lottery"})")), InputError);

  LotteryMenu menu({Lottery{{{{omega1}, 1}}},
                    Lottery{{{{omega2}, 1 - 2 * eps}, {{omega0}, 2 * eps}}}});
  Json mj = menu_to_json(t1, menu);
  LotteryMenu menu_back = menu_from_json(t1, parse_json(mj.dump()));
  CHECK(menu_back.lotteries() == menu.lotteries());
  CHECK(menu_to_json(t1, menu_back) == mj);
}

}  // namespace
}  // namespace delegation_lab
