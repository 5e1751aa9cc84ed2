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

#include "delegation_lab/cli.h"

#include <chrono>
#include <cstdio>
#include <random>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "delegation_lab/benchmark.h"
#include "delegation_lab/builtin_instances.h"
#include "delegation_lab/delegation.h"
#include "delegation_lab/errors.h"
#include "delegation_lab/json_io.h"
#include "delegation_lab/lottery.h"
#include "delegation_lab/oracle.h"
#include "delegation_lab/prophet.h"
#include "delegation_lab/random_instance.h"

namespace delegation_lab {
namespace {

// One CSV row: a headline value and ratio.
struct Row {
  std::string command;
  Rational value;
  Rational alpha;
};

struct Report {
  std::string instance_label;
  bool uses_epsilon = false;
  TieBreakMode mode = TieBreakMode::kAdversarial;
  Json body;
  std::vector<Row> rows;
};

Json r(const Rational& value) { return render(value); }

Json ids_json(const Instance& instance, ElementSet s) {
  Json out = Json::array();
  for (const std::string& id : instance.ids_of(s)) out.push_back(id);
  return out;
}

Json evaluation_json(const Instance& instance, const PolicyEvaluation& eval) {
  Json out;
  out["principal_value"] = r(eval.principal_value);
  out["agent_value"] = r(eval.agent_value);
  out["benchmark"] = r(eval.benchmark_value);
  out["alpha"] = r(eval.alpha);
  out["agent_states"] = eval.agent.state_count;
  out["first_probe"] = eval.agent.first_probe ? Json(instance.id(*eval.agent.first_probe))
                                              : Json(nullptr);
  out["probed_distribution"] = Json::array();
  for (const auto& [set, p] : eval.agent.probed_distribution) {
    Json entry;
    entry["probed"] = ids_json(instance, set);
    entry["probability"] = r(p);
    out["probed_distribution"].push_back(std::move(entry));
  }
  return out;
}

Json prophet_json(const ProphetReport& report) {
  Json out;
  out["gambler_value"] = r(report.gambler_value);
  out["prophet_value"] = r(report.prophet_value);
  out["ratio"] = r(report.ratio);
  return out;
}

Json family_json(const Instance& instance, const GreedyFamily& family) {
  Json out = Json::array();
  for (const GamblerSet& set : family.maximal()) {
    Json members = Json::array();
    for (const GamblerOutcome& o : set) {
      Json m;
      m["element"] = instance.id(o.element);
      m["x"] = rational_to_json(o.x);
      members.push_back(std::move(m));
    }
    out.push_back(std::move(members));
  }
  return out;
}

TieBreakMode mode_or(const RunConfig& config, TieBreakMode fallback) {
  return config.tie_break.value_or(fallback);
}

Instance load_instance(const RunConfig& config, Report& report) {
  if (config.instance_path.has_value() == config.builtin.has_value()) {
    throw InputError("give exactly one of --instance and --builtin");
  }
  if (config.builtin) {
    report.instance_label = *config.builtin;
    report.uses_epsilon = *config.builtin != "coins2";
    return builtin_instance(*config.builtin, config.epsilon);
  }
  report.instance_label = *config.instance_path;
  return instance_from_json(load_json_file(*config.instance_path));
}

void run_gap(const RunConfig& config, Report& report) {
  Instance instance = load_instance(config, report);
  report.mode = mode_or(config, TieBreakMode::kAdversarial);
  GapReport gap = exact_delegation_gap(instance, report.mode, config.caps);
  report.body["alpha_star"] = r(gap.alpha_star);
  report.body["best_value"] = r(gap.best_value);
  report.body["benchmark"] = r(gap.benchmark);
  report.body["policies_enumerated"] = gap.policies_enumerated;
  report.body["best_policy"] = policy_to_json(instance, gap.best_policy, config.caps);
  report.rows.push_back({"gap", gap.best_value, gap.alpha_star});
}

void run_eval_policy(const RunConfig& config, Report& report) {
  Instance instance = load_instance(config, report);
  report.mode = mode_or(config, TieBreakMode::kAdversarial);
  if (config.policy_path.has_value() == config.menu_path.has_value()) {
    throw InputError("give exactly one of --policy and --menu");
  }
  PolicyEvaluation eval = [&] {
    if (config.policy_path) {
      Policy policy = policy_from_json(instance, load_json_file(*config.policy_path));
      report.body["mechanism"] = "policy";
      return evaluate_policy(instance, policy, report.mode, config.caps);
    }
    LotteryMenu menu = menu_from_json(instance, load_json_file(*config.menu_path));
    report.body["mechanism"] = "lottery-menu";
    return evaluate_lottery_menu(instance, menu, report.mode, config.caps);
  }();
  report.body["evaluation"] = evaluation_json(instance, eval);
  report.rows.push_back({"eval-policy", eval.principal_value, eval.alpha});
}

PolicyBuilder builder_named(const std::string& name, const Caps& caps) {
  if (name == "threshold") return threshold_builder(caps);
  if (name == "from-greedy") return greedy_builder(caps);
  throw InputError("unknown inner builder '" + name + "' (threshold or from-greedy)");
}

void run_build_policy(const RunConfig& config, Report& report) {
  Instance instance = load_instance(config, report);
  report.mode = mode_or(config, TieBreakMode::kAdversarial);
  report.body["kind"] = config.target;

  std::optional<Policy> policy;
  if (config.target == "threshold") {
    policy = threshold_policy(instance, config.caps);
    report.body["threshold"] = r(std::get<Policy::XThreshold>(policy->kind()).tau);
  } else if (config.target == "from-greedy") {
    GreedySearchResult search = best_greedy_family(instance, config.caps);
    report.body["greedy_family"] = family_json(instance, search.family);
    report.body["greedy_ratio"] = r(search.report.ratio);
    policy = policy_from_greedy(std::move(search.family));
  } else if (config.target == "composed") {
    ComposedPolicy composed =
        compose_outer(instance, builder_named(config.inner_builder, config.caps), config.caps);
    report.body["inner_builder"] = config.inner_builder;
    report.body["probe_set"] = ids_json(instance, composed.probe_set);
    report.body["ratio_to_adaptive"] = r(composed.nonadaptive.ratio_to_adaptive);
    policy = std::move(composed.policy);
  } else {
    throw InputError("unknown policy kind '" + config.target +
                     "' (threshold, from-greedy or composed)");
  }
  report.body["policy"] = policy_to_json(instance, *policy, config.caps);
  PolicyEvaluation eval = evaluate_policy(instance, *policy, report.mode, config.caps);
  report.body["evaluation"] = evaluation_json(instance, eval);
  report.rows.push_back({"build-policy " + config.target, eval.principal_value, eval.alpha});
}

void run_prophet_check(const RunConfig& config, Report& report) {
  Instance instance = load_instance(config, report);
  std::optional<Row> headline;
  if (is_one_uniform(instance.inner())) {
    Rational median = samuel_cahn_threshold(instance);
    ProphetReport weak =
        evaluate_vs_almighty(instance, GreedyFamily::threshold(instance, median), config.caps);
    report.body["median_threshold"] = r(median);
    report.body["median_family"] = prophet_json(weak);
    Rational tuned = half_competitive_threshold(instance, config.caps);
    report.body["half_competitive_threshold"] = r(tuned);
    report.body["half_competitive_family"] = prophet_json(
        evaluate_vs_almighty(instance, GreedyFamily::threshold(instance, tuned), config.caps));
    headline = Row{"prophet-check", weak.gambler_value, weak.ratio};
  }
  GreedySearchResult best = best_greedy_family(instance, config.caps);
  Json b = prophet_json(best.report);
  b["families_enumerated"] = best.families_enumerated;
  b["maximal_sets"] = family_json(instance, best.family);
  report.body["best_greedy_family"] = std::move(b);
  if (!headline) headline = Row{"prophet-check", best.report.gambler_value, best.report.ratio};
  report.rows.push_back(*headline);
}

void run_adaptivity(const RunConfig& config, Report& report) {
  Instance instance = load_instance(config, report);
  NonAdaptiveReport na = best_nonadaptive_set(instance, config.caps);
  report.body["best_set"] = ids_json(instance, na.best_set);
  report.body["nonadaptive_value"] = r(na.expected_value);
  report.body["adaptive_value"] = r(na.adaptive_value);
  report.body["ratio_to_adaptive"] = r(na.ratio_to_adaptive);
  report.body["candidates"] = na.candidates;
  report.rows.push_back({"adaptivity", na.expected_value, na.ratio_to_adaptive});
}

void run_lottery_positive(const RunConfig& config, Report& report) {
  const Rational& eps = config.epsilon;
  Instance instance = table1_instance(eps);
  report.instance_label = "table1";
  report.uses_epsilon = true;
  report.mode = mode_or(config, TieBreakMode::kAdversarial);

  GapReport gap = exact_delegation_gap(instance, report.mode, config.caps);
  // A = omega1 surely; B = omega2 w.p. 1 - 2 eps, omega0 otherwise.
  Outcome omega0 = instance.outcome(0, 0);
  Outcome omega1 = instance.outcome(0, 1);
  Outcome omega2 = instance.outcome(1, 0);
  LotteryMenu menu({Lottery{{{{omega1}, 1}}},
                    Lottery{{{{omega2}, 1 - 2 * eps}, {{omega0}, 2 * eps}}}});
  PolicyEvaluation lottery =
      evaluate_lottery_menu(instance, menu, report.mode, gap.benchmark, config.caps);

  Rational expected_benchmark = 2 - eps;
  Rational expected_alpha = 1 / expected_benchmark;
  Rational expected_lottery = 2 - 3 * eps + 2 * eps * eps;
  report.body["non_delegated_value"] = r(gap.benchmark);
  report.body["deterministic"] = {{"best_value", r(gap.best_value)},
                                  {"alpha_star", r(gap.alpha_star)},
                                  {"policies_enumerated", gap.policies_enumerated}};
  report.body["lottery"] = {{"menu", menu_to_json(instance, menu)},
                            {"value", r(lottery.principal_value)},
                            {"alpha", r(lottery.alpha)}};
  report.body["expected"] = {{"non_delegated_value", r(expected_benchmark)},
                             {"deterministic_alpha", r(expected_alpha)},
                             {"lottery_value", r(expected_lottery)}};
  report.body["matches"] = gap.benchmark == expected_benchmark &&
                           gap.alpha_star == expected_alpha &&
                           lottery.principal_value == expected_lottery;
  report.rows.push_back({"reproduce prop-lottery-positive deterministic", gap.best_value,
                         gap.alpha_star});
  report.rows.push_back({"reproduce prop-lottery-positive lottery", lottery.principal_value,
                         lottery.alpha});
}

void run_lottery_negative(const RunConfig& config, Report& report) {
  const Rational& eps = config.epsilon;
  Instance instance = table2_instance(eps);
  report.instance_label = "table2";
  report.uses_epsilon = true;
  report.mode = mode_or(config, TieBreakMode::kPrincipalFavoring);

  GapReport gap = exact_delegation_gap(instance, report.mode, config.caps);
  LotterySearchResult search =
      search_two_lottery_menus(instance, config.grid, report.mode, config.caps);

  Rational expected_alpha = 1 / (2 - eps);
  report.body["non_delegated_value"] = r(gap.benchmark);
  report.body["deterministic"] = {{"best_value", r(gap.best_value)},
                                  {"alpha_star", r(gap.alpha_star)},
                                  {"policies_enumerated", gap.policies_enumerated}};
  report.body["lottery_grid"] = {{"step", r(config.grid)},
                                 {"grid_points", search.grid_points},
                                 {"best_value", r(search.evaluation.principal_value)},
                                 {"alpha", r(search.evaluation.alpha)},
                                 {"a", r(search.a)},
                                 {"b", r(search.b)},
                                 {"menu", menu_to_json(instance, search.menu)}};
  report.body["expected"] = {{"deterministic_alpha", r(expected_alpha)},
                             {"lottery_value", r(Rational(1))}};
  report.body["matches"] =
      gap.alpha_star == expected_alpha && search.evaluation.principal_value == 1;
  report.rows.push_back({"reproduce prop-lottery-negative deterministic", gap.best_value,
                         gap.alpha_star});
  report.rows.push_back({"reproduce prop-lottery-negative lottery",
                         search.evaluation.principal_value, search.evaluation.alpha});
}

void run_cor_half(const RunConfig& config, Report& report) {
  report.instance_label = "random";
  report.mode = mode_or(config, TieBreakMode::kAdversarial);
  std::mt19937_64 rng(config.seed);
  RandomInstanceOptions options;

  std::optional<Rational> min_alpha;
  std::optional<Json> worst;
  std::uint64_t violations = 0;
  const Rational half(1, 2);
  for (std::uint64_t i = 0; i < config.count; ++i) {
    Instance instance = random_instance(rng, options);
    Policy policy = threshold_policy(instance, config.caps);
    PolicyEvaluation eval = evaluate_policy(instance, policy, report.mode, config.caps);
    if (eval.alpha < half) ++violations;
    if (!min_alpha || eval.alpha < *min_alpha) {
      min_alpha = eval.alpha;
      worst = instance_to_json(instance);
    }
  }
  if (!min_alpha) throw InputError("--count must be positive");
  report.body["seed"] = config.seed;
  report.body["count"] = config.count;
  report.body["min_alpha"] = r(*min_alpha);
  report.body["violations"] = violations;
  report.body["worst_instance"] = std::move(*worst);
  report.rows.push_back({"reproduce cor-half", Rational(static_cast<long>(violations)),
                         *min_alpha});
}

void run_reproduce(const RunConfig& config, Report& report) {
  if (config.target == "prop-lottery-positive") return run_lottery_positive(config, report);
  if (config.target == "prop-lottery-negative") return run_lottery_negative(config, report);
  if (config.target == "cor-half") return run_cor_half(config, report);
  throw InputError("unknown reproduction '" + config.target +
                   "' (prop-lottery-positive, prop-lottery-negative or cor-half)");
}

std::string command_name(Command command) {
  switch (command) {
    case Command::kGap:
      return "gap";
    case Command::kEvalPolicy:
      return "eval-policy";
    case Command::kBuildPolicy:
      return "build-policy";
    case Command::kProphetCheck:
      return "prophet-check";
    case Command::kAdaptivity:
      return "adaptivity";
    case Command::kReproduce:
      return "reproduce";
  }
  return "gap";
}

void write_json(const RunConfig& config, const Report& report, std::ostream& out) {
  Json doc;
  doc["command"] = command_name(config.command);
  if (!config.target.empty()) doc["target"] = config.target;
  doc["instance"] = report.instance_label;
  doc["epsilon"] = report.uses_epsilon ? r(config.epsilon) : Json(nullptr);
  doc["tie_break"] = to_string(report.mode);
  doc["result"] = report.body;
  out << doc.dump(2) << "\n";
}

void write_csv(const Report& report, const RunConfig& config, double runtime_ms,
               std::ostream& out) {
  out << "command,instance,epsilon,tie_break,value_num,value_den,alpha_num,alpha_den,"
         "runtime_ms\n";
  char runtime[32];
  std::snprintf(runtime, sizeof(runtime), "%.3f", runtime_ms);
  for (const Row& row : report.rows) {
    out << row.command << ',' << report.instance_label << ','
        << (report.uses_epsilon ? to_fraction_string(config.epsilon) : "") << ','
        << to_string(report.mode) << ',' << row.value.get_num().get_str() << ','
        << row.value.get_den().get_str() << ',' << row.alpha.get_num().get_str() << ','
        << row.alpha.get_den().get_str() << ',' << runtime << "\n";
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    switch (config.command) {
      case Command::kGap:
        run_gap(config, report);
        break;
      case Command::kEvalPolicy:
        run_eval_policy(config, report);
        break;
      case Command::kBuildPolicy:
        run_build_policy(config, report);
        break;
      case Command::kProphetCheck:
        run_prophet_check(config, report);
        break;
      case Command::kAdaptivity:
        run_adaptivity(config, report);
        break;
      case Command::kReproduce:
        run_reproduce(config, report);
        break;
    }
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  if (config.output == OutputFormat::kJson) {
    write_json(config, report, out);
  } else {
    write_csv(report, config, elapsed.count(), out);
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact experiments on delegated stochastic probing", "delegation-lab"};
  app.require_subcommand(1);

  std::string instance_path, builtin, epsilon = "1/4", tie_break, output = "json", grid = "1/100",
                                      caps, policy_path, menu_path, inner = "threshold", target;
  std::uint64_t seed = 1;
  std::uint64_t count = 200;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--instance", instance_path, "Instance JSON file");
    sub->add_option("--builtin", builtin, "Built-in instance: table1, table2 or coins2");
    sub->add_option("--epsilon", epsilon, "Epsilon for table1/table2, e.g. 1/4");
    sub->add_option("--tie-break", tie_break,
                    "adversarial, principal-favoring or lexicographic");
    sub->add_option("--output", output, "json or csv");
    sub->add_option("--caps", caps, "Cap overrides, e.g. scenarios=1000,dp_states=5000");
    sub->add_option("--grid", grid, "Grid step for lottery search, e.g. 1/100");
  };

  struct Entry {
    Command command;
    CLI::App* app;
  };
  std::vector<Entry> entries;
  auto add = [&](Command command, const std::string& name, const std::string& description) {
    CLI::App* sub = app.add_subcommand(name, description);
    add_common(sub);
    entries.push_back({command, sub});
    return sub;
  };
  add(Command::kGap, "gap", "Best deterministic policy by exhaustive enumeration");
  CLI::App* eval = add(Command::kEvalPolicy, "eval-policy", "Evaluate a policy or lottery menu");
  eval->add_option("--policy", policy_path, "Policy JSON file");
  eval->add_option("--menu", menu_path, "Lottery menu JSON file");
  CLI::App* build = add(Command::kBuildPolicy, "build-policy", "Build and evaluate a policy");
  build->add_option("kind", target, "threshold, from-greedy or composed")->required();
  build->add_option("--inner", inner, "Inner builder for composed: threshold or from-greedy");
  add(Command::kProphetCheck, "prophet-check", "Greedy gamblers against the almighty adversary");
  add(Command::kAdaptivity, "adaptivity", "Best non-adaptive probe set versus adaptive probing");
  CLI::App* reproduce = add(Command::kReproduce, "reproduce", "Built-in reproductions");
  reproduce->add_option("target", target,
                        "prop-lottery-positive, prop-lottery-negative or cor-half")
      ->required();
  reproduce->add_option("--seed", seed, "Seed for cor-half");
  reproduce->add_option("--count", count, "Instances for cor-half");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  RunConfig config;
  try {
    for (const Entry& entry : entries) {
      if (entry.app->parsed()) config.command = entry.command;
    }
    config.target = target;
    if (!instance_path.empty()) config.instance_path = instance_path;
    if (!builtin.empty()) config.builtin = builtin;
    config.epsilon = parse_rational(epsilon);
    if (config.epsilon <= 0 || config.epsilon >= 1) {
      throw InputError("--epsilon must lie strictly between 0 and 1");
    }
    if (!tie_break.empty()) config.tie_break = parse_tie_break(tie_break);
    if (output == "json") {
      config.output = OutputFormat::kJson;
    } else if (output == "csv") {
      config.output = OutputFormat::kCsv;
    } else {
      throw InputError("--output must be json or csv");
    }
    config.caps = Caps::from_environment();
    if (!caps.empty()) config.caps = Caps::parse(caps, config.caps);
    config.grid = parse_rational(grid);
    if (!policy_path.empty()) config.policy_path = policy_path;
    if (!menu_path.empty()) config.menu_path = menu_path;
    config.inner_builder = inner;
    config.seed = seed;
    config.count = count;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  return run(config, out, err);
}

}  // namespace delegation_lab
