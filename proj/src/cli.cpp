#include "sabotage/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sabotage/bisim.hpp"
#include "sabotage/charform.hpp"
#include "sabotage/io.hpp"
#include "sabotage/sample.hpp"
#include "sabotage/semantics.hpp"
#include "sabotage/translate.hpp"

namespace sabotage {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kKindNames = {"modal", "s", "d", "g", "r"};
const std::vector<std::string> kDeletionKindNames = {"s", "d", "g", "r"};

struct Args {
  std::string kind = "s";
  std::string model_a;
  std::string model_b;
  bool oracle = false;
  bool stats = false;
  bool cache = false;
  std::size_t max_calls = 0;
  std::string formula;
  bool all_worlds = false;
  std::size_t char_max_edges = 3;
  std::size_t char_max_worlds = 3;
  std::string dir = "f";
  std::string edges_to_sink = "literal";
  std::uint64_t seed = 0;
  std::size_t worlds = 3;
  std::size_t edges = 4;
  std::vector<std::string> props = {"p"};
  std::vector<std::string> kinds = {"s", "d", "g", "r"};
  std::size_t count = 100;
  std::string out_path;
};

int answer_status(bool yes) { return yes ? kYes : kNo; }

json stats_of(BisimKind kind, const PointedModel& a, const PointedModel& b) {
  json j;
  auto claimed = claimed_depth_bound(kind, a, b);
  j["claimed_depth_bound"] = claimed ? json(*claimed) : json(nullptr);
  j["depth_bound"] = recursion_depth_bound(kind, a, b);
  j["worlds"] = {a.model.world_count(), b.model.world_count()};
  j["edges"] = {a.model.edge_count(), b.model.edge_count()};
  return j;
}

int cmd_check(const Args& args, std::ostream& out) {
  BisimKind kind = parse_kind(args.kind);
  PointedModel a = load_model_file(args.model_a);
  PointedModel b = load_model_file(args.model_b);
  Verdict v = check(kind, a, b, {args.cache, args.max_calls});
  json j = to_json(v);
  if (args.stats) j["stats"] = stats_of(kind, a, b);
  if (args.oracle) {
    Verdict o = oracle_bisimilar(kind, a, b);
    json both;
    both["kind"] = args.kind;
    both["checker"] = j;
    both["oracle"] = to_json(o);
    both["match"] = o.answer == v.answer;
    out << both.dump() << "\n";
  } else {
    out << j.dump() << "\n";
  }
  return answer_status(v.answer);
}

int cmd_eval(const Args& args, std::ostream& out) {
  PointedModel m = load_model_file(args.model_a);
  Formula f = parse(args.formula);
  if (!args.all_worlds) {
    bool value = eval(m, f);
    out << (value ? "true" : "false") << "\n";
    return answer_status(value);
  }
  bool everywhere = true;
  for (WorldIndex w = 0; w < m.model.world_count(); ++w) {
    bool value = eval(m.model, w, f);
    everywhere = everywhere && value;
    json j;
    j["world"] = m.model.world_name(w);
    j["value"] = value;
    out << j.dump() << "\n";
  }
  return answer_status(everywhere);
}

CharOptions char_options(const Args& args) {
  CharOptions options;
  options.max_edges = args.char_max_edges;
  options.max_worlds = args.char_max_worlds;
  return options;
}

int cmd_charform(const Args& args, std::ostream& out) {
  PointedModel m = load_model_file(args.model_a);
  BisimKind kind = parse_kind(args.kind);
  Formula f = args.all_worlds ? build_char(kind, m.model, char_options(args))
                              : build_char(kind, m, char_options(args));
  if (args.stats) {
    json j;
    j["kind"] = args.kind;
    j["dag_size"] = dag_size(f);
    j["modal_depth"] = modal_depth(f);
    out << j.dump() << "\n";
  }
  out << print(f) << "\n";
  return kYes;
}

int cmd_charcheck(const Args& args, std::ostream& out, std::ostream& err) {
  BisimKind kind = parse_kind(args.kind);
  PointedModel a = load_model_file(args.model_a);
  PointedModel b = load_model_file(args.model_b);
  bool value = char_check(kind, a, b, char_options(args));
  bool bisimilar = check(kind, a, b, {args.cache, args.max_calls}).answer;
  json j;
  j["kind"] = args.kind;
  j["charcheck"] = value;
  j["check"] = bisimilar ? "yes" : "no";
  j["agree"] = value == bisimilar;
  out << j.dump() << "\n";
  if (value != bisimilar) {
    err << "charcheck: characteristic formula gives " << (value ? "true" : "false")
        << " but the " << args.kind << " checker answers " << (bisimilar ? "yes" : "no") << "\n";
    return kUsage;
  }
  return answer_status(value);
}

int cmd_translate(const Args& args, std::ostream& out) {
  PointedModel m = load_model_file(args.model_a);
  EdgesToSink mode = parse_edges_to_sink(args.edges_to_sink);
  PointedModel t = args.dir == "f" ? translate_F(m) : translate_G(m, mode);
  out << save_model(t) << "\n";
  return kYes;
}

int cmd_random(const Args& args, std::ostream& out) {
  out << save_model(random_model(args.seed, args.worlds, args.edges, args.props)) << "\n";
  return kYes;
}

std::size_t size_of(const PointedModel& m) {
  return m.model.world_count() + m.model.edge_count();
}

int cmd_sweep(const Args& args, std::ostream& out) {
  SampleShape shape{args.worlds, args.edges, args.props};
  std::size_t total_pairs = 0, total_mismatches = 0;
  for (const auto& name : args.kinds) {
    BisimKind kind = parse_kind(name);
    std::size_t yes = 0, mismatches = 0, gate_violations = 0, claimed_violations = 0;
    std::size_t bound_violations = 0, over_budget = 0, deepest = 0, calls = 0;
    std::optional<json> counterexample;
    std::size_t counterexample_size = 0;
    for (std::size_t k = 0; k < args.count; ++k) {
      auto [a, b] = sample_pair(args.seed, k, shape);
      Verdict v;
      try {
        v = check(kind, a, b, {args.cache, args.max_calls});
      } catch (const SizeGuardExceeded&) {
        ++over_budget;
        continue;
      }
      Verdict o = oracle_bisimilar(kind, a, b);
      yes += v.answer;
      deepest = std::max(deepest, v.max_depth);
      calls += v.calls;
      if (v.answer && deletes_edges(kind) && a.model.edge_count() != b.model.edge_count()) {
        ++gate_violations;
      }
      if (v.answer && deletes_worlds(kind) && a.model.world_count() != b.model.world_count()) {
        ++gate_violations;
      }
      auto claimed = claimed_depth_bound(kind, a, b);
      if (claimed && v.max_depth > *claimed) ++claimed_violations;
      if (v.max_depth > recursion_depth_bound(kind, a, b)) ++bound_violations;
      if (v.answer != o.answer) {
        ++mismatches;
        std::size_t size = size_of(a) + size_of(b);
        if (!counterexample || size < counterexample_size) {
          counterexample_size = size;
          counterexample = json{{"pair", k},
                                {"m1", to_json(a)},
                                {"m2", to_json(b)},
                                {"checker", to_json(v)},
                                {"oracle", to_json(o)}};
        }
      }
    }
    json j;
    j["kind"] = name;
    j["pairs"] = args.count;
    j["yes"] = yes;
    j["no"] = args.count - yes - over_budget;
    j["mismatches"] = mismatches;
    j["over_budget"] = over_budget;
    j["count_gate_violations"] = gate_violations;
    j["claimed_depth_violations"] = claimed_violations;
    j["depth_bound_violations"] = bound_violations;
    j["max_depth"] = deepest;
    j["calls"] = calls;
    j["counterexample"] = counterexample ? *counterexample : json(nullptr);
    out << j.dump() << "\n";
    total_pairs += args.count;
    total_mismatches += mismatches;
  }
  json summary;
  summary["summary"] = {{"seed", args.seed},
                        {"pairs", total_pairs},
                        {"mismatches", total_mismatches}};
  out << summary.dump() << "\n";
  return total_mismatches == 0 ? kYes : kNo;
}

int cmd_correspond(const Args& args, std::ostream& out) {
  std::string report = render_report(correspondence_report(args.seed, args.count), args.seed,
                                     args.count);
  if (args.out_path.empty()) {
    out << report;
    return kYes;
  }
  std::ofstream file(args.out_path);
  if (!file) throw PreconditionError("cannot write " + args.out_path);
  file << report;
  return kYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sabotage and point-deletion bisimulation checker"};
  app.name("sabotage-cli");
  app.require_subcommand(1);
  Args args;

  auto kind_option = [&](CLI::App* sub, const std::vector<std::string>& allowed) {
    sub->add_option("--kind", args.kind, "bisimulation notion")
        ->required()
        ->check(CLI::IsMember(allowed));
  };
  auto budget_options = [&](CLI::App* sub) {
    sub->add_flag("--cache", args.cache, "reuse answers on repeated configuration pairs");
    sub->add_option("--max-calls", args.max_calls, "abort after this many calls (0: no limit)");
  };
  auto char_guards = [&](CLI::App* sub) {
    sub->add_option("--max-edges", args.char_max_edges, "edge guard for s and g");
    sub->add_option("--max-worlds", args.char_max_worlds, "world guard for d and r");
  };

  auto* check_cmd = app.add_subcommand("check", "decide bisimilarity of two pointed models");
  kind_option(check_cmd, kKindNames);
  check_cmd->add_option("A", args.model_a, "first model (JSON)")->required();
  check_cmd->add_option("B", args.model_b, "second model (JSON)")->required();
  check_cmd->add_flag("--oracle", args.oracle, "also run the fixpoint oracle");
  check_cmd->add_flag("--stats", args.stats, "add depth bounds and model sizes");
  budget_options(check_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula at the designated world");
  eval_cmd->add_option("M", args.model_a, "model (JSON)")->required();
  eval_cmd->add_option("formula", args.formula, "formula text")->required();
  eval_cmd->add_flag("--all-worlds", args.all_worlds, "evaluate at every world");

  auto* charform_cmd = app.add_subcommand("charform", "print the characteristic formula");
  kind_option(charform_cmd, kDeletionKindNames);
  charform_cmd->add_option("M", args.model_a, "model (JSON)")->required();
  charform_cmd->add_flag("--stats", args.stats, "print size information first");
  charform_cmd->add_flag("--all-worlds", args.all_worlds,
                         "let world-deletion sequences include the designated world");
  char_guards(charform_cmd);

  auto* charcheck_cmd =
      app.add_subcommand("charcheck", "compare the characteristic formula with the checker");
  kind_option(charcheck_cmd, kDeletionKindNames);
  charcheck_cmd->add_option("A", args.model_a, "source model (JSON)")->required();
  charcheck_cmd->add_option("B", args.model_b, "target model (JSON)")->required();
  char_guards(charcheck_cmd);
  budget_options(charcheck_cmd);

  auto* translate_cmd = app.add_subcommand("translate", "apply translation F or G");
  translate_cmd->add_option("--dir", args.dir, "f: edges to worlds, g: add a sink world")
      ->required()
      ->check(CLI::IsMember({"f", "g"}));
  translate_cmd->add_option("--edges-to-sink", args.edges_to_sink, "relation of G")
      ->check(CLI::IsMember({"literal", "intent"}));
  translate_cmd->add_option("M", args.model_a, "model (JSON)")->required();

  auto* random_cmd = app.add_subcommand("random", "print a seeded random model");
  random_cmd->add_option("--seed", args.seed, "random seed")->required();
  random_cmd->add_option("--worlds", args.worlds, "maximum number of worlds")
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("--edges", args.edges, "maximum number of edges");
  random_cmd->add_option("--props", args.props, "proposition names")->delimiter(',');

  auto* sweep_cmd = app.add_subcommand("sweep", "compare checkers with the oracle on a sample");
  sweep_cmd->add_option("--kinds", args.kinds, "kinds to sweep")
      ->delimiter(',')
      ->check(CLI::IsMember(kKindNames));
  sweep_cmd->add_option("--seed", args.seed, "sample seed")->required();
  sweep_cmd->add_option("--count", args.count, "number of pairs");
  sweep_cmd->add_option("--worlds", args.worlds, "maximum worlds per model")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--edges", args.edges, "maximum edges per model");
  sweep_cmd->add_option("--props", args.props, "proposition names")->delimiter(',');
  budget_options(sweep_cmd);

  auto* correspond_cmd =
      app.add_subcommand("correspond", "write the F/G translation correspondence report");
  correspond_cmd->add_option("--seed", args.seed, "sample seed")->required();
  correspond_cmd->add_option("--count", args.count, "number of pairs");
  correspond_cmd->add_option("--out", args.out_path, "output file (default: stdout)");

  std::vector<const char*> raw = {"sabotage-cli"};
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  try {
    if (*check_cmd) return cmd_check(args, out);
    if (*eval_cmd) return cmd_eval(args, out);
    if (*charform_cmd) return cmd_charform(args, out);
    if (*charcheck_cmd) return cmd_charcheck(args, out, err);
    if (*translate_cmd) return cmd_translate(args, out);
    if (*random_cmd) return cmd_random(args, out);
    if (*sweep_cmd) return cmd_sweep(args, out);
    if (*correspond_cmd) return cmd_correspond(args, out);
  } catch (const SizeGuardExceeded& e) {
    err << "size guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const ModelError& e) {
    err << "invalid model: " << e.what() << "\n";
    for (const auto& v : e.violations()) err << "  " << to_string(v) << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "formula syntax error at " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sabotage
