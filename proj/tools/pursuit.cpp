#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "bench/experiment.hpp"
#include "json.hpp"
#include "pursuit/error.hpp"
#include "pursuit/families.hpp"
#include "pursuit/graph_io.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/strategy/arm.hpp"
#include "pursuit/strategy/big.hpp"
#include "pursuit/strategy/hypercube.hpp"
#include "pursuit/strategy/survivors.hpp"
#include "pursuit/strategy/zkm.hpp"
#include "pursuit/validate.hpp"
#include "pursuit/zkm_graph.hpp"

using namespace pursuit;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kRefuted = 1, kBudget = 2, kInput = 3 };

// Input problems found after parsing.
struct InputError : Error {
  using Error::Error;
};

int to_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw InputError(std::string("expected an integer for ") + what + ", got '" + text + "'");
}

std::vector<int> to_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(item, what));
  if (out.empty()) throw InputError(std::string("empty list for ") + what);
  return out;
}

void need(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw InputError("usage: " + usage);
}

std::optional<Design> design_option(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return bench::load_design(path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << text << '\n';
}

// A scripted strategy and the game it plays in.
struct Scripted {
  std::unique_ptr<Graph> graph;
  Variant variant = Variant::Zombies;
  std::unique_ptr<PursuerPolicy> pursuer;
  std::unique_ptr<EvaderPolicy> evader;
  ValidationOptions options;
  Objective objective = Objective::CaptureAll;
  std::optional<GameState> start;
};

const char* kStrategies =
    "hypercube N | big DESIGN | arm-survivor N DEPTHS | arm-zombie N DEPTHS | "
    "zkm-cops K M | zkm-zombies K M | zkm-survivor K M";

Scripted make_strategy(const std::string& name, const std::vector<std::string>& args, const std::string& design_path,
                       std::optional<int> path_length) {
  Scripted s;
  if (name == "hypercube") {
    need(args, 1, "hypercube N");
    const int n = to_int(args[0], "N");
    s.graph = std::make_unique<Graph>(build_hypercube(n));
    s.pursuer = std::make_unique<HypercubeZombiePolicy>(n);
  } else if (name == "big") {
    need(args, 1, "big DESIGN (sts:V, pairs:V or a design file)");
    const Design d = bench::load_design(args[0]);
    s.graph = std::make_unique<Graph>(block_intersection_graph(d));
    s.pursuer = std::make_unique<BigZombiePolicy>(*s.graph, d);
  } else if (name == "arm-survivor" || name == "arm-zombie") {
    need(args, 2, name + " N DEPTHS (comma separated)");
    const bool survivor = name == "arm-survivor";
    LemmaInstance inst = build_lemma_instance(to_int(args[0], "N"), to_ints(args[1], "DEPTHS"),
                                              survivor ? LemmaSide::Survivor : LemmaSide::Zombies, path_length);
    s.graph = std::make_unique<Graph>(inst.graph);
    if (survivor) {
      s.evader = std::make_unique<ArmSurvivorPolicy>(*s.graph, inst.arm_copy);
      s.options.initial_states = {inst.state};
      s.objective = Objective::SafetyForever;
    } else {
      s.pursuer = std::make_unique<ArmZombiePolicy>(*s.graph, inst.arm_copy, inst.state.pursuers);
      s.options.initial_states = lemma_zombie_starts(inst);
    }
    s.start = inst.state;
  } else if (name == "zkm-cops" || name == "zkm-zombies" || name == "zkm-survivor") {
    need(args, 2, name + " K M");
    const int k = to_int(args[0], "K"), m = to_int(args[1], "M");
    const auto design = design_option(design_path);
    s.graph = std::make_unique<Graph>(build_Z(k, m, design));
    if (name == "zkm-cops") {
      s.variant = Variant::Cops;
      s.pursuer = std::make_unique<ZkmCopPolicy>(*s.graph, k, m, design);
    } else if (name == "zkm-zombies") {
      s.pursuer = std::make_unique<ZkmZombiePolicy>(*s.graph, k, m, design);
    } else {
      if (m < 2) throw InputError("zkm-survivor needs M >= 2 (it plays against M-1 zombies)");
      s.evader = std::make_unique<ZkmSurvivorPolicy>(*s.graph, k, m, design);
      s.options.pursuer_count = m - 1;
      s.objective = Objective::SafetyForever;
    }
  } else {
    throw InputError("unknown strategy '" + name + "'; expected " + kStrategies);
  }
  return s;
}

int exit_for(const Verdict& v) {
  switch (v.result) {
    case VerdictResult::Holds: return kOk;
    case VerdictResult::Refuted: return kRefuted;
    case VerdictResult::BudgetExceeded: return kBudget;
  }
  return kRefuted;
}

Verdict verify(const Scripted& s, Objective objective) {
  if (s.pursuer) return validate_pursuer_policy(*s.graph, s.variant, *s.pursuer, objective, s.options);
  return validate_evader_policy(*s.graph, s.variant, *s.evader, objective, s.options);
}

std::unique_ptr<EvaderPolicy> make_survivor(const std::string& kind, const Graph& g, std::uint32_t seed) {
  if (kind == "random") return std::make_unique<RandomSurvivor>(g, seed);
  if (kind == "greedy") return std::make_unique<GreedySurvivor>(g, seed);
  if (kind == "stationary") return std::make_unique<StationarySurvivor>(static_cast<Vertex>(seed % g.order()));
  throw InputError("unknown survivor '" + kind + "' (random, greedy or stationary)");
}

struct Options {
  std::string graph, variant = "zombies", objective, design, out, csv, trace, survivor = "random", winset;
  std::string family, name;
  std::vector<std::string> args;
  std::optional<int> m, path_length;
  bool number = false;
  std::uint64_t budget = 0;
  int max_n = 5, exact_max_n = 5, validate_max_n = 4, games = 100, max_turns = 1000;
  std::uint32_t seed = 1;
};

int cmd_build_graph(const Options& o) {
  std::string spec = o.family;
  if (!o.args.empty()) {
    spec += ':';
    for (std::size_t i = 0; i < o.args.size(); ++i) spec += (i ? "," : "") + o.args[i];
  }
  const auto g = bench::load_graph(spec, design_option(o.design));
  emit(graph_to_json(g.graph), o.out);
  return kOk;
}

int cmd_solve(const Options& o) {
  if (o.m.has_value() == o.number) throw InputError("solve needs exactly one of --m or --number");
  if (o.m && *o.m < 1) throw InputError("--m must be >= 1");
  const auto g = bench::load_graph(o.graph, design_option(o.design));
  bench::ExperimentConfig cfg;
  cfg.budget = o.budget;
  const Variant variant = parse_variant(o.variant);
  const bench::ResultRow row = bench::run_solve(g, variant, o.m, o.number, cfg.effective_budget());
  std::cout << bench::csv_header() << '\n' << bench::to_csv(row) << '\n';
  if (!o.csv.empty()) bench::append_csv(o.csv, row);
  if (!o.winset.empty() && o.m && row.verdict != "budget-exceeded") {
    solve_pursuit(g.graph, variant, *o.m, cfg.effective_budget()).export_binary(o.winset);
  }
  return row.verdict == "budget-exceeded" ? kBudget : kOk;
}

int cmd_verify(const Options& o) {
  Scripted s = make_strategy(o.name, o.args, o.design, o.path_length);
  const Objective objective = o.objective.empty() ? s.objective : parse_objective(o.objective);
  if (o.budget) s.options.budget = o.budget;
  const Verdict v = verify(s, objective);
  emit(verdict_to_json(v), o.out);
  return exit_for(v);
}

int cmd_play(const Options& o) {
  const Scripted s = make_strategy(o.name, o.args, o.design, o.path_length);
  if (!s.pursuer) throw InputError("play runs a scripted pursuer strategy against smoke-test survivors");
  int captured = 0, longest = 0;
  for (int game = 0; game < o.games; ++game) {
    const auto survivor = make_survivor(o.survivor, *s.graph, o.seed + static_cast<std::uint32_t>(game));
    const Trace t = s.start ? play_from(*s.graph, s.variant, *s.pursuer, *survivor, *s.start, o.max_turns)
                            : play_match(*s.graph, s.variant, *s.pursuer, *survivor, o.max_turns);
    if (t.captured) {
      ++captured;
      longest = std::max(longest, t.capture_turn);
    }
    if (game == 0 && !o.trace.empty()) {
      std::ofstream out(o.trace);
      out << trace_to_jsonl(t);
    }
  }
  emit(json{{"strategy", o.name},
            {"survivor", o.survivor},
            {"games", o.games},
            {"captured", captured},
            {"escaped", o.games - captured},
            {"longestCapture", longest}}
           .dump(),
       o.out);
  return captured == o.games ? kOk : kRefuted;
}

int cmd_sweep(const Options& o) {
  std::cout << "n,formula,exact,strategy\n";
  bench::ExperimentConfig cfg;
  cfg.budget = o.budget;
  bool budget_hit = false;
  for (int n = 1; n <= o.max_n; ++n) {
    const int formula = hypercube_zombie_count(n);
    const Graph g = build_hypercube(n);
    std::string exact = "-";
    if (n <= o.exact_max_n) {
      try {
        exact = std::to_string(pursuit_number(g, Variant::Zombies, formula, cfg.effective_budget()).value);
      } catch (const BudgetExceeded&) {
        exact = "budget-exceeded";
        budget_hit = true;
      }
    }
    std::string strategy = "-";
    if (n <= o.validate_max_n) {
      ValidationOptions vo;
      if (o.budget) vo.budget = o.budget;
      const Verdict v = validate_pursuer_policy(g, Variant::Zombies, HypercubeZombiePolicy(n), Objective::CaptureAll, vo);
      strategy = std::string(to_string(v.result));
      if (v.result == VerdictResult::BudgetExceeded) budget_hit = true;
      if (v.result == VerdictResult::Refuted) return kRefuted;
    }
    std::cout << n << ',' << formula << ',' << exact << ',' << strategy << '\n';
  }
  return budget_hit ? kBudget : kOk;
}

int cmd_design_check(const Options& o) {
  std::string spec = o.family;
  if (o.family == "sts" || o.family == "pairs") {
    need(o.args, 1, o.family + " V");
    spec += ":" + o.args[0];
  } else if (!o.args.empty()) {
    throw InputError("usage: design-check FILE | sts V | pairs V");
  }
  const Design d = bench::load_design(spec);
  const BibdReport report = validate_bibd(d);
  json j{{"valid", report.valid}, {"v", d.v}, {"k", d.k}, {"lambda", d.lambda}, {"blocks", d.blocks.size()}};
  if (!report.valid) j["violation"] = report.violation;
  if (report.valid && !o.out.empty()) write_graph_file(block_intersection_graph(d), o.out);
  std::cout << j.dump() << '\n';
  return report.valid ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and strategy validators for cops-and-robbers and zombie pursuit games"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build-graph", "Write a family graph as JSON");
  build->add_option("family", o.family, "g5, t, fano, arm, hypercube, path, cycle, complete, zc, zkm, sts, pairs")
      ->required();
  build->add_option("params", o.args, "Family parameters");
  build->add_option("--out", o.out, "Output file (default stdout)");
  build->add_option("--design", o.design, "Design for zc/zkm with k >= 4");

  auto* solve = app.add_subcommand("solve", "Exact backward-induction solve");
  solve->add_option("graph", o.graph, "Graph file or family spec such as hypercube:3")->required();
  solve->add_option("--variant", o.variant, "cops or zombies")->check(CLI::IsMember({"cops", "zombies"}));
  solve->add_option("--m", o.m, "Number of pursuers");
  solve->add_flag("--number", o.number, "Compute the pursuit number");
  solve->add_option("--budget", o.budget, "State budget (default PURSUIT_BUDGET_STATES or 2e8)");
  solve->add_option("--csv", o.csv, "Append the result row to this CSV file");
  solve->add_option("--export-winset", o.winset, "Write the win flags (with --m)");
  solve->add_option("--design", o.design, "Design for zc/zkm with k >= 4");

  auto* verify_cmd = app.add_subcommand("verify-strategy", "Exhaustively validate a scripted strategy");
  verify_cmd->add_option("name", o.name, kStrategies)->required();
  verify_cmd->add_option("params", o.args, "Strategy parameters");
  verify_cmd->add_option("--objective", o.objective, "capture-all or safety")
      ->check(CLI::IsMember({"capture-all", "safety"}));
  verify_cmd->add_option("--budget", o.budget, "Product-state budget");
  verify_cmd->add_option("--path-length", o.path_length, "Uniform path length for arm instances");
  verify_cmd->add_option("--design", o.design, "Design for zkm with k >= 4");
  verify_cmd->add_option("--out", o.out, "Write the verdict JSON here");

  auto* play = app.add_subcommand("play", "Play a scripted pursuer against smoke-test survivors");
  play->add_option("name", o.name, kStrategies)->required();
  play->add_option("params", o.args, "Strategy parameters");
  play->add_option("--survivor", o.survivor, "random, greedy or stationary");
  play->add_option("--seed", o.seed, "Seed of the first game");
  play->add_option("--games", o.games, "Number of games")->check(CLI::PositiveNumber);
  play->add_option("--max-turns", o.max_turns, "Turn bound per game")->check(CLI::NonNegativeNumber);
  play->add_option("--trace", o.trace, "Write the first game as JSONL");
  play->add_option("--path-length", o.path_length, "Uniform path length for arm instances");
  play->add_option("--design", o.design, "Design for zkm with k >= 4");
  play->add_option("--out", o.out, "Write the summary JSON here");

  auto* sweep = app.add_subcommand("hypercube-sweep", "Zombie numbers of hypercubes, exact and scripted");
  sweep->add_option("--max-n", o.max_n, "Largest dimension")->check(CLI::Range(1, 15));
  sweep->add_option("--exact-max-n", o.exact_max_n, "Largest dimension to solve exactly");
  sweep->add_option("--validate-max-n", o.validate_max_n, "Largest dimension to validate exhaustively");
  sweep->add_option("--budget", o.budget, "State budget for solves and validations");

  auto* design = app.add_subcommand("design-check", "Validate a block design");
  design->add_option("source", o.family, "Design file, sts or pairs")->required();
  design->add_option("params", o.args, "V for sts/pairs");
  design->add_option("--export-big", o.out, "Write the block intersection graph as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (build->parsed()) return cmd_build_graph(o);
    if (solve->parsed()) return cmd_solve(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (play->parsed()) return cmd_play(o);
    if (sweep->parsed()) return cmd_sweep(o);
    if (design->parsed()) return cmd_design_check(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const OffScript& e) {
    std::cerr << "refuted: " << e.what() << '\n';
    return kRefuted;
  } catch (const LosingPosition& e) {
    std::cerr << "refuted: " << e.what() << '\n';
    return kRefuted;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
