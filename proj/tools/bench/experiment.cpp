#include "experiment.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pursuit/error.hpp"
#include "pursuit/families.hpp"
#include "pursuit/graph_io.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/zkm_graph.hpp"

namespace pursuit::bench {

std::uint64_t ExperimentConfig::effective_budget() const { return budget ? budget : default_state_budget(); }

namespace {

std::vector<int> parse_ints(const std::string& text, const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw GraphError("bad integer '" + item + "' in graph spec '" + spec + "'");
    }
  }
  return out;
}

std::vector<int> family_args(const std::string& spec, std::string& family) {
  const auto colon = spec.find(':');
  family = spec.substr(0, colon);
  if (colon == std::string::npos) return {};
  return parse_ints(spec.substr(colon + 1), spec);
}

void expect_args(const std::string& spec, const std::vector<int>& args, std::size_t n, const char* usage) {
  if (args.size() != n) throw GraphError("graph spec '" + spec + "' expects " + usage);
}

}  // namespace

Design load_design(const std::string& spec) {
  std::string family;
  if (spec.rfind("sts:", 0) == 0 || spec.rfind("pairs:", 0) == 0) {
    const auto args = family_args(spec, family);
    if (args.size() != 1) throw DesignError("design spec '" + spec + "' expects one integer");
    return family == "sts" ? construct_sts(args[0]) : construct_pair_design(args[0]);
  }
  return read_design_file(spec);
}

NamedGraph load_graph(const std::string& spec, const std::optional<Design>& design) {
  std::string family;
  const bool is_file = std::filesystem::exists(spec) || spec.ends_with(".json");
  if (is_file) return {std::filesystem::path(spec).stem().string(), read_graph_file(spec)};
  const std::vector<int> a = family_args(spec, family);
  if (family == "g5") return {"g5", build_G5()};
  if (family == "t") return {"t", build_T(0)};
  if (family == "fano") return {"fano", block_intersection_graph(construct_sts(7))};
  if (family == "arm") {
    expect_args(spec, a, 1, "arm:N");
    return {spec, build_arm(a[0])};
  }
  if (family == "hypercube" || family == "q") {
    expect_args(spec, a, 1, "hypercube:N");
    return {"hypercube:" + std::to_string(a[0]), build_hypercube(a[0])};
  }
  if (family == "path") {
    expect_args(spec, a, 1, "path:N");
    return {spec, build_path(a[0])};
  }
  if (family == "cycle") {
    expect_args(spec, a, 1, "cycle:N");
    return {spec, build_cycle(a[0])};
  }
  if (family == "complete") {
    expect_args(spec, a, 1, "complete:N");
    return {spec, build_complete(a[0])};
  }
  if (family == "zc") {
    expect_args(spec, a, 1, "zc:K");
    return {spec, build_ZC(a[0], design)};
  }
  if (family == "zkm") {
    expect_args(spec, a, 2, "zkm:K,M");
    return {spec, build_Z(a[0], a[1], design)};
  }
  if (family == "sts" || family == "pairs") return {spec, block_intersection_graph(load_design(spec))};
  throw GraphError("unknown graph family '" + family +
                   "' (expected g5, t, fano, arm, hypercube, path, cycle, complete, zc, zkm, sts, pairs or a file)");
}

std::string csv_header() { return "graph,|V|,|E|,variant,m,verdict,value,states,ms"; }

std::string to_csv(const ResultRow& row) {
  std::ostringstream out;
  out << row.graph << ',' << row.vertices << ',' << row.edges << ',' << to_string(row.variant) << ',' << row.m << ','
      << row.verdict << ',' << (row.value ? std::to_string(*row.value) : "") << ',' << row.states << ',';
  out.setf(std::ios::fixed);
  out.precision(1);
  out << row.ms;
  return out.str();
}

void append_csv(const std::string& path, const ResultRow& row) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open " + path + " for appending");
  if (fresh) out << csv_header() << '\n';
  out << to_csv(row) << '\n';
}

ResultRow run_solve(const NamedGraph& g, Variant variant, std::optional<int> m, bool number, std::uint64_t budget) {
  ResultRow row;
  row.graph = g.id;
  row.vertices = g.graph.order();
  row.edges = g.graph.size();
  row.variant = variant;
  row.m = m.value_or(0);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (number) {
      const PursuitNumber pn = pursuit_number(g.graph, variant, std::nullopt, budget);
      row.states = pn.states;
      row.m = pn.value;
      row.verdict = "pursuit-number";
      row.value = pn.value;
    } else {
      const WinSet ws = solve_pursuit(g.graph, variant, *m, budget);
      row.states = ws.state_count();
      row.verdict = ws.winning_placement() ? "pursuer-wins" : "survivor-wins";
    }
  } catch (const BudgetExceeded& e) {
    row.verdict = "budget-exceeded";
    row.states = e.required();
  }
  row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

}  // namespace pursuit::bench
