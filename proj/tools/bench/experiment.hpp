#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/design.hpp"
#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"

namespace pursuit::bench {

struct ExperimentConfig {
  std::string graph_spec;              // family spec ("hypercube:3") or a graph JSON path
  std::optional<std::string> design_path;
  Variant variant = Variant::Zombies;
  std::uint64_t budget = 0;            // 0: default_state_budget()
  std::vector<std::string> policies;
  std::optional<std::string> csv_path;
  std::optional<std::string> trace_path;
  std::uint32_t seed = 1;

  std::uint64_t effective_budget() const;
};

struct NamedGraph {
  std::string id;
  Graph graph;
};

// Family specs: g5, t, fano, arm:N, hypercube:N, path:N, cycle:N,
// complete:N, zc:K, zkm:K,M, sts:V, pairs:V. Anything else is read as a
// graph JSON file. Throws GraphError / DesignError on bad parameters.
NamedGraph load_graph(const std::string& spec, const std::optional<Design>& design = std::nullopt);

// "sts:V", "pairs:V" or a design JSON path.
Design load_design(const std::string& spec);

struct ResultRow {
  std::string graph;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  Variant variant = Variant::Zombies;
  int m = 0;
  std::string verdict;
  std::optional<int> value;  // set only by completed pursuit-number runs
  std::uint64_t states = 0;
  double ms = 0;
};

std::string csv_header();
std::string to_csv(const ResultRow& row);
// Appends, writing the header first when the file is new or empty.
void append_csv(const std::string& path, const ResultRow& row);

// Exactly one of m / number. Budget overruns give verdict "budget-exceeded".
ResultRow run_solve(const NamedGraph& g, Variant variant, std::optional<int> m, bool number, std::uint64_t budget);

}  // namespace pursuit::bench
