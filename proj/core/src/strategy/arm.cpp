#include "pursuit/strategy/arm.hpp"

#include <algorithm>

#include "pursuit/error.hpp"

namespace pursuit {

int mod5_gap_sum(std::vector<int> distances) {
  std::sort(distances.begin(), distances.end());
  int sum = 0;
  for (std::size_t i = 1; i < distances.size(); ++i) sum += mod_residue(distances[i] - distances[i - 1], 5);
  return sum;
}

namespace {

std::vector<int> distances_to_survivor(const Graph& g, const GameState& s) {
  std::vector<int> d;
  for (Vertex p : s.pursuers) d.push_back(g.distance(p, s.survivor));
  return d;
}

}  // namespace

bool survivor_good(int x, const ArmView& arm, const GameState& s) {
  const Graph& g = arm.graph();
  const int n = arm.length();
  if (x < 0 || x > n - 1) return false;
  if (s.to_move != Side::Evader || s.survivor != arm.out(0, x)) return false;
  const Vertex behind_exit = x == 0 ? arm.root() : arm.out(2, x - 1);
  for (Vertex p : s.pursuers) {
    if (g.adjacent(p, s.survivor)) {
      if (p != arm.out(1, x) && p != arm.in(1, x) && p != behind_exit) return false;
    } else if (p == s.survivor || !arm.behind(p, x)) {
      return false;
    }
  }
  return mod5_gap_sum(distances_to_survivor(g, s)) <= n - 1 - x;
}

bool zombie_good(int x, const ArmView& arm, const GameState& s) {
  const Graph& g = arm.graph();
  const int n = arm.length();
  if (x < 0 || x > n) return false;
  const auto block = arm.block_of(s.survivor);
  if (!block || *block < x) return false;
  const Vertex target = arm.out(0, x);
  bool lead = false;
  for (Vertex p : s.pursuers) {
    if (p == target) {
      lead = true;
    } else if (!arm.behind(p, x)) {
      return false;
    }
  }
  if (!lead) return false;
  std::vector<int> d = distances_to_survivor(g, s);
  std::sort(d.begin(), d.end());
  if (g.distance(target, s.survivor) != d.front()) return false;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] - d[i - 1] > 4) return false;
  }
  return d.back() - d.front() >= n - x;
}

LemmaInstance build_lemma_instance(int n, const std::vector<int>& depths, LemmaSide side,
                                   std::optional<int> path_length) {
  if (n < 0) throw GraphError("arm length must be >= 0, got " + std::to_string(n));
  if (depths.empty()) throw GraphError("a lemma instance needs at least one zombie");
  if (path_length && *path_length < 0) throw GraphError("path length must be >= 0");
  GraphBuilder b;
  const Vertex v = b.add_vertex(VertexLabel::anon(0));
  std::vector<Vertex> zombies;
  for (std::size_t i = 0; i < depths.size(); ++i) {
    const int depth = depths[i];
    if (depth < 0) throw GraphError("zombie depth must be >= 0, got " + std::to_string(depth));
    if (path_length && depth > *path_length) {
      throw GraphError("zombie depth " + std::to_string(depth) + " exceeds the path length " +
                       std::to_string(*path_length));
    }
    const int len = path_length.value_or(depth);
    const int copy = static_cast<int>(i) + 1;
    Vertex prev = v;
    Vertex at_depth = v;
    for (int j = 1; j <= len; ++j) {
      const Vertex w = b.add_vertex(VertexLabel::path(j, copy));
      b.add_edge(prev, w);
      prev = w;
      if (j == depth) at_depth = w;
    }
    zombies.push_back(at_depth);
  }
  const Graph h = std::move(b).build();
  LemmaInstance inst;
  inst.graph = attach(h, build_arm(n), v, 0);
  inst.arm_copy = ArmView::copies(inst.graph).front();
  inst.hub_vertex = v;
  const ArmView arm(inst.graph, inst.arm_copy);
  inst.state = initial_state(inst.graph, zombies, arm.out(0, 0));
  inst.state.to_move = side == LemmaSide::Survivor ? Side::Evader : Side::Pursuer;
  return inst;
}

std::vector<GameState> lemma_zombie_starts(const LemmaInstance& inst) {
  const ArmView arm(inst.graph, inst.arm_copy);
  std::vector<GameState> out;
  for (Vertex s = 0; s < static_cast<Vertex>(inst.graph.order()); ++s) {
    if (!arm.contains(s)) continue;
    out.push_back(GameState{inst.state.pursuers, s, Side::Pursuer});
  }
  return out;
}

std::vector<Vertex> tracked_positions(std::span<const std::int32_t> tail, const GameState& s) {
  std::vector<Vertex> pos(tail.begin(), tail.end());
  std::vector<Vertex> sorted = pos;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != s.pursuers) throw OffScript("policy memory does not match the zombies in " + describe(s));
  return pos;
}

PursuerMove moves_from(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
  PursuerMove move;
  for (std::size_t i = 0; i < from.size(); ++i) move.push_back({from[i], to[i]});
  return move;
}

Vertex closer_step(const Graph& g, Vertex p, Vertex survivor) {
  if (p == survivor) return p;
  const int d = g.distance(p, survivor);
  for (Vertex w : g.neighbors(p)) {
    if (g.distance(w, survivor) == d - 1) return w;
  }
  throw DisconnectedGraph();
}

}  // namespace pursuit
