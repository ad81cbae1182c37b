#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pursuit/design.hpp"
#include "pursuit/game.hpp"

namespace pursuit {

// k zombies on the block intersection graph of a (v, k, 1) design. They start
// on the k blocks containing point 0. On the first turn zombie i moves to the
// unique block holding point 0 and the i-th point of the survivor's block;
// the survivor is then adjacent to some zombie and is caught on turn two.
// A zombie already adjacent to the survivor captures at once.
class BigZombiePolicy : public PursuerPolicy {
 public:
  // g must be block_intersection_graph(d) for the canonical form of d.
  BigZombiePolicy(const Graph& g, Design d);
  std::string name() const override { return "big-zombies"; }
  std::vector<Vertex> place() const override;
  Memory start(const GameState& initial) const override;
  PursuerDecision decide(const Memory& memory, const GameState& s) const override;

  const Design& design() const { return design_; }
  // Block index containing both points; -1 when a == b or none does.
  int block_through(int a, int b) const;

 private:
  const Graph* g_;
  Design design_;
  std::vector<Vertex> vertex_of_;  // block index -> vertex
  std::vector<int> block_of_;      // vertex -> block index
  std::map<std::pair<int, int>, int> pair_block_;
};

}  // namespace pursuit
