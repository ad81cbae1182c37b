#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "pursuit/design.hpp"
#include "pursuit/families.hpp"
#include "pursuit/game.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/zkm_graph.hpp"

namespace pursuit {

// Shared view of a build_Z graph: layout, base graph and one ArmView per arm.
class ZkmView {
 public:
  ZkmView(const Graph& g, int k, int m, const std::optional<Design>& design = std::nullopt);

  const Graph& graph() const { return *g_; }
  const Graph& base_graph() const { return zc_; }
  const ZkmLayout& layout() const { return layout_; }
  const Design& design() const { return design_; }
  int k() const { return k_; }
  int m() const { return m_; }
  const ArmView& arm(int hang) const { return *arms_[static_cast<std::size_t>(hang)]; }

 private:
  const Graph* g_;
  int k_, m_;
  Design design_;
  Graph zc_;
  ZkmLayout layout_;
  std::vector<std::optional<ArmView>> arms_;
};

// k cops. They play an optimal k-cop strategy on ZC_k against the robber's
// projection; the cop that lands on it walks down the robber's hang and the
// others stay put.
class ZkmCopPolicy : public PursuerPolicy {
 public:
  ZkmCopPolicy(const Graph& g, int k, int m, const std::optional<Design>& design = std::nullopt);
  std::string name() const override { return "zkm-cops"; }
  std::vector<Vertex> place() const override;
  Memory start(const GameState& initial) const override;
  PursuerDecision decide(const Memory& memory, const GameState& s) const override;

 private:
  ZkmView view_;
  std::unique_ptr<WinSet> base_;
};

// m zombies: k on base vertex 0 and one at each of path:4, path:8, ... on its
// path. The k leads gather on the survivor's projection, then run the arm
// script of the survivor's arm, or chase down a path.
class ZkmZombiePolicy : public PursuerPolicy {
 public:
  ZkmZombiePolicy(const Graph& g, int k, int m, const std::optional<Design>& design = std::nullopt);
  std::string name() const override { return "zkm-zombies"; }
  std::vector<Vertex> place() const override;
  Memory start(const GameState& initial) const override;
  PursuerDecision decide(const Memory& memory, const GameState& s) const override;

 private:
  std::vector<Vertex> gather(const std::vector<Vertex>& pos, Vertex survivor) const;

  ZkmView view_;
};

// Survivor against m-1 zombies. While fewer than k zombies touch ZC_k it
// evades them with a strategy read off a j-cop solve on ZC_k plus one
// pendant vertex per base vertex, the pendant standing for the roots hung
// there. Once k zombies touch ZC_k it enters a zombie-free arm at its base
// vertex and runs the arm survivor script.
class ZkmSurvivorPolicy : public EvaderPolicy {
 public:
  ZkmSurvivorPolicy(const Graph& g, int k, int m, const std::optional<Design>& design = std::nullopt);
  std::string name() const override { return "zkm-survivor"; }
  Vertex place(const std::vector<Vertex>& pursuers) const override;
  Memory start(const GameState& initial) const override;
  EvaderDecision decide(const Memory& memory, const GameState& s) const override;

 private:
  // Touching zombies as positions on the pendant graph, sorted.
  std::vector<Vertex> touching_positions(const std::vector<Vertex>& pursuers) const;
  std::optional<Vertex> safe_base_move(const std::vector<Vertex>& touching, Vertex from, bool allow_any) const;
  int free_arm(const std::vector<Vertex>& pursuers, Vertex b) const;

  ZkmView view_;
  Graph pendant_;
  std::vector<std::unique_ptr<WinSet>> evasion_;  // evasion_[j - 1]: j cops on pendant_
};

}  // namespace pursuit
