#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

// Colex rank of sorted multisets of size m over n vertices. With
// q_i = p_i + i the multiset becomes a strictly increasing sequence and is
// ranked as sum_i C(q_i, i + 1).
class MultisetIndex {
 public:
  MultisetIndex(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  std::uint64_t count() const { return count_; }

  std::uint64_t rank(std::span<const Vertex> sorted) const;
  void unrank(std::uint64_t r, std::vector<Vertex>& out) const;

  // C(n + m - 1, m), saturating at UINT64_MAX.
  static std::uint64_t multiset_count(std::uint64_t n, std::uint64_t m);

 private:
  std::uint64_t binom(int q, int k) const { return binom_[static_cast<std::size_t>(k) * rows_ + q]; }

  int n_, m_, rows_;
  std::uint64_t count_;
  std::vector<std::uint64_t> binom_;
};

// Default 2e8 states, overridden by PURSUIT_BUDGET_STATES.
std::uint64_t default_state_budget();

// Total states of the (multiset, survivor, side) game graph.
std::uint64_t state_count(std::size_t order, int m);

// Result of backward induction for one (graph, variant, m). rank() is the
// number of plies to capture under optimal play (0 at capture), or -1 where
// the survivor escapes forever.
class WinSet {
 public:
  static constexpr std::uint16_t kUnknown = 0xFFFF;

  const Graph& graph() const { return g_; }
  Variant variant() const { return variant_; }
  int pursuers() const { return index_.m(); }
  const MultisetIndex& multisets() const { return index_; }

  std::uint64_t state_count() const { return 2 * pairs_; }
  std::uint64_t pursuer_won_count() const;

  bool pursuer_wins(const GameState& s) const { return rank(s) >= 0; }
  int rank(const GameState& s) const;
  Side winner(const GameState& s) const { return pursuer_wins(s) ? Side::Pursuer : Side::Evader; }

  // Pursuer move to a successor of least rank. LosingPosition unless the
  // pursuer wins from s.
  PursuerMove best_pursuer_move(const GameState& s) const;
  // Lowest-id survivor move to a state the pursuer does not win.
  // LosingPosition when every move loses.
  Vertex safe_evader_move(const GameState& s) const;

  // A placement winning against every survivor start, if any; the first in
  // multiset rank order.
  std::optional<std::vector<Vertex>> winning_placement() const;
  // Some survivor start that escapes against the placement.
  std::optional<Vertex> escaping_start(std::span<const Vertex> placement) const;

  // Recomputes one backward-induction sweep over the stored result and
  // reports whether any flag or rank would change.
  bool is_fixed_point() const;

  // Header line {"graphHash","variant","m","states"} then one flag bit per
  // state, pursuer-turn states first.
  void export_binary(const std::string& path) const;

 private:
  friend WinSet solve_pursuit(const Graph& g, Variant variant, int m, std::uint64_t budget);

  WinSet(const Graph& g, Variant variant, int m);

  std::uint64_t pair_index(std::span<const Vertex> sorted, Vertex s) const {
    return index_.rank(sorted) * g_.order() + static_cast<std::uint64_t>(s);
  }
  const std::vector<std::uint16_t>& table(Side side) const {
    return side == Side::Pursuer ? pursuer_rank_ : evader_rank_;
  }

  Graph g_;
  Variant variant_;
  MultisetIndex index_;
  std::uint64_t pairs_;
  std::vector<std::uint16_t> pursuer_rank_;
  std::vector<std::uint16_t> evader_rank_;
};

// Backward induction (attractor with per-state counters). Throws
// BudgetExceeded when state_count(|V|, m) exceeds the budget and
// DisconnectedGraph for disconnected inputs.
WinSet solve_pursuit(const Graph& g, Variant variant, int m, std::uint64_t budget = default_state_budget());

Side solve_from_state(const Graph& g, Variant variant, const GameState& s,
                      std::uint64_t budget = default_state_budget());

struct PursuitNumber {
  int value = 0;
  std::vector<Vertex> placement;   // a winning placement for `value` pursuers
  std::vector<bool> wins;          // wins[m-1]: m pursuers win, for m = 1..value
  std::uint64_t states = 0;        // total states over all solves
};

// Least m for which some placement beats every survivor start; tries m = 1,
// 2, ... up to max_m (default |V|).
PursuitNumber pursuit_number(const Graph& g, Variant variant, std::optional<int> max_m = std::nullopt,
                             std::uint64_t budget = default_state_budget());

// Optimal policies read off a WinSet. The WinSet must outlive them.
class SolverPursuerPolicy : public PursuerPolicy {
 public:
  explicit SolverPursuerPolicy(const WinSet& ws) : ws_(&ws) {}
  std::string name() const override { return "solver-pursuer"; }
  std::vector<Vertex> place() const override;
  Memory start(const GameState&) const override { return {}; }
  PursuerDecision decide(const Memory& memory, const GameState& s) const override;

 private:
  const WinSet* ws_;
};

class SolverEvaderPolicy : public EvaderPolicy {
 public:
  explicit SolverEvaderPolicy(const WinSet& ws) : ws_(&ws) {}
  std::string name() const override { return "solver-evader"; }
  Vertex place(const std::vector<Vertex>& pursuers) const override;
  Memory start(const GameState&) const override { return {}; }
  EvaderDecision decide(const Memory& memory, const GameState& s) const override;

 private:
  const WinSet* ws_;
};

}  // namespace pursuit
