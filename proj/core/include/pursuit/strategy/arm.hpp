#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pursuit/families.hpp"
#include "pursuit/game.hpp"

namespace pursuit {

// Sum of (d_{i+1} - d_i) mod 5 over the sorted distances.
int mod5_gap_sum(std::vector<int> distances);

// The survivor is at out:0:x with the survivor to move; zombies adjacent to
// it sit at out:1:x, in:1:x or out:2:(x-1); every other zombie is behind
// T_x; the mod-5 gap sum is at most n - 1 - x.
bool survivor_good(int x, const ArmView& arm, const GameState& s);

// The survivor is in T_y for y >= x or at out:0:n; the zombies nearest the
// survivor all sit at out:0:x and every other zombie is behind T_x; sorted
// distances rise by 0..4 at each step and d_m - d_1 >= n - x.
bool zombie_good(int x, const ArmView& arm, const GameState& s);

enum class LemmaSide : std::uint8_t { Survivor, Zombies };

struct LemmaInstance {
  Graph graph;
  GameState state;
  int arm_copy = 0;
  Vertex hub_vertex = 0;  // v, where the arm attaches
};

// H is a star of pendant paths at v, one per zombie; zombie i starts at
// depth depths[i] on its own path (depth 0 is v itself). With path_length
// every path has that length, so one graph serves all profiles of that
// size. Survivor side: survivor at out:0:0, survivor to move. Zombie side:
// survivor at out:0:0, zombies to move.
LemmaInstance build_lemma_instance(int n, const std::vector<int>& depths, LemmaSide side,
                                   std::optional<int> path_length = std::nullopt);

// Every start of the zombie-side lemma: the instance's zombies, pursuers to
// move, survivor anywhere on the arm.
std::vector<GameState> lemma_zombie_starts(const LemmaInstance& inst);

// Survivor script for one arm, on a slice of policy memory.
struct ArmSurvivorScript {
  static constexpr std::size_t kWords = 4;
  static void init(std::span<std::int32_t> mem);
  // Wait at out:0:0 until a zombie is adjacent, then run five-step circuits
  // of T_x or leave for T_{x+1}. OffScript outside the case analysis.
  static Vertex step(const ArmView& arm, std::span<std::int32_t> mem, const GameState& s);
};

// Zombie script for one arm. Zombies keep identities: positions[i] is
// zombie i and zombie 0 is z_1.
struct ArmZombieScript {
  static constexpr std::size_t kWords = 4;
  // Lead group: the zombies sharing z_1's vertex.
  static void init(std::span<std::int32_t> mem, const std::vector<Vertex>& positions);
  // Destinations for every zombie this turn.
  static std::vector<Vertex> step(const ArmView& arm, std::span<std::int32_t> mem,
                                  const std::vector<Vertex>& positions, Vertex survivor);
};

class ArmSurvivorPolicy : public EvaderPolicy {
 public:
  ArmSurvivorPolicy(const Graph& g, int arm_copy) : arm_(g, arm_copy) {}
  std::string name() const override { return "arm-survivor"; }
  Vertex place(const std::vector<Vertex>&) const override { return arm_.out(0, 0); }
  Memory start(const GameState& initial) const override;
  EvaderDecision decide(const Memory& memory, const GameState& s) const override;

 private:
  ArmView arm_;
};

// z_1 is the zombie nearest the arm root (lowest vertex id on ties).
class ArmZombiePolicy : public PursuerPolicy {
 public:
  ArmZombiePolicy(const Graph& g, int arm_copy, std::vector<Vertex> placement)
      : arm_(g, arm_copy), placement_(std::move(placement)) {}
  std::string name() const override { return "arm-zombies"; }
  std::vector<Vertex> place() const override { return placement_; }
  Memory start(const GameState& initial) const override;
  PursuerDecision decide(const Memory& memory, const GameState& s) const override;

 private:
  ArmView arm_;
  std::vector<Vertex> placement_;
};

// Shared by scripted zombie policies: memory tail holding one position per
// zombie identity, checked against the game state.
std::vector<Vertex> tracked_positions(std::span<const std::int32_t> tail, const GameState& s);
PursuerMove moves_from(const std::vector<Vertex>& from, const std::vector<Vertex>& to);

// Lowest-id neighbor of p one step closer to the survivor; p itself when p
// is the survivor's vertex.
Vertex closer_step(const Graph& g, Vertex p, Vertex survivor);

}  // namespace pursuit
