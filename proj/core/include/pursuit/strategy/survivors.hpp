#pragma once

#include <cstdint>

#include "pursuit/game.hpp"

namespace pursuit {

// Smoke-test survivors. Randomness comes from a seed and lives in policy
// memory, so every policy stays a pure function of (memory, state).

// Uniform over legal moves, staying included.
class RandomSurvivor : public EvaderPolicy {
 public:
  RandomSurvivor(const Graph& g, std::uint32_t seed) : g_(&g), seed_(seed) {}
  std::string name() const override { return "random-survivor"; }
  Vertex place(const std::vector<Vertex>& pursuers) const override;
  Memory start(const GameState& initial) const override;
  EvaderDecision decide(const Memory& memory, const GameState& s) const override;

 private:
  const Graph* g_;
  std::uint32_t seed_;
};

// Maximizes the distance to the nearest pursuer, then the total distance;
// ties broken at random.
class GreedySurvivor : public EvaderPolicy {
 public:
  GreedySurvivor(const Graph& g, std::uint32_t seed) : g_(&g), seed_(seed) {}
  std::string name() const override { return "greedy-survivor"; }
  Vertex place(const std::vector<Vertex>& pursuers) const override;
  Memory start(const GameState& initial) const override;
  EvaderDecision decide(const Memory& memory, const GameState& s) const override;

 private:
  const Graph* g_;
  std::uint32_t seed_;
};

class StationarySurvivor : public EvaderPolicy {
 public:
  explicit StationarySurvivor(Vertex at) : at_(at) {}
  std::string name() const override { return "stationary-survivor"; }
  Vertex place(const std::vector<Vertex>&) const override { return at_; }
  Memory start(const GameState&) const override { return {}; }
  EvaderDecision decide(const Memory& memory, const GameState& s) const override { return {s.survivor, memory}; }

 private:
  Vertex at_;
};

}  // namespace pursuit
