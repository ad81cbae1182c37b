#pragma once

#include <cstdint>
#include <vector>

#include "pursuit/game.hpp"

namespace pursuit {

// ceil(2n/3).
int hypercube_zombie_count(int n);

// Coordinates are 1..n, coordinate 1 being the most significant bit of the
// vertex id.
inline std::uint64_t coordinate_mask(int coord, int n) { return std::uint64_t{1} << (n - coord); }

// odd[i] tells whether zombie i is odd. Odd zombies take homes 1..d and
// even zombies d+2, d+4, ..., d+2e, in zombie order, wrapping past n.
// Throws Error when d + 2e < n.
std::vector<int> hypercube_home_setting(const std::vector<bool>& odd, int n);

// d + 2e >= n for both ways of splitting ceil(2n/3) zombies into the
// two parity groups.
bool home_setting_covers(int n);

// Consecutive matching coordinates from `home` rightward, wrapping; n when
// the vectors are equal.
int reach(std::uint64_t zombie, std::uint64_t survivor, int home, int n);

// The first mismatching coordinate from `home` rightward: the flip that
// maximizes reach. 0 when the vectors are equal.
int reach_flip(std::uint64_t zombie, std::uint64_t survivor, int home, int n);

// ceil(2n/3) zombies in two groups on 0...00 and 0...01. Homes are reset on
// the first turn and after every turn the survivor stays put.
class HypercubeZombiePolicy : public PursuerPolicy {
 public:
  explicit HypercubeZombiePolicy(int n);
  std::string name() const override { return "hypercube-zombies"; }
  std::vector<Vertex> place() const override;
  Memory start(const GameState& initial) const override;
  PursuerDecision decide(const Memory& memory, const GameState& s) const override;

  int dimension() const { return n_; }
  int zombies() const { return count_; }
  // Homes held in a memory produced by this policy.
  std::vector<int> homes(const Memory& memory) const;

 private:
  int n_;
  int count_;
};

}  // namespace pursuit
