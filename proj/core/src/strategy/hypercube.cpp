#include "pursuit/strategy/hypercube.hpp"

#include <bit>

#include "pursuit/error.hpp"
#include "pursuit/strategy/arm.hpp"

namespace pursuit {

int hypercube_zombie_count(int n) { return (2 * n + 2) / 3; }

namespace {

int wrap(int coord, int n) { return (coord - 1) % n + 1; }

}  // namespace

std::vector<int> hypercube_home_setting(const std::vector<bool>& odd, int n) {
  int d = 0;
  for (bool o : odd) d += o;
  const int e = static_cast<int>(odd.size()) - d;
  if (d + 2 * e < n) {
    throw Error("home setting does not reach coordinate n: d=" + std::to_string(d) + " e=" + std::to_string(e) +
                " n=" + std::to_string(n));
  }
  std::vector<int> homes(odd.size());
  int next_odd = 1;
  int next_even = d + 2;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    if (odd[i]) {
      homes[i] = wrap(next_odd++, n);
    } else {
      homes[i] = wrap(next_even, n);
      next_even += 2;
    }
  }
  return homes;
}

bool home_setting_covers(int n) {
  const int z = hypercube_zombie_count(n);
  const int lo = z / 2, hi = z - lo;
  return lo + 2 * hi >= n && hi + 2 * lo >= n;
}

int reach(std::uint64_t zombie, std::uint64_t survivor, int home, int n) {
  const std::uint64_t diff = zombie ^ survivor;
  for (int k = 0; k < n; ++k) {
    if (diff & coordinate_mask(wrap(home + k, n), n)) return k;
  }
  return n;
}

int reach_flip(std::uint64_t zombie, std::uint64_t survivor, int home, int n) {
  const int r = reach(zombie, survivor, home, n);
  return r == n ? 0 : wrap(home + r, n);
}

HypercubeZombiePolicy::HypercubeZombiePolicy(int n) : n_(n), count_(hypercube_zombie_count(n)) {
  if (n < 1 || n > 15) throw GraphError("hypercube dimension must be in 1..15");
}

std::vector<Vertex> HypercubeZombiePolicy::place() const {
  const int group1 = count_ / 2;
  std::vector<Vertex> out(static_cast<std::size_t>(group1), 0);
  out.resize(static_cast<std::size_t>(count_), 1);
  return out;
}

// Memory: [survivor vertex at the previous zombie turn (-1 before the first),
// homes..., positions...].
Memory HypercubeZombiePolicy::start(const GameState& initial) const {
  Memory mem(1 + count_, 0);
  mem[0] = -1;
  mem.insert(mem.end(), initial.pursuers.begin(), initial.pursuers.end());
  return mem;
}

std::vector<int> HypercubeZombiePolicy::homes(const Memory& memory) const {
  return {memory.begin() + 1, memory.begin() + 1 + count_};
}

PursuerDecision HypercubeZombiePolicy::decide(const Memory& memory, const GameState& s) const {
  Memory mem = memory;
  const std::vector<Vertex> pos = tracked_positions(std::span<const std::int32_t>(mem).subspan(1 + count_), s);
  const auto sv = static_cast<std::uint64_t>(s.survivor);
  if (mem[0] < 0 || mem[0] == s.survivor) {
    // On the zombies' turn a zombie is odd when its distance is even.
    std::vector<bool> odd;
    for (Vertex p : pos) odd.push_back(std::popcount(static_cast<std::uint64_t>(p) ^ sv) % 2 == 0);
    const std::vector<int> homes = hypercube_home_setting(odd, n_);
    std::copy(homes.begin(), homes.end(), mem.begin() + 1);
  }
  mem[0] = s.survivor;
  std::vector<Vertex> dest(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const int coord = reach_flip(static_cast<std::uint64_t>(pos[i]), sv, mem[1 + i], n_);
    if (coord == 0) throw OffScript("zombie already on the survivor in " + describe(s));
    dest[i] = static_cast<Vertex>(static_cast<std::uint64_t>(pos[i]) ^ coordinate_mask(coord, n_));
  }
  std::copy(dest.begin(), dest.end(), mem.begin() + 1 + count_);
  return {moves_from(pos, dest), std::move(mem)};
}

}  // namespace pursuit
