#pragma once

// Reference solver that shares nothing with the library's solver: ordered
// pursuer tuples instead of multisets, no counters, no queue. Values are
// computed by depth-indexed minimax, V_t = "pursuer forces capture within t
// plies", iterated until nothing changes.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit::fixtures {

class NaiveOracle {
 public:
  // Cops: stay or step; zombies: step one closer to the survivor.
  NaiveOracle(const Graph& g, bool zombies, int m) : g_(g), zombies_(zombies), m_(m), n_(g.order()) {
    tuples_ = 1;
    for (int i = 0; i < m; ++i) tuples_ *= n_;
    const std::size_t total = tuples_ * n_ * 2;
    plies_.assign(total, -1);
    for (std::size_t t = 0; t < tuples_; ++t) {
      for (std::size_t s = 0; s < n_; ++s) {
        if (caught(t, static_cast<Vertex>(s))) {
          plies_[id(t, s, 0)] = 0;
          plies_[id(t, s, 1)] = 0;
        }
      }
    }
    for (int depth = 1;; ++depth) {
      std::vector<std::size_t> newly;
      for (std::size_t t = 0; t < tuples_; ++t) {
        for (std::size_t s = 0; s < n_; ++s) {
          if (plies_[id(t, s, 0)] < 0 && pursuer_can_win(t, static_cast<Vertex>(s), depth)) newly.push_back(id(t, s, 0));
          if (plies_[id(t, s, 1)] < 0 && evader_must_lose(t, static_cast<Vertex>(s), depth)) {
            newly.push_back(id(t, s, 1));
          }
        }
      }
      if (newly.empty()) break;
      for (std::size_t i : newly) plies_[i] = depth;
    }
  }

  // -1 when the evader survives forever, else the plies to capture.
  int plies(const std::vector<Vertex>& pursuers, Vertex s, bool pursuer_to_move) const {
    return plies_[id(encode(pursuers), static_cast<std::size_t>(s), pursuer_to_move ? 0 : 1)];
  }

  // Exists a placement that beats every survivor start.
  bool pursuers_win() const {
    for (std::size_t t = 0; t < tuples_; ++t) {
      bool all = true;
      for (std::size_t s = 0; s < n_ && all; ++s) all = plies_[id(t, s, 0)] >= 0;
      if (all) return true;
    }
    return false;
  }

 private:
  std::size_t id(std::size_t t, std::size_t s, int side) const { return (t * n_ + s) * 2 + side; }

  std::size_t encode(const std::vector<Vertex>& p) const {
    std::size_t t = 0;
    for (Vertex v : p) t = t * n_ + static_cast<std::size_t>(v);
    return t;
  }

  std::vector<Vertex> decode(std::size_t t) const {
    std::vector<Vertex> p(static_cast<std::size_t>(m_));
    for (int i = m_ - 1; i >= 0; --i) {
      p[i] = static_cast<Vertex>(t % n_);
      t /= n_;
    }
    return p;
  }

  bool caught(std::size_t t, Vertex s) const {
    const auto p = decode(t);
    return std::find(p.begin(), p.end(), s) != p.end();
  }

  std::vector<Vertex> options(Vertex p, Vertex s) const {
    std::vector<Vertex> out;
    if (!zombies_) out.push_back(p);
    for (Vertex w : g_.neighbors(p)) {
      if (!zombies_ || g_.distance(w, s) == g_.distance(p, s) - 1) out.push_back(w);
    }
    return out;
  }

  // Depth-first over the cartesian product of per-pursuer options.
  bool pursuer_can_win(std::size_t t, Vertex s, int depth) const {
    const auto p = decode(t);
    std::vector<std::vector<Vertex>> opts;
    for (Vertex v : p) opts.push_back(options(v, s));
    std::vector<Vertex> cur(p.size());
    return any_product(opts, cur, 0, s, depth);
  }

  bool any_product(const std::vector<std::vector<Vertex>>& opts, std::vector<Vertex>& cur, std::size_t i, Vertex s,
                   int depth) const {
    if (i == opts.size()) {
      const int v = plies_[id(encode(cur), static_cast<std::size_t>(s), 1)];
      return v >= 0 && v < depth;
    }
    for (Vertex w : opts[i]) {
      cur[i] = w;
      if (any_product(opts, cur, i + 1, s, depth)) return true;
    }
    return false;
  }

  bool evader_must_lose(std::size_t t, Vertex s, int depth) const {
    auto check = [&](Vertex to) {
      const int v = plies_[id(t, static_cast<std::size_t>(to), 0)];
      return v >= 0 && v < depth;
    };
    if (!check(s)) return false;
    for (Vertex w : g_.neighbors(s)) {
      if (!check(w)) return false;
    }
    return true;
  }

  const Graph& g_;
  bool zombies_;
  int m_;
  std::size_t n_;
  std::size_t tuples_;
  std::vector<int> plies_;
};

}  // namespace pursuit::fixtures
