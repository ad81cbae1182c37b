#include "pursuit/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numeric>

#include "json.hpp"
#include "pursuit/error.hpp"
#include "pursuit/graph_io.hpp"

namespace pursuit {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

}  // namespace

MultisetIndex::MultisetIndex(int n, int m) : n_(n), m_(m), rows_(n + m), count_(multiset_count(n, m)) {
  if (n < 1 || m < 1) throw Error("multiset index needs n >= 1 and m >= 1");
  binom_.assign(static_cast<std::size_t>(m + 1) * rows_, 0);
  for (int q = 0; q < rows_; ++q) {
    binom_[q] = 1;
    for (int k = 1; k <= m; ++k) {
      const std::size_t at = static_cast<std::size_t>(k) * rows_ + q;
      binom_[at] = q == 0 ? 0 : sat_add(binom(q - 1, k - 1), binom(q - 1, k));
    }
  }
}

std::uint64_t MultisetIndex::multiset_count(std::uint64_t n, std::uint64_t m) {
  // C(n + m - 1, m) computed incrementally; each partial product is exact.
  if (n == 0) return m == 0 ? 1 : 0;
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= m; ++i) {
    const std::uint64_t num = n + i - 1;
    // i divides c * num; split the division so the product cannot overflow early.
    const std::uint64_t gcd = std::gcd(c, i);
    c = sat_mul(c / gcd, num / (i / gcd));
    if (c == kSaturated) return c;
  }
  return c;
}

std::uint64_t MultisetIndex::rank(std::span<const Vertex> sorted) const {
  std::uint64_t r = 0;
  for (int i = 0; i < m_; ++i) r += binom(sorted[i] + i, i + 1);
  return r;
}

void MultisetIndex::unrank(std::uint64_t r, std::vector<Vertex>& out) const {
  out.resize(m_);
  for (int i = m_ - 1; i >= 0; --i) {
    // Largest q in [i, n + i - 1] with C(q, i + 1) <= r.
    int lo = i, hi = n_ + i - 1;
    while (lo < hi) {
      const int mid = (lo + hi + 1) / 2;
      if (binom(mid, i + 1) <= r) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    r -= binom(lo, i + 1);
    out[i] = lo - i;
  }
}

std::uint64_t default_state_budget() {
  if (const char* env = std::getenv("PURSUIT_BUDGET_STATES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 200'000'000ULL;
}

std::uint64_t state_count(std::size_t order, int m) {
  return sat_mul(2, sat_mul(MultisetIndex::multiset_count(order, static_cast<std::uint64_t>(m)), order));
}

WinSet::WinSet(const Graph& g, Variant variant, int m)
    : g_(g), variant_(variant), index_(static_cast<int>(g.order()), m), pairs_(index_.count() * g.order()) {}

std::uint64_t WinSet::pursuer_won_count() const {
  std::uint64_t c = 0;
  for (auto r : pursuer_rank_) c += r != kUnknown;
  for (auto r : evader_rank_) c += r != kUnknown;
  return c;
}

int WinSet::rank(const GameState& s) const {
  if (static_cast<int>(s.pursuers.size()) != pursuers()) {
    throw Error("state has " + std::to_string(s.pursuers.size()) + " pursuers, win set was solved for " +
                std::to_string(pursuers()));
  }
  if (!g_.valid(s.survivor)) throw IllegalMove("invalid survivor vertex in " + describe(s));
  std::vector<Vertex> sorted = s.pursuers;
  for (Vertex p : sorted) {
    if (!g_.valid(p)) throw IllegalMove("invalid pursuer vertex in " + describe(s));
  }
  std::sort(sorted.begin(), sorted.end());
  const std::uint16_t r = table(s.to_move)[pair_index(sorted, s.survivor)];
  return r == kUnknown ? -1 : r;
}

PursuerMove WinSet::best_pursuer_move(const GameState& s) const {
  if (s.to_move != Side::Pursuer) throw IllegalMove("pursuer queried out of turn in " + describe(s));
  if (is_capture(s)) throw IllegalMove("the game is over in " + describe(s));
  if (!pursuer_wins(s)) throw LosingPosition("pursuers cannot force capture from " + describe(s));
  const std::size_t m = s.pursuers.size();
  std::vector<std::vector<Vertex>> options(m);
  for (std::size_t i = 0; i < m; ++i) options[i] = pursuer_options(g_, variant_, s.pursuers[i], s.survivor);
  std::vector<std::size_t> pick(m, 0);
  std::vector<Vertex> next(m);
  PursuerMove best;
  unsigned best_rank = kUnknown;
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) next[i] = options[i][pick[i]];
    std::vector<Vertex> sorted = next;
    std::sort(sorted.begin(), sorted.end());
    const unsigned r = evader_rank_[pair_index(sorted, s.survivor)];
    if (r < best_rank) {
      best_rank = r;
      best.clear();
      for (std::size_t i = 0; i < m; ++i) best.push_back({s.pursuers[i], next[i]});
    }
    std::size_t i = 0;
    while (i < m && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == m) break;
  }
  return best;
}

Vertex WinSet::safe_evader_move(const GameState& s) const {
  for (Vertex t : legal_survivor_moves(g_, s)) {
    GameState next{s.pursuers, t, Side::Pursuer};
    if (!pursuer_wins(next)) return t;
  }
  throw LosingPosition("every survivor move loses from " + describe(s));
}

std::optional<std::vector<Vertex>> WinSet::winning_placement() const {
  const std::size_t n = g_.order();
  std::vector<Vertex> p;
  for (std::uint64_t r = 0; r < index_.count(); ++r) {
    bool all = true;
    for (std::size_t s = 0; s < n && all; ++s) all = pursuer_rank_[r * n + s] != kUnknown;
    if (all) {
      index_.unrank(r, p);
      return p;
    }
  }
  return std::nullopt;
}

std::optional<Vertex> WinSet::escaping_start(std::span<const Vertex> placement) const {
  std::vector<Vertex> sorted(placement.begin(), placement.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex s = 0; s < static_cast<Vertex>(g_.order()); ++s) {
    if (pursuer_rank_[pair_index(sorted, s)] == kUnknown) return s;
  }
  return std::nullopt;
}

bool WinSet::is_fixed_point() const {
  const std::size_t n = g_.order();
  std::vector<Vertex> p;
  for (std::uint64_t r = 0; r < index_.count(); ++r) {
    index_.unrank(r, p);
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
      const std::uint64_t at = r * n + s;
      GameState ps{p, s, Side::Pursuer};
      if (is_capture(ps)) {
        if (pursuer_rank_[at] != 0 || evader_rank_[at] != 0) return false;
        continue;
      }
      unsigned best = kUnknown;
      for (const auto& next : legal_pursuer_moves(g_, variant_, ps)) {
        best = std::min<unsigned>(best, evader_rank_[pair_index(next, s)]);
      }
      const unsigned want_p = best == kUnknown ? kUnknown : best + 1;
      if (pursuer_rank_[at] != want_p) return false;

      GameState es{p, s, Side::Evader};
      unsigned worst = 0;
      for (Vertex t : legal_survivor_moves(g_, es)) {
        worst = std::max<unsigned>(worst, pursuer_rank_[r * n + t]);
      }
      const unsigned want_e = worst == kUnknown ? kUnknown : worst + 1;
      if (evader_rank_[at] != want_e) return false;
    }
  }
  return true;
}

void WinSet::export_binary(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  nlohmann::json header{{"graphHash", graph_hash(g_)},
                        {"variant", std::string(to_string(variant_))},
                        {"m", pursuers()},
                        {"states", state_count()}};
  out << header.dump() << '\n';
  std::vector<unsigned char> bits((state_count() + 7) / 8, 0);
  std::uint64_t i = 0;
  for (const auto* t : {&pursuer_rank_, &evader_rank_}) {
    for (auto r : *t) {
      if (r != kUnknown) bits[i / 8] |= static_cast<unsigned char>(1u << (i % 8));
      ++i;
    }
  }
  out.write(reinterpret_cast<const char*>(bits.data()), static_cast<std::streamsize>(bits.size()));
}

WinSet solve_pursuit(const Graph& g, Variant variant, int m, std::uint64_t budget) {
  if (m < 1) throw Error("number of pursuers must be >= 1, got " + std::to_string(m));
  if (g.order() == 0) throw GraphError("cannot play on the empty graph");
  if (!g.connected()) throw DisconnectedGraph();
  const std::uint64_t required = state_count(g.order(), m);
  if (required > budget) throw BudgetExceeded(required, budget);
  if (required >= std::numeric_limits<std::uint32_t>::max()) {
    throw BudgetExceeded(required, std::numeric_limits<std::uint32_t>::max() - 1);
  }
  if (g.max_degree() + 1 >= WinSet::kUnknown) throw GraphError("maximum degree too large for the solver");

  WinSet ws(g, variant, m);
  const std::uint64_t n = g.order();
  const std::uint64_t pairs = ws.pairs_;
  auto& prank = ws.pursuer_rank_;
  auto& erank = ws.evader_rank_;
  prank.assign(pairs, WinSet::kUnknown);
  erank.assign(pairs, WinSet::kUnknown);
  std::vector<std::uint16_t> counter(pairs, 0);
  std::vector<std::uint32_t> queue;
  queue.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(pairs, 1u << 20)));

  // Queue entries encode pair * 2 + side (0 pursuer turn, 1 evader turn).
  std::vector<Vertex> p;
  for (std::uint64_t r = 0; r < ws.index_.count(); ++r) {
    ws.index_.unrank(r, p);
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
      const std::uint64_t at = r * n + s;
      if (std::binary_search(p.begin(), p.end(), s)) {
        prank[at] = 0;
        erank[at] = 0;
        queue.push_back(static_cast<std::uint32_t>(at * 2));
        queue.push_back(static_cast<std::uint32_t>(at * 2 + 1));
      } else {
        counter[at] = static_cast<std::uint16_t>(g.degree(s) + 1);
      }
    }
  }

  std::vector<std::vector<Vertex>> options(m);
  std::vector<std::size_t> pick(m);
  std::vector<Vertex> prev(m);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t code = queue[head];
    const std::uint64_t at = code / 2;
    const std::uint64_t r = at / n;
    const Vertex s = static_cast<Vertex>(at % n);
    if ((code & 1) == 0) {
      // Pursuer-turn (P, s) is won: every evader-turn (P, t) with s in N[t]
      // loses one escape.
      const std::uint16_t next = prank[at] + 1;
      auto relax = [&](Vertex t) {
        const std::uint64_t e = r * n + t;
        if (erank[e] == WinSet::kUnknown && --counter[e] == 0) {
          erank[e] = next;
          queue.push_back(static_cast<std::uint32_t>(e * 2 + 1));
        }
      };
      relax(s);
      for (Vertex t : g.neighbors(s)) relax(t);
      continue;
    }
    // Evader-turn (P', s) is won: every pursuer-turn state that can move to
    // it is won as well.
    const unsigned next = erank[at] + 1u;
    if (next >= WinSet::kUnknown) throw Error("capture depth exceeds the solver's rank range");
    ws.index_.unrank(r, p);
    bool empty = false;
    for (int i = 0; i < m; ++i) {
      auto& o = options[i];
      o.clear();
      if (variant == Variant::Cops) {
        o.push_back(p[i]);
        for (Vertex u : g.neighbors(p[i])) o.push_back(u);
      } else {
        const int d = g.distance(p[i], s) + 1;
        for (Vertex u : g.neighbors(p[i])) {
          if (g.distance(u, s) == d) o.push_back(u);
        }
      }
      if (o.empty()) empty = true;
    }
    if (empty) continue;
    std::fill(pick.begin(), pick.end(), 0);
    for (;;) {
      for (int i = 0; i < m; ++i) prev[i] = options[i][pick[i]];
      std::sort(prev.begin(), prev.end());
      const std::uint64_t q = ws.index_.rank(prev) * n + s;
      if (prank[q] == WinSet::kUnknown) {
        prank[q] = static_cast<std::uint16_t>(next);
        queue.push_back(static_cast<std::uint32_t>(q * 2));
      }
      int i = 0;
      while (i < m && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == m) break;
    }
  }
  return ws;
}

Side solve_from_state(const Graph& g, Variant variant, const GameState& s, std::uint64_t budget) {
  if (is_capture(s)) return Side::Pursuer;
  return solve_pursuit(g, variant, static_cast<int>(s.pursuers.size()), budget).winner(s);
}

PursuitNumber pursuit_number(const Graph& g, Variant variant, std::optional<int> max_m, std::uint64_t budget) {
  const int limit = max_m.value_or(static_cast<int>(g.order()));
  PursuitNumber out;
  for (int m = 1; m <= limit; ++m) {
    WinSet ws = solve_pursuit(g, variant, m, budget);
    out.states += ws.state_count();
    auto placement = ws.winning_placement();
    out.wins.push_back(placement.has_value());
    if (placement) {
      out.value = m;
      out.placement = std::move(*placement);
      return out;
    }
  }
  out.value = -1;
  return out;
}

std::vector<Vertex> SolverPursuerPolicy::place() const {
  auto p = ws_->winning_placement();
  if (!p) throw LosingPosition("no winning placement for " + std::to_string(ws_->pursuers()) + " pursuers");
  return *p;
}

PursuerDecision SolverPursuerPolicy::decide(const Memory& memory, const GameState& s) const {
  return {ws_->best_pursuer_move(s), memory};
}

Vertex SolverEvaderPolicy::place(const std::vector<Vertex>& pursuers) const {
  auto s = ws_->escaping_start(pursuers);
  if (!s) throw LosingPosition("no escaping survivor start");
  return *s;
}

EvaderDecision SolverEvaderPolicy::decide(const Memory& memory, const GameState& s) const {
  return {ws_->safe_evader_move(s), memory};
}

}  // namespace pursuit
