#include "pursuit/validate.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "json.hpp"
#include "pursuit/error.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

std::string_view to_string(Objective o) { return o == Objective::CaptureAll ? "capture-all" : "safety"; }

Objective parse_objective(std::string_view text) {
  if (text == "capture-all") return Objective::CaptureAll;
  if (text == "safety") return Objective::SafetyForever;
  throw Error("unknown objective '" + std::string(text) + "' (expected capture-all or safety)");
}

std::string_view to_string(VerdictResult r) {
  switch (r) {
    case VerdictResult::Holds: return "holds";
    case VerdictResult::Refuted: return "refuted";
    case VerdictResult::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

std::string verdict_to_json(const Verdict& v) {
  nlohmann::json j{{"objective", std::string(to_string(v.objective))},
                   {"result", std::string(to_string(v.result))},
                   {"statesExplored", v.states_explored}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.max_pursuer_turns >= 0) j["maxPursuerTurns"] = v.max_pursuer_turns;
  if (!v.counterexample.empty()) {
    auto trace = nlohmann::json::array();
    for (const auto& s : v.counterexample) {
      trace.push_back({{"pursuers", s.pursuers},
                       {"survivor", s.survivor},
                       {"toMove", s.to_move == Side::Pursuer ? "P" : "E"},
                       {"capture", is_capture(s)}});
    }
    j["counterexampleTrace"] = std::move(trace);
  }
  return j.dump();
}

namespace {

struct Successor {
  Memory memory;
  GameState state;
  int weight;  // 1 across a pursuer move
};

using Expander = std::function<std::vector<Successor>(const Memory&, const GameState&)>;

std::string encode(const Memory& mem, const GameState& s) {
  std::vector<std::int32_t> buf;
  buf.reserve(mem.size() + s.pursuers.size() + 3);
  buf.push_back(static_cast<std::int32_t>(mem.size()));
  buf.insert(buf.end(), mem.begin(), mem.end());
  buf.push_back(s.to_move == Side::Pursuer ? 0 : 1);
  buf.push_back(s.survivor);
  buf.insert(buf.end(), s.pursuers.begin(), s.pursuers.end());
  return {reinterpret_cast<const char*>(buf.data()), buf.size() * sizeof(std::int32_t)};
}

std::pair<Memory, GameState> decode(const std::string& key) {
  std::vector<std::int32_t> buf(key.size() / sizeof(std::int32_t));
  std::copy(key.begin(), key.end(), reinterpret_cast<char*>(buf.data()));
  const std::size_t len = static_cast<std::size_t>(buf[0]);
  Memory mem(buf.begin() + 1, buf.begin() + 1 + static_cast<std::ptrdiff_t>(len));
  GameState s;
  s.to_move = buf[1 + len] == 0 ? Side::Pursuer : Side::Evader;
  s.survivor = buf[2 + len];
  s.pursuers.assign(buf.begin() + 3 + static_cast<std::ptrdiff_t>(len), buf.end());
  return {std::move(mem), std::move(s)};
}

class Explorer {
 public:
  Explorer(Objective objective, Expander expand, std::uint64_t budget)
      : objective_(objective), expand_(std::move(expand)), budget_(budget) {
    verdict_.objective = objective;
  }

  // Returns false once the verdict is decided (refuted or out of budget).
  bool run_root(const Memory& mem, const GameState& s) {
    auto [id, fresh] = intern(mem, s);
    if (!fresh) return true;
    if (over_budget()) return false;
    if (is_capture(s)) {
      if (objective_ == Objective::SafetyForever) return refute("capture at setup", {s});
      finish(id, 0);
      return true;
    }
    color_[id] = kGrey;
    stack_.push_back(Frame{id, 0, {}, 0, false, 0});
    return dfs();
  }

  Verdict take() {
    verdict_.states_explored = keys_.size();
    if (verdict_.result == VerdictResult::Holds && objective_ == Objective::CaptureAll) {
      verdict_.max_pursuer_turns = longest_;
    }
    return std::move(verdict_);
  }

  bool fail_at(const std::string& reason, const GameState& s) { return refute(reason, {s}); }

 private:
  static constexpr std::uint8_t kWhite = 0, kGrey = 1, kBlack = 2;

  struct Frame {
    std::uint32_t id;
    int in_weight;
    std::vector<std::pair<std::uint32_t, int>> succ;
    std::size_t next;
    bool expanded;
    int best;
  };

  std::pair<std::uint32_t, bool> intern(const Memory& mem, const GameState& s) {
    auto [it, fresh] = ids_.try_emplace(encode(mem, s), static_cast<std::uint32_t>(keys_.size()));
    if (fresh) {
      keys_.push_back(&it->first);
      color_.push_back(kWhite);
      value_.push_back(0);
    }
    return {it->second, fresh};
  }

  bool over_budget() {
    if (keys_.size() <= budget_) return false;
    verdict_.result = VerdictResult::BudgetExceeded;
    verdict_.reason = "validation budget of " + std::to_string(budget_) + " product states exhausted";
    return true;
  }

  std::vector<GameState> stack_states() const {
    std::vector<GameState> out;
    for (const auto& f : stack_) out.push_back(decode(*keys_[f.id]).second);
    return out;
  }

  bool refute(const std::string& reason, std::vector<GameState> tail) {
    verdict_.result = VerdictResult::Refuted;
    verdict_.reason = reason;
    verdict_.counterexample = stack_states();
    for (auto& s : tail) verdict_.counterexample.push_back(std::move(s));
    return false;
  }

  void finish(std::uint32_t id, int value) {
    color_[id] = kBlack;
    value_[id] = value;
    longest_ = std::max(longest_, value);
  }

  bool dfs() {
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      if (!f.expanded) {
        f.expanded = true;
        auto [mem, s] = decode(*keys_[f.id]);
        std::vector<Successor> succ;
        try {
          succ = expand_(mem, s);
        } catch (const OffScript& e) {
          return refute(std::string("off-script: ") + e.what(), {});
        } catch (const IllegalMove& e) {
          return refute(std::string("illegal move: ") + e.what(), {});
        } catch (const LosingPosition& e) {
          return refute(std::string("losing position: ") + e.what(), {});
        }
        for (auto& n : succ) f.succ.emplace_back(intern(n.memory, n.state).first, n.weight);
        if (over_budget()) return false;
      }
      if (f.next < f.succ.size()) {
        const auto [child, weight] = f.succ[f.next++];
        if (color_[child] == kWhite) {
          GameState cs = decode(*keys_[child]).second;
          if (is_capture(cs)) {
            if (objective_ == Objective::SafetyForever) return refute("survivor caught", {cs});
            finish(child, 0);
            f.best = std::max(f.best, weight);
            continue;
          }
          color_[child] = kGrey;
          stack_.push_back(Frame{child, weight, {}, 0, false, 0});
        } else if (color_[child] == kGrey) {
          if (objective_ == Objective::CaptureAll) {
            return refute("capture-free cycle", {decode(*keys_[child]).second});
          }
        } else {
          f.best = std::max(f.best, value_[child] + weight);
        }
        continue;
      }
      const std::uint32_t id = f.id;
      const int value = f.best;
      const int w = f.in_weight;
      finish(id, value);
      stack_.pop_back();
      if (!stack_.empty()) stack_.back().best = std::max(stack_.back().best, value + w);
    }
    return true;
  }

  Objective objective_;
  Expander expand_;
  std::uint64_t budget_;
  Verdict verdict_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<const std::string*> keys_;
  std::vector<std::uint8_t> color_;
  std::vector<int> value_;
  std::vector<Frame> stack_;
  int longest_ = 0;
};

template <class Start>
Verdict explore(Objective objective, Expander expand, const ValidationOptions& options,
                const std::vector<GameState>& roots, Start start) {
  Explorer ex(objective, std::move(expand), options.budget);
  for (const auto& s : roots) {
    Memory mem;
    if (!is_capture(s)) {
      try {
        mem = start(s);
      } catch (const OffScript& e) {
        ex.fail_at(std::string("off-script at start: ") + e.what(), s);
        return ex.take();
      }
    }
    if (!ex.run_root(mem, s)) break;
  }
  return ex.take();
}

}  // namespace

Verdict validate_pursuer_policy(const Graph& g, Variant variant, const PursuerPolicy& policy, Objective objective,
                                const ValidationOptions& options) {
  std::vector<GameState> roots = options.initial_states;
  if (roots.empty()) {
    const std::vector<Vertex> placement = policy.place();
    for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) roots.push_back(initial_state(g, placement, s));
  }
  Expander expand = [&](const Memory& mem, const GameState& s) {
    std::vector<Successor> out;
    if (s.to_move == Side::Pursuer) {
      PursuerDecision d = policy.decide(mem, s);
      out.push_back({std::move(d.memory), apply_pursuer_move(g, variant, s, d.move), 1});
    } else {
      for (Vertex t : legal_survivor_moves(g, s)) out.push_back({mem, GameState{s.pursuers, t, Side::Pursuer}, 0});
    }
    return out;
  };
  return explore(objective, std::move(expand), options, roots,
                 [&](const GameState& s) { return policy.start(s); });
}

Verdict validate_evader_policy(const Graph& g, Variant variant, const EvaderPolicy& policy, Objective objective,
                               const ValidationOptions& options) {
  std::vector<GameState> roots = options.initial_states;
  if (roots.empty()) {
    if (options.pursuer_count < 1) throw Error("evader validation needs initial states or a pursuer count");
    MultisetIndex index(static_cast<int>(g.order()), options.pursuer_count);
    std::vector<Vertex> p;
    for (std::uint64_t r = 0; r < index.count(); ++r) {
      index.unrank(r, p);
      roots.push_back(initial_state(g, p, policy.place(p)));
    }
  }
  Expander expand = [&](const Memory& mem, const GameState& s) {
    std::vector<Successor> out;
    if (s.to_move == Side::Pursuer) {
      for (auto& next : legal_pursuer_moves(g, variant, s)) {
        out.push_back({mem, GameState{std::move(next), s.survivor, Side::Evader}, 1});
      }
    } else {
      EvaderDecision d = policy.decide(mem, s);
      out.push_back({std::move(d.memory), apply_survivor_move(g, s, d.to), 0});
    }
    return out;
  };
  return explore(objective, std::move(expand), options, roots,
                 [&](const GameState& s) { return policy.start(s); });
}

}  // namespace pursuit
