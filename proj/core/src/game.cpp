#include "pursuit/game.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "pursuit/error.hpp"

namespace pursuit {

std::string_view to_string(Variant v) { return v == Variant::Cops ? "cops" : "zombies"; }

Variant parse_variant(std::string_view text) {
  if (text == "cops") return Variant::Cops;
  if (text == "zombies") return Variant::Zombies;
  throw Error("unknown variant '" + std::string(text) + "' (expected cops or zombies)");
}

std::string describe(const GameState& s) {
  std::ostringstream os;
  os << "{pursuers=[";
  for (std::size_t i = 0; i < s.pursuers.size(); ++i) os << (i ? "," : "") << s.pursuers[i];
  os << "] survivor=" << s.survivor << " to_move=" << (s.to_move == Side::Pursuer ? "P" : "E") << "}";
  return os.str();
}

bool is_capture(const GameState& s) {
  return std::find(s.pursuers.begin(), s.pursuers.end(), s.survivor) != s.pursuers.end();
}

GameState initial_state(const Graph& g, std::vector<Vertex> placement, Vertex survivor) {
  for (Vertex p : placement) {
    if (!g.valid(p)) throw IllegalMove("pursuer placement " + std::to_string(p) + " is not a vertex");
  }
  if (!g.valid(survivor)) throw IllegalMove("survivor placement " + std::to_string(survivor) + " is not a vertex");
  std::sort(placement.begin(), placement.end());
  return GameState{std::move(placement), survivor, Side::Pursuer};
}

std::vector<Vertex> pursuer_options(const Graph& g, Variant variant, Vertex p, Vertex survivor) {
  std::vector<Vertex> out;
  if (variant == Variant::Cops) {
    out.push_back(p);
    for (Vertex w : g.neighbors(p)) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  }
  const int d = g.distance(p, survivor);
  for (Vertex w : g.neighbors(p)) {
    if (g.distance(w, survivor) == d - 1) out.push_back(w);
  }
  return out;
}

bool is_legal_step(const Graph& g, Variant variant, Vertex from, Vertex to, Vertex survivor) {
  if (!g.valid(from) || !g.valid(to)) return false;
  if (variant == Variant::Cops) return from == to || g.adjacent(from, to);
  return g.adjacent(from, to) && g.distance(to, survivor) == g.distance(from, survivor) - 1;
}

namespace {

void require_turn(const GameState& s, Side side) {
  if (is_capture(s)) throw IllegalMove("the game is over: survivor already caught in " + describe(s));
  if (s.to_move != side) {
    throw IllegalMove(std::string(side == Side::Pursuer ? "pursuer" : "survivor") + " moved out of turn in " +
                      describe(s));
  }
}

}  // namespace

std::vector<std::vector<Vertex>> legal_pursuer_moves(const Graph& g, Variant variant, const GameState& s) {
  require_turn(s, Side::Pursuer);
  const std::size_t m = s.pursuers.size();
  std::vector<std::vector<Vertex>> options(m);
  for (std::size_t i = 0; i < m; ++i) {
    options[i] = pursuer_options(g, variant, s.pursuers[i], s.survivor);
    if (options[i].empty()) return {};
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<std::size_t> pick(m, 0);
  for (;;) {
    std::vector<Vertex> next(m);
    for (std::size_t i = 0; i < m; ++i) next[i] = options[i][pick[i]];
    std::sort(next.begin(), next.end());
    out.push_back(std::move(next));
    std::size_t i = 0;
    while (i < m && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == m) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> legal_survivor_moves(const Graph& g, const GameState& s) {
  require_turn(s, Side::Evader);
  std::vector<Vertex> out{s.survivor};
  for (Vertex w : g.neighbors(s.survivor)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

GameState apply_pursuer_move(const Graph& g, Variant variant, const GameState& s, const PursuerMove& move) {
  require_turn(s, Side::Pursuer);
  if (move.size() != s.pursuers.size()) {
    throw IllegalMove("pursuer move has " + std::to_string(move.size()) + " steps for " +
                      std::to_string(s.pursuers.size()) + " pursuers in " + describe(s));
  }
  std::vector<Vertex> from, next;
  for (const auto& step : move) {
    if (!is_legal_step(g, variant, step.from, step.to, s.survivor)) {
      throw IllegalMove("illegal pursuer step " + std::to_string(step.from) + "->" + std::to_string(step.to) +
                        " in " + describe(s));
    }
    from.push_back(step.from);
    next.push_back(step.to);
  }
  std::sort(from.begin(), from.end());
  if (from != s.pursuers) throw IllegalMove("pursuer move does not start from the current positions in " + describe(s));
  std::sort(next.begin(), next.end());
  return GameState{std::move(next), s.survivor, Side::Evader};
}

GameState apply_pursuer_move(const Graph& g, Variant variant, const GameState& s, const std::vector<Vertex>& next) {
  PursuerMove move;
  for (std::size_t i = 0; i < s.pursuers.size() && i < next.size(); ++i) move.push_back({s.pursuers[i], next[i]});
  if (next.size() != s.pursuers.size()) throw IllegalMove("wrong number of pursuer destinations in " + describe(s));
  return apply_pursuer_move(g, variant, s, move);
}

GameState apply_survivor_move(const Graph& g, const GameState& s, Vertex to) {
  require_turn(s, Side::Evader);
  if (!g.valid(to) || (to != s.survivor && !g.adjacent(s.survivor, to))) {
    throw IllegalMove("illegal survivor step " + std::to_string(s.survivor) + "->" + std::to_string(to) + " in " +
                      describe(s));
  }
  return GameState{s.pursuers, to, Side::Pursuer};
}

namespace {

TracePly snapshot(int turn, Side side, const GameState& s) {
  return TracePly{turn, side, s.pursuers, s.survivor, is_capture(s)};
}

}  // namespace

Trace play_from(const Graph& g, Variant variant, const PursuerPolicy& pursuer, const EvaderPolicy& evader,
                const GameState& initial, int max_turns) {
  Trace trace;
  GameState s = initial;
  trace.plies.push_back(snapshot(0, Side::Evader, s));
  if (is_capture(s)) {
    trace.captured = true;
    trace.capture_turn = 0;
    return trace;
  }
  Memory pm = pursuer.start(s);
  Memory em = evader.start(s);
  for (int turn = 1; turn <= max_turns; ++turn) {
    if (s.to_move == Side::Pursuer) {
      PursuerDecision d = pursuer.decide(pm, s);
      try {
        s = apply_pursuer_move(g, variant, s, d.move);
      } catch (const IllegalMove& e) {
        throw IllegalMove("pursuer policy '" + pursuer.name() + "': " + e.what());
      }
      pm = std::move(d.memory);
      trace.plies.push_back(snapshot(turn, Side::Pursuer, s));
      if (is_capture(s)) {
        trace.captured = true;
        trace.capture_turn = turn;
        return trace;
      }
    }
    EvaderDecision d = evader.decide(em, s);
    try {
      s = apply_survivor_move(g, s, d.to);
    } catch (const IllegalMove& e) {
      throw IllegalMove("evader policy '" + evader.name() + "': " + e.what());
    }
    em = std::move(d.memory);
    trace.plies.push_back(snapshot(turn, Side::Evader, s));
    if (is_capture(s)) {
      trace.captured = true;
      trace.capture_turn = turn;
      return trace;
    }
  }
  return trace;
}

Trace play_match(const Graph& g, Variant variant, const PursuerPolicy& pursuer, const EvaderPolicy& evader,
                 int max_turns) {
  std::vector<Vertex> placement = pursuer.place();
  const Vertex start = evader.place(placement);
  return play_from(g, variant, pursuer, evader, initial_state(g, std::move(placement), start), max_turns);
}

std::string trace_to_jsonl(const Trace& trace) {
  std::string out;
  for (const auto& ply : trace.plies) {
    nlohmann::json j{{"turn", ply.turn},
                     {"side", ply.side == Side::Pursuer ? "P" : "E"},
                     {"pursuers", ply.pursuers},
                     {"survivor", ply.survivor},
                     {"event", ply.capture ? "capture" : "move"}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace pursuit
