#include "pursuit/strategy/zkm.hpp"

#include <algorithm>

#include "pursuit/error.hpp"
#include "pursuit/strategy/arm.hpp"

namespace pursuit {

ZkmView::ZkmView(const Graph& g, int k, int m, const std::optional<Design>& design)
    : g_(&g), k_(k), m_(m), zc_(build_ZC(k, design)), layout_(g) {
  if (k >= 2) {
    design_ = design ? *design : canonical_ZC_design(k);
    canonicalize(design_);
  }
  if (layout_.base.size() != zc_.order()) throw GraphError("base graph does not match ZC_" + std::to_string(k));
  for (std::size_t i = 0; i < layout_.base.size(); ++i) {
    const Vertex b = layout_.base[i];
    const auto& l = g.label(b);
    if (b != static_cast<Vertex>(i) || l.index != b) throw GraphError("base vertices of Z_{k,m} must come first");
  }
  const int want = 4 * (m - k);
  if (layout_.arm_length != want) {
    throw GraphError("arm length " + std::to_string(layout_.arm_length) + " does not match Z_{" + std::to_string(k) +
                     "," + std::to_string(m) + "}");
  }
  arms_.resize(layout_.hangs.size());
  for (std::size_t h = 0; h < layout_.hangs.size(); ++h) {
    if (!layout_.hangs[h].is_path) arms_[h].emplace(g, layout_.hangs[h].copy);
  }
}

namespace {

// Any pursuer adjacent to the survivor steps onto it; returns false when
// none is.
bool capture_first(const Graph& g, const std::vector<Vertex>& pos, Vertex sv, Variant variant,
                   std::vector<Vertex>& dest) {
  if (std::none_of(pos.begin(), pos.end(), [&](Vertex p) { return g.adjacent(p, sv); })) return false;
  dest.resize(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (variant == Variant::Zombies || g.adjacent(pos[i], sv)) {
      dest[i] = closer_step(g, pos[i], sv);
    } else {
      dest[i] = pos[i];
    }
  }
  return true;
}

// Assigns the steps of a multiset move to identified pursuers.
std::vector<Vertex> assign_steps(const std::vector<Vertex>& pos, const PursuerMove& move) {
  std::vector<Vertex> dest(pos.size(), -1);
  for (const Step& st : move) {
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (dest[i] < 0 && pos[i] == st.from) {
        dest[i] = st.to;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (dest[i] < 0) dest[i] = pos[i];
  }
  return dest;
}

// Cop memory: [phase, hunter, stage, x, positions...].
enum CopWord : std::size_t { kCopPhase = 0, kHunter, kStage, kCopX, kCopHeader };
enum CopPhase : std::int32_t { kProjection = 0, kHunt = 1 };
enum CopStage : std::int32_t { kEnter = 0, kRoot, kAtOut, kIn0, kHub, kAdvance1, kAdvance2, kCorner };

}  // namespace

ZkmCopPolicy::ZkmCopPolicy(const Graph& g, int k, int m, const std::optional<Design>& design)
    : view_(g, k, m, design),
      base_(std::make_unique<WinSet>(solve_pursuit(view_.base_graph(), Variant::Cops, k))) {}

std::vector<Vertex> ZkmCopPolicy::place() const {
  auto p = base_->winning_placement();
  if (!p) throw LosingPosition("no winning placement for " + std::to_string(view_.k()) + " cops on ZC_k");
  return *p;
}

Memory ZkmCopPolicy::start(const GameState& initial) const {
  Memory mem(kCopHeader, 0);
  mem[kHunter] = -1;
  mem.insert(mem.end(), initial.pursuers.begin(), initial.pursuers.end());
  return mem;
}

PursuerDecision ZkmCopPolicy::decide(const Memory& memory, const GameState& s) const {
  Memory mem = memory;
  const Graph& g = view_.graph();
  const ZkmLayout& lay = view_.layout();
  const std::vector<Vertex> pos = tracked_positions(std::span<const std::int32_t>(mem).subspan(kCopHeader), s);
  const Vertex sv = s.survivor;
  std::vector<Vertex> dest;
  if (capture_first(g, pos, sv, Variant::Cops, dest)) {
    std::copy(dest.begin(), dest.end(), mem.begin() + kCopHeader);
    return {moves_from(pos, dest), std::move(mem)};
  }

  const Vertex r = lay.projection[sv];
  if (mem[kCopPhase] == kProjection) {
    const auto on = std::find(pos.begin(), pos.end(), r);
    if (on == pos.end()) {
      std::vector<Vertex> sorted = pos;
      std::sort(sorted.begin(), sorted.end());
      const GameState projected{sorted, r, Side::Pursuer};
      dest = assign_steps(pos, base_->best_pursuer_move(projected));
      std::copy(dest.begin(), dest.end(), mem.begin() + kCopHeader);
      return {moves_from(pos, dest), std::move(mem)};
    }
    mem[kCopPhase] = kHunt;
    mem[kHunter] = static_cast<std::int32_t>(on - pos.begin());
    mem[kStage] = kEnter;
    mem[kCopX] = 0;
  }

  const std::size_t h = static_cast<std::size_t>(mem[kHunter]);
  const int hang = lay.hang_of[sv];
  if (hang < 0) throw OffScript("robber back on ZC_k during the hunt: " + describe(s));
  Vertex next = -1;
  if (lay.hangs[hang].is_path) {
    next = closer_step(g, pos[h], sv);
  } else {
    const ArmView& arm = view_.arm(hang);
    int x = mem[kCopX];
    switch (mem[kStage]) {
      case kEnter:
        if (pos[h] != lay.hangs[hang].base) throw OffScript("hunter is not at the arm's base: " + describe(s));
        next = arm.root();
        mem[kStage] = kRoot;
        break;
      case kRoot:
        next = arm.out(0, 0);
        mem[kStage] = kAtOut;
        break;
      case kAtOut:
        if (x >= arm.length()) throw OffScript("robber past the end of the arm: " + describe(s));
        next = arm.in(0, x);
        mem[kStage] = kIn0;
        break;
      case kIn0:
        next = arm.hub(x);
        mem[kStage] = kHub;
        break;
      case kHub: {
        const auto block = arm.block_of(sv);
        int ring = -1;
        for (int j : {1, 3, 4}) {
          if (sv == arm.out(j, x)) ring = j;
        }
        if (ring >= 0) {
          next = arm.in(ring, x);
          mem[kStage] = kCorner;
        } else if (sv == arm.out(2, x) || (block && *block > x)) {
          next = arm.in(2, x);
          mem[kStage] = kAdvance1;
        } else {
          throw OffScript("robber position not covered from the hub: " + describe(s));
        }
        break;
      }
      case kAdvance1:
        next = arm.out(2, x);
        mem[kStage] = kAdvance2;
        break;
      case kAdvance2:
        next = arm.out(0, x + 1);
        mem[kStage] = kAtOut;
        mem[kCopX] = x + 1;
        break;
      default:
        throw OffScript("cornered robber escaped: " + describe(s));
    }
  }
  dest = pos;
  dest[h] = next;
  std::copy(dest.begin(), dest.end(), mem.begin() + kCopHeader);
  return {moves_from(pos, dest), std::move(mem)};
}

namespace {

// Zombie memory: [phase, hang, arm script words..., positions...].
enum ZombiePhase : std::int32_t { kGather = 0, kPathChase = 1, kArm = 2 };
constexpr std::size_t kScriptAt = 2;
constexpr std::size_t kZombieHeader = kScriptAt + ArmZombieScript::kWords;

}  // namespace

ZkmZombiePolicy::ZkmZombiePolicy(const Graph& g, int k, int m, const std::optional<Design>& design)
    : view_(g, k, m, design) {}

std::vector<Vertex> ZkmZombiePolicy::place() const {
  const Graph& g = view_.graph();
  const ZkmLayout& lay = view_.layout();
  std::vector<Vertex> out(static_cast<std::size_t>(view_.k()), lay.base.front());
  const int path = lay.path_at(lay.base.front());
  for (int i = 1; i <= view_.m() - view_.k(); ++i) {
    out.push_back(g.at(VertexLabel::path(4 * i, lay.hangs[path].copy)));
  }
  return out;
}

Memory ZkmZombiePolicy::start(const GameState&) const {
  Memory mem(kZombieHeader, 0);
  const std::vector<Vertex> p = place();
  mem.insert(mem.end(), p.begin(), p.end());
  return mem;
}

std::vector<Vertex> ZkmZombiePolicy::gather(const std::vector<Vertex>& pos, Vertex sv) const {
  const Graph& g = view_.graph();
  const std::size_t k = static_cast<std::size_t>(view_.k());
  std::vector<Vertex> dest;
  if (capture_first(g, pos, sv, Variant::Zombies, dest)) return dest;
  dest.resize(pos.size());
  for (std::size_t i = k; i < pos.size(); ++i) dest[i] = closer_step(g, pos[i], sv);

  const Vertex u = view_.layout().projection[sv];
  const Vertex lead = pos[0];
  const bool together = std::all_of(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(k),
                                    [&](Vertex p) { return p == lead; });
  auto off = [&](const char* what) {
    return OffScript(std::string("zombie gathering: ") + what + " (survivor at " + std::to_string(sv) + ")");
  };
  if (!together) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!g.adjacent(pos[i], u)) throw off("lead zombie not next to the projection");
      dest[i] = u;
    }
    return dest;
  }
  const int d = g.distance(lead, u);
  if (d == 1) {
    std::fill(dest.begin(), dest.begin() + static_cast<std::ptrdiff_t>(k), u);
  } else if (d == 2) {
    const Design& des = view_.design();
    const int anchor = des.blocks[lead].front();
    const auto& target = des.blocks[u];
    for (std::size_t i = 0; i < k; ++i) {
      const int x = target[i];
      Vertex through = -1;
      for (std::size_t b = 0; b < des.blocks.size() && through < 0; ++b) {
        const auto& blk = des.blocks[b];
        if (std::binary_search(blk.begin(), blk.end(), anchor) && std::binary_search(blk.begin(), blk.end(), x)) {
          through = static_cast<Vertex>(b);
        }
      }
      if (through < 0) throw off("no block through the anchor and the survivor's point");
      dest[i] = through;
    }
  } else {
    throw off("projection at an unexpected distance from the leads");
  }
  return dest;
}

PursuerDecision ZkmZombiePolicy::decide(const Memory& memory, const GameState& s) const {
  Memory mem = memory;
  const Graph& g = view_.graph();
  const ZkmLayout& lay = view_.layout();
  const std::vector<Vertex> pos = tracked_positions(std::span<const std::int32_t>(mem).subspan(kZombieHeader), s);
  const Vertex sv = s.survivor;
  const std::span<std::int32_t> script(mem.data() + kScriptAt, ArmZombieScript::kWords);

  if (mem[0] == kGather) {
    const std::size_t k = static_cast<std::size_t>(view_.k());
    const Vertex u = lay.projection[sv];
    const bool gathered = std::all_of(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(k),
                                      [&](Vertex p) { return p == u; });
    if (gathered && !lay.is_base[sv]) {
      const int hang = lay.hang_of[sv];
      if (lay.hangs[hang].is_path) {
        mem[0] = kPathChase;
      } else {
        mem[0] = kArm;
        mem[1] = hang;
        ArmZombieScript::init(script, pos);
      }
    }
  }

  std::vector<Vertex> dest;
  switch (mem[0]) {
    case kGather:
      dest = gather(pos, sv);
      break;
    case kPathChase:
      for (Vertex p : pos) dest.push_back(closer_step(g, p, sv));
      break;
    default:
      if (lay.hang_of[sv] != mem[1]) throw OffScript("survivor left its arm: " + describe(s));
      dest = ArmZombieScript::step(view_.arm(mem[1]), script, pos, sv);
  }
  std::copy(dest.begin(), dest.end(), mem.begin() + kZombieHeader);
  return {moves_from(pos, dest), std::move(mem)};
}

namespace {

// Survivor memory: [phase, hang, arm script words...].
enum SurvivorPhase : std::int32_t { kEvade = 0, kEnterArm = 1, kInArm = 2 };
constexpr std::size_t kSurvivorScriptAt = 2;

}  // namespace

namespace {

// ZC_k with a pendant anon:b on every base vertex b; pendant ids follow the
// base ids.
Graph pendant_graph(const Graph& zc) {
  GraphBuilder b;
  b.add_graph(zc, 0);
  const auto n = static_cast<Vertex>(zc.order());
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, b.add_vertex(VertexLabel::anon(v)));
  return std::move(b).build();
}

}  // namespace

ZkmSurvivorPolicy::ZkmSurvivorPolicy(const Graph& g, int k, int m, const std::optional<Design>& design)
    : view_(g, k, m, design), pendant_(pendant_graph(view_.base_graph())) {
  for (int j = 1; j < k; ++j) {
    evasion_.push_back(std::make_unique<WinSet>(solve_pursuit(pendant_, Variant::Cops, j)));
  }
}

std::vector<Vertex> ZkmSurvivorPolicy::touching_positions(const std::vector<Vertex>& pursuers) const {
  const ZkmLayout& lay = view_.layout();
  const auto base_count = static_cast<Vertex>(lay.base.size());
  std::vector<Vertex> out;
  for (Vertex p : pursuers) {
    if (lay.is_base[p]) {
      out.push_back(p);
    } else if (lay.touches(view_.graph(), p)) {
      out.push_back(base_count + lay.projection[p]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A base vertex in N[from] (or anywhere, with allow_any) from which the
// survivor escapes cops standing on the touching positions; lowest id first.
std::optional<Vertex> ZkmSurvivorPolicy::safe_base_move(const std::vector<Vertex>& touching, Vertex from,
                                                        bool allow_any) const {
  const Graph& zc = view_.base_graph();
  if (touching.empty()) return allow_any ? Vertex{0} : from;
  const WinSet& ws = *evasion_[touching.size() - 1];
  for (Vertex w = 0; w < static_cast<Vertex>(zc.order()); ++w) {
    if (!allow_any && w != from && !zc.adjacent(w, from)) continue;
    if (!ws.pursuer_wins(GameState{touching, w, Side::Pursuer})) return w;
  }
  return std::nullopt;
}

int ZkmSurvivorPolicy::free_arm(const std::vector<Vertex>& pursuers, Vertex b) const {
  const ZkmLayout& lay = view_.layout();
  for (int hang : lay.arms_at(b)) {
    if (std::none_of(pursuers.begin(), pursuers.end(), [&](Vertex p) { return lay.hang_of[p] == hang; })) {
      return hang;
    }
  }
  return -1;
}

Vertex ZkmSurvivorPolicy::place(const std::vector<Vertex>& pursuers) const {
  const std::vector<Vertex> proj = touching_positions(pursuers);
  if (static_cast<int>(proj.size()) >= view_.k()) {
    for (Vertex b : view_.layout().base) {
      const int hang = free_arm(pursuers, b);
      if (hang >= 0) return view_.arm(hang).out(0, 0);
    }
    throw OffScript("every arm holds a zombie");
  }
  const auto w = proj.empty() ? std::optional<Vertex>(view_.layout().base.front()) : safe_base_move(proj, 0, true);
  if (!w) throw OffScript("no safe base vertex against the touching zombies");
  return *w;
}

Memory ZkmSurvivorPolicy::start(const GameState& initial) const {
  Memory mem(kSurvivorScriptAt + ArmSurvivorScript::kWords, 0);
  const int hang = view_.layout().hang_of[initial.survivor];
  if (hang >= 0) {
    if (view_.layout().hangs[hang].is_path || initial.survivor != view_.arm(hang).out(0, 0)) {
      throw OffScript("survivor starts off script: " + describe(initial));
    }
    mem[0] = kInArm;
    mem[1] = hang;
    ArmSurvivorScript::init(std::span<std::int32_t>(mem).subspan(kSurvivorScriptAt));
  }
  return mem;
}

EvaderDecision ZkmSurvivorPolicy::decide(const Memory& memory, const GameState& s) const {
  Memory mem = memory;
  const std::span<std::int32_t> script = std::span<std::int32_t>(mem).subspan(kSurvivorScriptAt);
  switch (mem[0]) {
    case kEvade: {
      const std::vector<Vertex> proj = touching_positions(s.pursuers);
      if (static_cast<int>(proj.size()) >= view_.k()) {
        const int hang = free_arm(s.pursuers, s.survivor);
        if (hang < 0) throw OffScript("no zombie-free arm at the survivor's base: " + describe(s));
        mem[0] = kEnterArm;
        mem[1] = hang;
        return {view_.arm(hang).root(), std::move(mem)};
      }
      const auto w = safe_base_move(proj, s.survivor, false);
      if (!w) throw OffScript("no evasive move on ZC_k: " + describe(s));
      return {*w, std::move(mem)};
    }
    case kEnterArm:
      mem[0] = kInArm;
      ArmSurvivorScript::init(script);
      return {view_.arm(mem[1]).out(0, 0), std::move(mem)};
    default: {
      const Vertex to = ArmSurvivorScript::step(view_.arm(mem[1]), script, s);
      return {to, std::move(mem)};
    }
  }
}

}  // namespace pursuit
