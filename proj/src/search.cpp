#include "a3b/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace a3b {

namespace {

using Mask = unsigned __int128;
constexpr int kMaxTiles = 128;

Mask bit(int t) { return Mask(1) << t; }

std::uint32_t pack(const std::array<int, 4>& e) {
  return static_cast<std::uint32_t>(e[0]) | (static_cast<std::uint32_t>(e[1]) << 8) |
         (static_cast<std::uint32_t>(e[2]) << 16) | (static_cast<std::uint32_t>(e[3]) << 24);
}

// An open vertex is a fan of corners in rotation order. The first corner has
// a free incoming edge and the last a free outgoing edge.
struct Fan {
  int first = -1;
  int last = -1;
  std::array<int, 4> e{};
  int sum = 0;  // angle units
  Mask tiles = 0;
  bool closed = false;
  bool dead = false;
};

struct State {
  int ntiles = 0;
  std::vector<signed char> chi;
  std::vector<int> glue;  // edge code t*4+slot -> partner edge code, -1 free
  std::vector<int> vid;   // corner code t*4+label -> fan id
  std::vector<Fan> fans;
  std::vector<int> closed_count;  // per admissible type
  std::vector<int> compatible;    // balance solutions still dominating the closed census
};

// One way to continue at an open vertex: a new tile or an existing free edge.
struct Move {
  bool new_tile = false;
  int chi = 0;
  int slot = 0;     // slot of the new tile
  int target = -1;  // edge code of the existing free edge
};

class Searcher {
 public:
  Searcher(const QuadClass& q, const SearchOptions& opts, std::vector<VertexType> types)
      : q_(q), opts_(opts), f_(q.f), types_(std::move(types)) {
    BigInt d = 1;
    for (const auto& x : q.angles) d = lcm_big(d, x.den());
    for (int a = 0; a < 4; ++a) units_[a] = static_cast<int>(BigInt(q.angles[a].num() * (d / q.angles[a].den())));
    full_ = static_cast<int>(BigInt(2 * d));
    for (std::size_t i = 0; i < types_.size(); ++i) {
      type_index_[pack(types_[i].e)] = static_cast<int>(i);
      add_subvectors(types_[i].e, sub_);
    }
  }

  void set_balance(std::vector<BalanceSolution> sols) {
    for (const auto& s : sols) {
      std::vector<int> c(types_.size(), 0);
      bool ok = true;
      for (const auto& [t, m] : s.multiplicities) {
        auto it = type_index_.find(pack(t.e));
        if (it == type_index_.end()) {
          ok = false;
          break;
        }
        c[it->second] = m;
      }
      if (ok) solutions_.push_back(std::move(c));
    }
    use_balance_ = true;
  }

  void set_target(const VertexType& v, int seed_label) {
    target_ = v;
    target_sub_.clear();
    add_subvectors(v.e, target_sub_);
    seed_label_ = seed_label;
  }

  // Enumeration mode.
  void run_all(SearchResult& res) {
    result_ = &res;
    std::vector<int> seeds = {1};
    if (!opts_.allow_reflection) seeds.push_back(-1);
    for (int c : seeds) {
      State s = initial(c);
      dfs(s);
      if (stopped_) break;
    }
  }

  // Local mode: true when a closed neighbourhood of the target was found.
  bool run_local() {
    local_ = true;
    State s = initial(1);
    dfs(s);
    return found_local_ || budget_hit_;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t hits() const { return hits_; }
  bool budget_hit() const { return budget_hit_; }
  bool stopped() const { return stopped_; }

 private:
  static void add_subvectors(const std::array<int, 4>& e, std::unordered_set<std::uint32_t>& out) {
    for (int i = 0; i <= e[0]; ++i)
      for (int j = 0; j <= e[1]; ++j)
        for (int k = 0; k <= e[2]; ++k)
          for (int l = 0; l <= e[3]; ++l) out.insert(pack({i, j, k, l}));
  }

  State initial(int chi) {
    State s;
    s.chi.assign(f_, 0);
    s.glue.assign(4 * f_, -1);
    s.vid.assign(4 * f_, -1);
    s.closed_count.assign(types_.size(), 0);
    if (use_balance_) {
      s.compatible.resize(solutions_.size());
      for (std::size_t i = 0; i < solutions_.size(); ++i) s.compatible[i] = static_cast<int>(i);
    }
    add_tile(s, chi);
    return s;
  }

  int add_tile(State& s, int chi) {
    int t = s.ntiles++;
    s.chi[t] = static_cast<signed char>(chi);
    for (int l = 0; l < 4; ++l) {
      Fan fan;
      fan.first = fan.last = 4 * t + l;
      fan.e[l] = 1;
      fan.sum = units_[l];
      fan.tiles = bit(t);
      s.vid[4 * t + l] = static_cast<int>(s.fans.size());
      s.fans.push_back(fan);
    }
    return t;
  }

  // Corner at the start / end of an edge, in counterclockwise order of its tile.
  static int out_corner(int chi, int edge) {
    int t = edge / 4;
    int p = ccw_of_slot(chi, edge % 4);
    return 4 * t + label_of_ccw(chi, p);
  }
  static int in_corner(int chi, int edge) {
    int t = edge / 4;
    int p = ccw_of_slot(chi, edge % 4);
    return 4 * t + label_of_ccw(chi, (p + 1) % 4);
  }
  static int out_edge_of(int chi, int corner) {
    int t = corner / 4;
    int p = ccw_of_label(chi, corner % 4);
    return 4 * t + slot_of_ccw(chi, p);
  }

  bool is_seed_fan(const State& s, int fan) const { return target_ && s.vid[seed_label_] == fan; }

  bool sub_ok(const State& s, int fan, const std::array<int, 4>& e) const {
    std::uint32_t k = pack(e);
    if (!sub_.count(k)) return false;
    if (is_seed_fan(s, fan) && !target_sub_.count(k)) return false;
    return true;
  }

  bool close_ok(const State& s, int fan, const std::array<int, 4>& e) const {
    auto it = type_index_.find(pack(e));
    if (it == type_index_.end()) return false;
    if (is_seed_fan(s, fan) && e != target_->e) return false;
    if (use_balance_) {
      int need = s.closed_count[it->second] + 1;
      bool any = false;
      for (int i : s.compatible) {
        if (solutions_[i][it->second] >= need) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    return true;
  }

  static std::array<int, 4> add(const std::array<int, 4>& x, const std::array<int, 4>& y) {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
  }

  // Checks a gluing without applying it. a: corner whose outgoing edge is used,
  // fan_b: fan joined after a; c / fan_d likewise for the opposite end.
  bool check_pair(const State& s, int fan_a, const std::array<int, 4>& ea, int sum_a, Mask ma, int fan_b,
                  const std::array<int, 4>& eb, int sum_b, Mask mb, bool same, int& merged_id,
                  std::array<int, 4>& merged_e, int& merged_sum, Mask& merged_mask) const {
    if (same) {
      if (!close_ok(s, fan_a, ea)) return false;
      merged_id = -2;
      return true;
    }
    if (ma & mb) return false;
    if (sum_a + sum_b > full_) return false;
    std::array<int, 4> e = add(ea, eb);
    int fan_for_target = (fan_b >= 0 && is_seed_fan(s, fan_b)) ? fan_b : fan_a;
    if (!sub_ok(s, fan_for_target, e)) return false;
    merged_id = fan_a;
    merged_e = e;
    merged_sum = sum_a + sum_b;
    merged_mask = ma | mb;
    return true;
  }

  bool feasible_new(const State& s, int edge, int chi, int slot) const {
    if (s.ntiles >= f_) return false;
    int tchi = s.chi[edge / 4];
    int a = out_corner(tchi, edge);
    int d = in_corner(tchi, edge);
    int nt = s.ntiles;
    int nedge = 4 * nt + slot;
    int b = in_corner(chi, nedge) % 4;
    int c = out_corner(chi, nedge) % 4;
    const Fan& fa = s.fans[s.vid[a]];
    const Fan& fd = s.fans[s.vid[d]];
    std::array<int, 4> ub{};
    ub[b] = 1;
    std::array<int, 4> uc{};
    uc[c] = 1;
    if (fa.sum + units_[b] > full_ || fd.sum + units_[c] > full_) return false;
    if (!sub_ok(s, s.vid[a], add(fa.e, ub))) return false;
    if (!sub_ok(s, s.vid[d], add(fd.e, uc))) return false;
    return true;
  }

  bool feasible_glue(const State& s, int edge, int other) const {
    int tchi = s.chi[edge / 4];
    int ochi = s.chi[other / 4];
    int a = out_corner(tchi, edge);
    int d = in_corner(tchi, edge);
    int c = out_corner(ochi, other);
    int b = in_corner(ochi, other);
    int ia = s.vid[a], ib = s.vid[b], ic = s.vid[c], id = s.vid[d];
    const Fan& fa = s.fans[ia];
    const Fan& fb = s.fans[ib];
    int m1;
    std::array<int, 4> e1{};
    int sum1 = 0;
    Mask mask1 = 0;
    if (!check_pair(s, ia, fa.e, fa.sum, fa.tiles, ib, fb.e, fb.sum, fb.tiles, ia == ib, m1, e1, sum1, mask1)) {
      return false;
    }
    auto view = [&](int id_) {
      struct V {
        std::array<int, 4> e;
        int sum;
        Mask m;
        int id;
      };
      if (m1 != -2 && (id_ == ia || id_ == ib)) return V{e1, sum1, mask1, ia};
      const Fan& x = s.fans[id_];
      return V{x.e, x.sum, x.tiles, id_};
    };
    auto vc = view(ic);
    auto vd = view(id);
    int m2;
    std::array<int, 4> e2{};
    int sum2 = 0;
    Mask mask2 = 0;
    return check_pair(s, vc.id, vc.e, vc.sum, vc.m, vd.id, vd.e, vd.sum, vd.m, vc.id == vd.id, m2, e2, sum2, mask2);
  }

  // Joins the fan ending at corner a with the fan starting at corner b.
  bool join(State& s, int a, int b) {
    int ia = s.vid[a];
    int ib = s.vid[b];
    Fan& fa = s.fans[ia];
    if (ia == ib) {
      if (!close_ok(s, ia, fa.e)) return false;
      fa.closed = true;
      auto it = type_index_.find(pack(fa.e));
      int ti = it->second;
      s.closed_count[ti] += 1;
      if (use_balance_) {
        int need = s.closed_count[ti];
        std::erase_if(s.compatible, [&](int i) { return solutions_[i][ti] < need; });
        if (s.compatible.empty()) return false;
      }
      return true;
    }
    Fan& fb = s.fans[ib];
    if (fa.tiles & fb.tiles) return false;
    if (fa.sum + fb.sum > full_) return false;
    std::array<int, 4> e = add(fa.e, fb.e);
    bool seeded = is_seed_fan(s, ia) || is_seed_fan(s, ib);
    if (!sub_.count(pack(e))) return false;
    if (seeded && !target_sub_.count(pack(e))) return false;
    fa.e = e;
    fa.sum += fb.sum;
    fa.tiles |= fb.tiles;
    fa.last = fb.last;
    fb.dead = true;
    for (int t = 0; t < s.ntiles; ++t) {
      if (!(fb.tiles & bit(t))) continue;
      for (int l = 0; l < 4; ++l) {
        if (s.vid[4 * t + l] == ib) s.vid[4 * t + l] = ia;
      }
    }
    return true;
  }

  bool glue(State& s, int edge, int other) {
    int tchi = s.chi[edge / 4];
    int ochi = s.chi[other / 4];
    int a = out_corner(tchi, edge);
    int d = in_corner(tchi, edge);
    int c = out_corner(ochi, other);
    int b = in_corner(ochi, other);
    s.glue[edge] = other;
    s.glue[other] = edge;
    if (!join(s, a, b)) return false;
    return join(s, c, d);
  }

  bool apply(State& s, int edge, const Move& m) {
    if (m.new_tile) {
      int t = add_tile(s, m.chi);
      return glue(s, edge, 4 * t + m.slot);
    }
    return glue(s, edge, m.target);
  }

  void moves_for(const State& s, int fan_id, std::vector<Move>& out, std::size_t stop_above) const {
    out.clear();
    const Fan& fan = s.fans[fan_id];
    int edge = out_edge_of(s.chi[fan.last / 4], fan.last);
    bool b_edge = is_b_slot(edge % 4);
    for (int chi : {1, -1}) {
      for (int slot = 0; slot < 4; ++slot) {
        if (is_b_slot(slot) != b_edge) continue;
        if (feasible_new(s, edge, chi, slot)) {
          out.push_back({true, chi, slot, -1});
          if (out.size() > stop_above) return;
        }
      }
    }
    for (std::size_t j = 0; j < s.fans.size(); ++j) {
      const Fan& g = s.fans[j];
      if (g.closed || g.dead) continue;
      int first = g.first;
      int tchi = s.chi[first / 4];
      int p = ccw_of_label(tchi, first % 4);
      int other = 4 * (first / 4) + slot_of_ccw(tchi, (p + 3) % 4);
      if (other == edge || is_b_slot(other % 4) != b_edge) continue;
      if (feasible_glue(s, edge, other)) {
        out.push_back({false, 0, 0, other});
        if (out.size() > stop_above) return;
      }
    }
  }

  bool local_goal(const State& s, std::vector<int>& candidates) const {
    candidates.clear();
    int seed = s.vid[seed_label_];
    const Fan& sf = s.fans[seed];
    if (!sf.closed) {
      candidates.push_back(seed);
      return false;
    }
    std::set<int> open;
    for (int t = 0; t < s.ntiles; ++t) {
      if (!(sf.tiles & bit(t))) continue;
      for (int l = 0; l < 4; ++l) {
        int v = s.vid[4 * t + l];
        if (!s.fans[v].closed) open.insert(v);
      }
    }
    candidates.assign(open.begin(), open.end());
    return candidates.empty();
  }

  void dfs(State& s) {
    if (stopped_ || found_local_) return;
    ++nodes_;
    if (opts_.node_budget && nodes_ > *opts_.node_budget) {
      budget_hit_ = true;
      stopped_ = true;
      return;
    }
    std::vector<int> candidates;
    if (local_) {
      if (local_goal(s, candidates)) {
        found_local_ = true;
        return;
      }
    } else {
      for (std::size_t j = 0; j < s.fans.size(); ++j) {
        if (!s.fans[j].closed && !s.fans[j].dead) candidates.push_back(static_cast<int>(j));
      }
      if (candidates.empty()) {
        if (s.ntiles == f_) harvest(s);
        return;
      }
    }
    int best = -1;
    std::vector<Move> best_moves;
    std::vector<Move> moves;
    for (int fan : candidates) {
      std::size_t bound = best < 0 ? static_cast<std::size_t>(-1) : best_moves.size();
      moves_for(s, fan, moves, bound);
      if (best < 0 || moves.size() < best_moves.size()) {
        best = fan;
        best_moves = moves;
        if (best_moves.empty()) return;
      }
    }
    int edge = out_edge_of(s.chi[s.fans[best].last / 4], s.fans[best].last);
    for (const Move& m : best_moves) {
      State next = s;
      if (apply(next, edge, m)) dfs(next);
      if (stopped_ || found_local_) return;
    }
  }

  void harvest(const State& s) {
    ++hits_;
    CombinatorialTiling t;
    t.chirality.assign(s.chi.begin(), s.chi.end());
    t.glue.assign(f_, {});
    for (int e = 0; e < 4 * f_; ++e) t.glue[e / 4][e % 4] = {s.glue[e] / 4, s.glue[e] % 4};
    std::string key = canonical_key(t, opts_.allow_reflection);
    if (found_.emplace(key, std::move(t)).second) {
      if (opts_.limit && found_.size() >= *opts_.limit) stopped_ = true;
    }
  }

 public:
  std::map<std::string, CombinatorialTiling> found_;

 private:
  const QuadClass& q_;
  const SearchOptions& opts_;
  int f_;
  std::vector<VertexType> types_;
  std::array<int, 4> units_{};
  int full_ = 0;
  std::unordered_map<std::uint32_t, int> type_index_;
  std::unordered_set<std::uint32_t> sub_;
  std::vector<std::vector<int>> solutions_;
  bool use_balance_ = false;
  std::optional<VertexType> target_;
  std::unordered_set<std::uint32_t> target_sub_;
  int seed_label_ = 0;
  bool local_ = false;
  bool found_local_ = false;
  bool budget_hit_ = false;
  bool stopped_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t hits_ = 0;
  SearchResult* result_ = nullptr;
};

}  // namespace

SearchResult search_all_tilings(const QuadClass& q, const SearchOptions& opts) {
  if (q.f > opts.cap) {
    throw SearchCapExceeded("search refused: f=" + std::to_string(q.f) + " exceeds the cap " +
                            std::to_string(opts.cap) + " (raise it with --search-cap)");
  }
  if (q.f > kMaxTiles) throw SearchCapExceeded("search supports at most 128 tiles");
  std::vector<VertexType> types = opts.avc ? *opts.avc : enumerate_vertex_types(q.angles);
  SearchResult res;
  Searcher s(q, opts, types);
  if (opts.use_balance) {
    auto sols = solve_balance(q.f, types, {.limit = 200000});
    res.stats.balance_solutions = sols.size();
    if (sols.empty()) return res;
    s.set_balance(std::move(sols));
  }
  s.run_all(res);
  res.stats.nodes = s.nodes();
  res.stats.complete_hits = s.hits();
  res.complete = !s.stopped();
  for (auto& [k, t] : s.found_) {
    res.keys.push_back(k);
    res.tilings.push_back(std::move(t));
  }
  return res;
}

bool vertex_type_feasible(const QuadClass& q, const std::vector<VertexType>& avc, const VertexType& type,
                          std::uint64_t node_budget) {
  if (q.f > kMaxTiles) return true;
  SearchOptions opts;
  opts.node_budget = node_budget;
  Searcher s(q, opts, avc);
  auto sols = solve_balance(q.f, avc, {.limit = 200000});
  if (sols.empty()) return false;
  s.set_balance(std::move(sols));
  int label = 0;
  while (label < 4 && type.e[label] == 0) ++label;
  if (label == 4) return false;
  s.set_target(type, label);
  return s.run_local();
}

RefinedTypes refine_vertex_types(const QuadClass& q, const std::vector<VertexType>& types, std::uint64_t node_budget) {
  RefinedTypes r;
  r.kept = types;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < r.kept.size(); ++i) {
      if (!vertex_type_feasible(q, r.kept, r.kept[i], node_budget)) {
        r.removed.push_back(r.kept[i]);
        r.kept.erase(r.kept.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return r;
}

}  // namespace a3b
