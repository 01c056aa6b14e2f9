#include "a3b/builders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace a3b {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

void require_earth_map(const QuadClass& q) {
  if (q.f % 2 != 0 || q.f < 6) throw ConstructionError("earth map needs an even f >= 6");
  if (!has_earth_map_vertices(q.angles, q.f)) {
    throw ConstructionError("earth map needs alpha+beta+delta = 2 and gamma = 4/f for " + q.id());
  }
}

struct Patch {
  std::vector<int> tiles;
  std::vector<EdgeRef> boundary;  // counterclockwise
};

// m consecutive timezones starting at `start`, as a hexagon with 6 a-edges.
Patch timezone_patch(const CombinatorialTiling& t, int start, int m) {
  const int n = t.f() / 2;
  if (m < 1 || m > n) throw ConstructionError("patch width " + std::to_string(m) + " out of range");
  auto N = [&](int i) { return mod(i, n); };
  auto S = [&](int i) { return n + mod(i, n); };
  Patch p;
  for (int j = 0; j < m; ++j) {
    p.tiles.push_back(N(start + j));
    p.tiles.push_back(S(start + j));
  }
  auto expect = [&](EdgeRef x, EdgeRef y) {
    if (t.partner(x) != y) {
      throw ConstructionError("timezone " + std::to_string(start) + " does not carry an intact " +
                              std::to_string(m) + "-timezone hexagon");
    }
  };
  for (int j = 0; j < m; ++j) {
    expect({N(start + j), 3}, {S(start + j), 3});
    if (j + 1 < m) {
      expect({N(start + j), 2}, {N(start + j + 1), 1});
      expect({S(start + j), 1}, {S(start + j + 1), 2});
      expect({N(start + j + 1), 0}, {S(start + j), 0});
    }
  }
  p.boundary = std::vector<EdgeRef>{EdgeRef{N(start), 1}, EdgeRef{N(start), 0}, EdgeRef{S(start), 2},
                EdgeRef{S(start + m - 1), 1}, EdgeRef{S(start + m - 1), 0}, EdgeRef{N(start + m - 1), 2}};
  std::set<int> inside(p.tiles.begin(), p.tiles.end());
  for (const auto& e : p.boundary) {
    if (inside.count(t.partner(e).tile)) {
      throw ConstructionError("hexagon at timezone " + std::to_string(start) + " wraps onto itself");
    }
  }
  return p;
}

// A simply bounded patch given by its tiles; the boundary walk starts at the
// first free slot of the largest tile.
Patch tile_patch(const CombinatorialTiling& t, std::set<int> tiles) {
  Patch p;
  p.tiles.assign(tiles.begin(), tiles.end());
  EdgeRef start;
  std::size_t free_slots = 0;
  for (int tile : p.tiles) {  // ascending, so the last tile with a free slot wins
    for (int s = 0; s < 4; ++s) {
      if (tiles.count(t.glue[tile][s].tile)) continue;
      if (start.tile != tile) start = {tile, s};
      ++free_slots;
    }
  }
  if (start.tile < 0) throw ConstructionError("patch has no boundary");
  EdgeRef e = start;
  do {
    p.boundary.push_back(e);
    int chi = t.chirality[e.tile];
    EdgeRef c{e.tile, slot_of_ccw(chi, (ccw_of_slot(chi, e.slot) + 1) % 4)};
    while (tiles.count(t.partner(c).tile)) {
      EdgeRef o = t.partner(c);
      int chi2 = t.chirality[o.tile];
      c = {o.tile, slot_of_ccw(chi2, (ccw_of_slot(chi2, o.slot) + 1) % 4)};
    }
    e = c;
  } while (e != start && p.boundary.size() <= free_slots);
  if (p.boundary.size() != free_slots) throw ConstructionError("patch boundary is not a single cycle");
  return p;
}

// Re-glues a patch: with reflect, the outside edge formerly at boundary
// position j meets position (c - j) and the patch tiles change chirality;
// otherwise it meets position (j + c).
CombinatorialTiling reglue(const CombinatorialTiling& t, const Patch& p, int c, bool reflect) {
  CombinatorialTiling out = t;
  const int len = static_cast<int>(p.boundary.size());
  std::vector<EdgeRef> outside(len);
  for (int j = 0; j < len; ++j) outside[j] = t.partner(p.boundary[j]);
  if (reflect) {
    for (int tile : p.tiles) out.chirality[tile] = -out.chirality[tile];
  }
  for (int j = 0; j < len; ++j) {
    int k = reflect ? mod(c - j, len) : mod(j + c, len);
    if (is_b_slot(p.boundary[k].slot) != is_b_slot(outside[j].slot)) {
      throw ConstructionError("re-gluing would join an a-edge to a b-edge");
    }
    out.connect(outside[j], p.boundary[k]);
  }
  return out;
}

void check_width(const QuadClass& q, FlipKind kind, int m) {
  if (4 * m > q.f) throw ConstructionError("flip width " + std::to_string(m) + " exceeds f/4");
  if (kind == FlipKind::first && q.beta() >= Rat(1)) throw ConstructionError("first flip needs beta < 1");
  if (kind == FlipKind::second && m < 2) throw ConstructionError("second flip needs alpha+delta >= 2 gamma");
}

}  // namespace

CombinatorialTiling build_earth_map(const QuadClass& q) {
  require_earth_map(q);
  const int n = q.f / 2;
  CombinatorialTiling t;
  for (int i = 0; i < 2 * n; ++i) t.add_tile(1);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    t.connect({i, 2}, {j, 1});
    t.connect({i, 3}, {n + i, 3});
    t.connect({j, 0}, {n + i, 0});
    t.connect({n + i, 1}, {n + j, 2});
  }
  return t;
}

std::optional<int> flip_width(const QuadClass& q, FlipKind kind) {
  Rat x = kind == FlipKind::first ? q.beta() : q.alpha() + q.delta();
  Rat m = x / q.gamma();
  if (!m.is_integer() || m.sign() <= 0) return std::nullopt;
  int w = static_cast<int>(m.num());
  if (4 * w > q.f) return std::nullopt;
  if (kind == FlipKind::first && q.beta() >= Rat(1)) return std::nullopt;
  // the new beta gamma^m vertex needs degree 3
  if (kind == FlipKind::second && w < 2) return std::nullopt;
  return w;
}

CombinatorialTiling apply_flip(const CombinatorialTiling& t, const QuadClass& q, const Flip& flip) {
  require_earth_map(q);
  if (t.f() != q.f) throw ConstructionError("tiling and quad disagree on f");
  Rat x = flip.kind == FlipKind::first ? q.beta() : q.alpha() + q.delta();
  Rat m = x / q.gamma();
  if (!m.is_integer() || m.sign() <= 0) {
    throw ConstructionError(std::string(flip.kind == FlipKind::first ? "beta" : "alpha+delta") +
                            " is not an integer multiple of gamma");
  }
  int w = static_cast<int>(m.num());
  check_width(q, flip.kind, w);
  Patch p = timezone_patch(t, mod(flip.position, q.f / 2), w);
  return reglue(t, p, flip.kind == FlipKind::first ? 3 : 1, true);
}

CombinatorialTiling flip_first(const CombinatorialTiling& t, const QuadClass& q, int start_timezone) {
  return apply_flip(t, q, {FlipKind::first, start_timezone});
}

CombinatorialTiling flip_second(const CombinatorialTiling& t, const QuadClass& q, int start_timezone) {
  return apply_flip(t, q, {FlipKind::second, start_timezone});
}

CombinatorialTiling apply_flip_schedule(const QuadClass& q, const std::vector<Flip>& schedule) {
  CombinatorialTiling t = build_earth_map(q);
  const int n = q.f / 2;
  std::vector<bool> used(n, false);
  for (const auto& fl : schedule) {
    auto w = flip_width(q, fl.kind);
    if (!w) throw ConstructionError("flip kind not available for " + q.id());
    for (int j = 0; j < *w; ++j) {
      int z = mod(fl.position + j, n);
      if (used[z]) throw ConstructionError("flips overlap at timezone " + std::to_string(z));
      used[z] = true;
    }
  }
  for (const auto& fl : schedule) t = apply_flip(t, q, fl);
  return t;
}

CombinatorialTiling build_threefold_special(const QuadClass& q, int rotation) {
  if (rotation < 0 || rotation > 2) throw ConstructionError("rotation must be 0, 1 or 2");
  if (q.angles != family_angles(2, q.f) || q.f % 6 != 4) {
    throw ConstructionError("threefold special tilings need the second family with f = 6k+4");
  }
  const int n = q.f / 2;
  const int k = (q.f - 4) / 6;
  CombinatorialTiling t = apply_flip_schedule(q, {{FlipKind::second, 0}, {FlipKind::second, k + 1}});
  // The k unflipped timezones together with N_0 and S_{2k+1} bound a hexagon.
  std::set<int> hex{0, n + 2 * k + 1};
  for (int z = 2 * k + 2; z < n; ++z) {
    hex.insert(z);
    hex.insert(n + z);
  }
  t = reglue(t, tile_patch(t, hex), 2, true);
  if (rotation > 0) t = reglue(t, tile_patch(t, {0, n}), 2 * rotation, false);
  if (!validate(t, q).empty()) throw ConstructionError("threefold special construction failed for " + q.id());
  return t;
}

std::vector<CombinatorialTiling> constructive_tilings(const QuadClass& q, bool allow_reflection) {
  std::map<std::string, CombinatorialTiling> found;
  auto add = [&](const CombinatorialTiling& t) { found.emplace(canonical_key(t, allow_reflection), t); };
  if (q.f % 2 == 0 && has_earth_map_vertices(q.angles, q.f)) {
    const int n = q.f / 2;
    std::vector<std::pair<FlipKind, int>> kinds;
    for (auto k : {FlipKind::first, FlipKind::second}) {
      if (auto w = flip_width(q, k)) kinds.emplace_back(k, *w);
    }
    std::vector<Flip> schedule;
    std::vector<bool> used(n, false);
    std::size_t budget = 200000;
    std::function<void(int)> rec = [&](int pos) {
      if (budget == 0) return;
      if (pos == n) {
        --budget;
        add(apply_flip_schedule(q, schedule));
        return;
      }
      rec(pos + 1);
      for (const auto& [k, w] : kinds) {
        bool free = true;
        for (int j = 0; j < w && free; ++j) free = !used[(pos + j) % n];
        if (!free) continue;
        for (int j = 0; j < w; ++j) used[(pos + j) % n] = true;
        schedule.push_back({k, pos});
        rec(pos + 1);
        schedule.pop_back();
        for (int j = 0; j < w; ++j) used[(pos + j) % n] = false;
      }
    };
    rec(0);
  }
  if (q.f % 6 == 4 && q.f >= 10 && q.angles == family_angles(2, q.f)) {
    for (int r = 0; r < 3; ++r) {
      try {
        add(build_threefold_special(q, r));
      } catch (const ConstructionError&) {
      }
    }
  }
  for (const auto& name : exceptional_names()) {
    try {
      auto ex = build_exceptional(name);
      if (ex.quad.angles == q.angles) add(ex.tiling);
    } catch (const ConstructionError&) {
    }
  }
  std::vector<CombinatorialTiling> out;
  for (auto& [k, t] : found) out.push_back(std::move(t));
  return out;
}

}  // namespace a3b
