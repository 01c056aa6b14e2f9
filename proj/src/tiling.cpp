#include "a3b/tiling.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace a3b {

int CombinatorialTiling::add_tile(int chi) {
  chirality.push_back(chi > 0 ? 1 : -1);
  glue.push_back({});
  return f() - 1;
}

void CombinatorialTiling::connect(EdgeRef x, EdgeRef y) {
  glue[x.tile][x.slot] = y;
  glue[y.tile][y.slot] = x;
}

CornerRef next_corner(const CombinatorialTiling& t, CornerRef c) {
  int chi = t.chirality[c.tile];
  int p = ccw_of_label(chi, c.label);
  EdgeRef e = t.glue[c.tile][slot_of_ccw(chi, p)];
  int chi2 = t.chirality[e.tile];
  int p2 = ccw_of_slot(chi2, e.slot);
  return {e.tile, label_of_ccw(chi2, (p2 + 1) % 4)};
}

std::vector<std::vector<CornerRef>> CombinatorialTiling::vertices() const {
  std::vector<std::vector<CornerRef>> out;
  std::vector<std::array<bool, 4>> seen(f(), {false, false, false, false});
  for (int t = 0; t < f(); ++t) {
    for (int l = 0; l < 4; ++l) {
      if (seen[t][l]) continue;
      std::vector<CornerRef> v;
      CornerRef c{t, l};
      while (!seen[c.tile][c.label]) {
        seen[c.tile][c.label] = true;
        v.push_back(c);
        c = next_corner(*this, c);
        if (static_cast<int>(v.size()) > 4 * f()) break;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

Census CombinatorialTiling::census() const {
  std::map<VertexType, int> m;
  for (const auto& v : vertices()) {
    VertexType vt;
    for (const auto& c : v) vt.e[c.label] += 1;
    m[vt] += 1;
  }
  Census c(m.begin(), m.end());
  return census_to_solution(c).multiplicities;
}

CombinatorialTiling CombinatorialTiling::mirrored() const {
  CombinatorialTiling m = *this;
  for (auto& c : m.chirality) c = -c;
  return m;
}

std::string census_str(const Census& c) { return census_to_solution(c).str(); }

std::vector<std::string> validate(const CombinatorialTiling& t, const QuadClass* q) {
  std::vector<std::string> out;
  const int f = t.f();
  if (f == 0) return {"empty tiling"};
  if (static_cast<int>(t.glue.size()) != f) return {"glue table size differs from tile count"};
  if (q && q->f != f) out.push_back("tile count " + std::to_string(f) + " differs from quad f=" + std::to_string(q->f));
  for (int i = 0; i < f; ++i) {
    if (t.chirality[i] != 1 && t.chirality[i] != -1) out.push_back("tile " + std::to_string(i) + ": bad chirality");
    for (int s = 0; s < 4; ++s) {
      EdgeRef e = t.glue[i][s];
      std::string where = "tile " + std::to_string(i) + " slot " + std::to_string(s);
      if (e.tile < 0 || e.tile >= f || e.slot < 0 || e.slot > 3) {
        out.push_back(where + ": unglued");
        continue;
      }
      if (e.tile == i && e.slot == s) out.push_back(where + ": glued to itself");
      EdgeRef back = t.glue[e.tile][e.slot];
      if (back.tile != i || back.slot != s) out.push_back(where + ": gluing is not an involution");
      if (is_b_slot(s) != is_b_slot(e.slot)) out.push_back(where + ": a-edge glued to b-edge");
    }
  }
  if (!out.empty()) return out;

  std::vector<bool> reached(f, false);
  std::queue<int> bfs;
  bfs.push(0);
  reached[0] = true;
  while (!bfs.empty()) {
    int i = bfs.front();
    bfs.pop();
    for (int s = 0; s < 4; ++s) {
      int j = t.glue[i][s].tile;
      if (!reached[j]) {
        reached[j] = true;
        bfs.push(j);
      }
    }
  }
  if (std::count(reached.begin(), reached.end(), false) > 0) out.push_back("not connected");

  auto verts = t.vertices();
  if (static_cast<int>(verts.size()) != f + 2) {
    out.push_back("vertex count " + std::to_string(verts.size()) + " != f+2 = " + std::to_string(f + 2));
  }
  std::vector<VertexType> allowed;
  if (q) allowed = enumerate_vertex_types(q->angles);
  for (std::size_t vi = 0; vi < verts.size(); ++vi) {
    VertexType vt;
    for (const auto& c : verts[vi]) vt.e[c.label] += 1;
    std::string where = "vertex " + std::to_string(vi) + " (" + vt.str() + ")";
    if (vt.degree() < 3) out.push_back(where + ": degree below 3");
    if ((vt.e[kAlpha] + vt.e[kDelta]) % 2 != 0) out.push_back(where + ": odd alpha+delta count");
    if (q) {
      if (vt.sum(q->angles) != Rat(2)) out.push_back(where + ": angle sum " + vt.sum(q->angles).str() + " != 2");
      else if (!std::binary_search(allowed.begin(), allowed.end(), vt, std::greater<>())) {
        out.push_back(where + ": not an admissible vertex type");
      }
    }
  }
  if (q && out.empty()) {
    BalanceSolution s = census_to_solution(t.census());
    auto counts = s.angle_counts();
    for (int a = 0; a < 4; ++a) {
      if (counts[a] != f) out.push_back("census uses angle " + std::to_string(a) + " " + std::to_string(counts[a]) + " times");
    }
    if (s.vertex_count() != f + 2) out.push_back("census has " + std::to_string(s.vertex_count()) + " vertices");
  }
  return out;
}

namespace {

std::vector<int> bfs_code(const CombinatorialTiling& t, int root) {
  const int f = t.f();
  std::vector<int> number(f, -1);
  std::vector<int> order;
  order.reserve(f);
  number[root] = 0;
  order.push_back(root);
  std::vector<int> code;
  code.reserve(f * 9);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int i = order[head];
    code.push_back(t.chirality[i]);
    for (int s = 0; s < 4; ++s) {
      EdgeRef e = t.glue[i][s];
      if (number[e.tile] < 0) {
        number[e.tile] = static_cast<int>(order.size());
        order.push_back(e.tile);
      }
      code.push_back(number[e.tile]);
      code.push_back(e.slot);
    }
  }
  return code;
}

}  // namespace

std::string canonical_key(const CombinatorialTiling& t, bool allow_reflection) {
  std::vector<int> best;
  auto consider = [&](const CombinatorialTiling& x) {
    for (int r = 0; r < x.f(); ++r) {
      auto code = bfs_code(x, r);
      if (best.empty() || code < best) best = std::move(code);
    }
  };
  consider(t);
  if (allow_reflection) consider(t.mirrored());
  std::string key;
  key.reserve(best.size() * 2);
  for (int v : best) {
    int u = v + 2;
    key.push_back(static_cast<char>(u & 0xff));
    key.push_back(static_cast<char>((u >> 8) & 0xff));
  }
  return key;
}

CombinatorialTiling relabel_tiles(const CombinatorialTiling& t, const std::vector<int>& perm) {
  CombinatorialTiling out;
  out.chirality.assign(t.f(), 1);
  out.glue.assign(t.f(), {});
  for (int i = 0; i < t.f(); ++i) {
    out.chirality[perm[i]] = t.chirality[i];
    for (int s = 0; s < 4; ++s) out.glue[perm[i]][s] = {perm[t.glue[i][s].tile], t.glue[i][s].slot};
  }
  return out;
}

nlohmann::ordered_json tiling_to_json(const CombinatorialTiling& t, const QuadClass& q) {
  nlohmann::ordered_json j;
  j["f"] = t.f();
  j["quad"] = to_json(q);
  auto tiles = nlohmann::ordered_json::array();
  for (int c : t.chirality) tiles.push_back(nlohmann::ordered_json{{"chirality", c}});
  j["tiles"] = tiles;
  auto gl = nlohmann::ordered_json::array();
  for (int i = 0; i < t.f(); ++i) {
    for (int s = 0; s < 4; ++s) {
      EdgeRef e = t.glue[i][s];
      if (EdgeRef{i, s} < e) gl.push_back({i, s, e.tile, e.slot});
    }
  }
  j["gluings"] = gl;
  j["census"] = census_str(t.census());
  return j;
}

CombinatorialTiling tiling_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& path, const std::string& msg) {
    throw std::invalid_argument(path + ": " + msg);
  };
  if (!j.is_object()) fail("$", "expected an object");
  if (!j.contains("tiles") || !j["tiles"].is_array()) fail("$.tiles", "missing or not an array");
  if (!j.contains("gluings") || !j["gluings"].is_array()) fail("$.gluings", "missing or not an array");
  CombinatorialTiling t;
  const auto& tiles = j["tiles"];
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    std::string path = "$.tiles[" + std::to_string(i) + "]";
    if (!tiles[i].is_object() || !tiles[i].contains("chirality") || !tiles[i]["chirality"].is_number_integer()) {
      fail(path, "expected {\"chirality\": +1|-1}");
    }
    int c = tiles[i]["chirality"].get<int>();
    if (c != 1 && c != -1) fail(path + ".chirality", "must be 1 or -1");
    t.add_tile(c);
  }
  if (j.contains("f") && (!j["f"].is_number_integer() || j["f"].get<int>() != t.f())) {
    fail("$.f", "does not match the number of tiles");
  }
  const auto& gl = j["gluings"];
  for (std::size_t g = 0; g < gl.size(); ++g) {
    std::string path = "$.gluings[" + std::to_string(g) + "]";
    if (!gl[g].is_array() || gl[g].size() != 4) fail(path, "expected [tile, slot, tile, slot]");
    std::array<int, 4> v{};
    for (int k = 0; k < 4; ++k) {
      if (!gl[g][k].is_number_integer()) fail(path + "[" + std::to_string(k) + "]", "not an integer");
      v[k] = gl[g][k].get<int>();
    }
    for (int k : {0, 2}) {
      if (v[k] < 0 || v[k] >= t.f()) fail(path, "tile index out of range");
      if (v[k + 1] < 0 || v[k + 1] > 3) fail(path, "slot out of range");
    }
    if (t.glue[v[0]][v[1]].tile >= 0 || t.glue[v[2]][v[3]].tile >= 0) fail(path, "slot glued twice");
    t.connect({v[0], v[1]}, {v[2], v[3]});
  }
  return t;
}

}  // namespace a3b
