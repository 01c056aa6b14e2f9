#include "a3b/geometry.hpp"

#include <boost/math/constants/constants.hpp>

#include <deque>
#include <fstream>
#include <functional>
#include <sstream>

namespace a3b {

Vec3 operator+(const Vec3& u, const Vec3& v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
Vec3 operator-(const Vec3& u, const Vec3& v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
Vec3 operator*(const Real& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
Real dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }
Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}
Real norm(const Vec3& v) { return boost::multiprecision::sqrt(dot(v, v)); }

namespace {

const Real& pi() {
  static const Real p = boost::math::constants::pi<Real>();
  return p;
}

Vec3 normalized(const Vec3& v) { return (Real(1) / norm(v)) * v; }

// Rotation as three columns.
struct Mat3 {
  std::array<Vec3, 3> col;
  Vec3 apply(const Vec3& v) const { return v.x * col[0] + v.y * col[1] + v.z * col[2]; }
};

// Orthonormal frame (p, t, p x t) written as rows of the inverse.
Mat3 align(const Vec3& p_from, const Vec3& t_from, const Vec3& p_to, const Vec3& t_to) {
  Vec3 n_from = cross(p_from, t_from);
  Vec3 n_to = cross(p_to, t_to);
  // R = [p_to t_to n_to] * [p_from t_from n_from]^T
  Mat3 r;
  const std::array<Vec3, 3> from = {p_from, t_from, n_from};
  const std::array<Vec3, 3> to = {p_to, t_to, n_to};
  for (int j = 0; j < 3; ++j) {
    Vec3 c;
    for (int k = 0; k < 3; ++k) {
      Real w = j == 0 ? from[k].x : (j == 1 ? from[k].y : from[k].z);
      c = c + w * to[k];
    }
    r.col[j] = c;
  }
  return r;
}

TilePlacement transform(const Mat3& r, const TilePlacement& tp) {
  TilePlacement out;
  for (int c = 0; c < 4; ++c) {
    out.corner[c] = r.apply(tp.corner[c]);
    out.out_tangent[c] = r.apply(tp.out_tangent[c]);
    out.in_tangent[c] = r.apply(tp.in_tangent[c]);
  }
  return out;
}

// Walks the boundary alpha, beta, gamma, delta counterclockwise, turning left
// by pi - angle at each corner.
TilePlacement template_tile(const QuadClass& q, int chirality, const Real& tol) {
  const std::array<Real, 4> len = {q.a, q.a, q.a, q.b};
  TilePlacement tp;
  Vec3 p{0, 0, 1};
  Vec3 h{1, 0, 0};
  for (int c = 0; c < 4; ++c) {
    tp.corner[c] = p;
    tp.out_tangent[c] = h;
    Real s = len[c] * pi();
    Vec3 np = boost::multiprecision::cos(s) * p + boost::multiprecision::sin(s) * h;
    Vec3 nh = boost::multiprecision::cos(s) * h - boost::multiprecision::sin(s) * p;
    p = normalized(np);
    h = normalized(nh);
    int next = (c + 1) % 4;
    tp.in_tangent[next] = Real(-1) * h;
    Real turn = (Real(1) - q.angles[next].to_real()) * pi();
    h = normalized(boost::multiprecision::cos(turn) * h + boost::multiprecision::sin(turn) * cross(p, h));
  }
  Real gap = norm(p - tp.corner[0]) + norm(h - tp.out_tangent[0]);
  if (gap > tol) {
    throw RealizationError("the quad " + q.id() + " does not close: offset " + real_str(gap), gap);
  }
  if (chirality < 0) {
    for (auto* arr : {&tp.corner, &tp.out_tangent, &tp.in_tangent}) {
      for (auto& v : *arr) v.z = -v.z;
    }
  }
  return tp;
}

// Tangent of tile placement tp at corner `at` along the edge of slot `slot`.
const Vec3& tangent_at(const TilePlacement& tp, int slot, int at) {
  return at == slot ? tp.out_tangent[at] : tp.in_tangent[at];
}

}  // namespace

Real arc_length(const Vec3& u, const Vec3& v) {
  return boost::multiprecision::atan2(norm(cross(u, v)), dot(u, v)) / pi();
}

SphericalPlacement realize(const CombinatorialTiling& t, const QuadClass& q, const Real& tol) {
  auto problems = validate(t);
  if (!problems.empty()) throw RealizationError("invalid tiling: " + problems.front(), Real(0));
  if (t.f() != q.f) throw RealizationError("tiling has " + std::to_string(t.f()) + " tiles, quad needs " +
                                           std::to_string(q.f), Real(0));
  SphericalPlacement out;
  out.a = q.a;
  out.b = q.b;
  const std::array<TilePlacement, 2> tmpl = {template_tile(q, -1, tol), template_tile(q, 1, tol)};
  auto tmpl_of = [&](int tile) -> const TilePlacement& { return tmpl[t.chirality[tile] > 0 ? 1 : 0]; };

  out.vertex_corners = t.vertices();
  std::vector<std::array<int, 4>> vertex_of(t.f());
  for (std::size_t v = 0; v < out.vertex_corners.size(); ++v) {
    for (const auto& c : out.vertex_corners[v]) vertex_of[c.tile][c.label] = static_cast<int>(v);
  }

  out.tiles.assign(t.f(), {});
  std::vector<bool> placed(t.f(), false);
  out.tiles[0] = tmpl_of(0);
  placed[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int tile = queue.front();
    queue.pop_front();
    for (int s = 0; s < 4; ++s) {
      EdgeRef o = t.partner({tile, s});
      if (placed[o.tile]) continue;
      const TilePlacement& here = out.tiles[tile];
      // corner s of this tile meets corner o.slot or o.slot+1 of the other
      int at = vertex_of[o.tile][o.slot] == vertex_of[tile][s] ? o.slot : (o.slot + 1) % 4;
      const TilePlacement& tp = tmpl_of(o.tile);
      Mat3 r = align(tp.corner[at], tangent_at(tp, o.slot, at), here.corner[s], here.out_tangent[s]);
      out.tiles[o.tile] = transform(r, tp);
      placed[o.tile] = true;
      queue.push_back(o.tile);
    }
  }

  Real worst = 0;
  std::string where;
  auto note = [&](const Real& d, const std::string& what) {
    if (d > worst) {
      worst = d;
      where = what;
    }
  };
  for (std::size_t v = 0; v < out.vertex_corners.size(); ++v) {
    const auto& cs = out.vertex_corners[v];
    Vec3 sum;
    const Vec3& first = out.tiles[cs[0].tile].corner[cs[0].label];
    for (const auto& c : cs) {
      const Vec3& x = out.tiles[c.tile].corner[c.label];
      sum = sum + x;
      note(norm(x - first), "vertex " + std::to_string(v));
    }
    out.vertices.push_back(normalized(sum));
  }
  for (int tile = 0; tile < t.f(); ++tile) {
    for (int s = 0; s < 4; ++s) {
      EdgeRef o = t.partner({tile, s});
      int at = vertex_of[o.tile][o.slot] == vertex_of[tile][s] ? o.slot : (o.slot + 1) % 4;
      const Vec3& mine = out.tiles[tile].out_tangent[s];
      const Vec3& theirs = tangent_at(out.tiles[o.tile], o.slot, at);
      note(norm(mine - theirs), "edge " + std::to_string(tile) + "." + std::to_string(s));
    }
  }
  out.closure = worst;
  if (worst > tol) {
    throw RealizationError("closure violated at " + where + ": offset " + real_str(worst), worst);
  }
  return out;
}

Real tile_area(const SphericalPlacement& p, int tile) {
  const TilePlacement& tp = p.tiles.at(tile);
  const std::array<Real, 4> len = {p.a, p.a, p.a, p.b};
  // Edge midpoints keep every triangle of the fan away from antipodal pairs.
  std::vector<Vec3> ring;
  for (int c = 0; c < 4; ++c) {
    Real h = len[c] * pi() / 2;
    ring.push_back(tp.corner[c]);
    ring.push_back(boost::multiprecision::cos(h) * tp.corner[c] + boost::multiprecision::sin(h) * tp.out_tangent[c]);
  }
  Vec3 apex = ring.back();
  Real area = 0;
  for (std::size_t i = 0; i + 2 < ring.size(); ++i) {
    const Vec3& u = ring[i];
    const Vec3& v = ring[i + 1];
    area += 2 * boost::multiprecision::atan2(dot(apex, cross(u, v)),
                                             1 + dot(apex, u) + dot(u, v) + dot(v, apex));
  }
  return boost::multiprecision::abs(area);
}

namespace {

Real S(const Real& x) { return boost::multiprecision::sin(x * pi()); }
Real C(const Real& x) { return boost::multiprecision::cos(x * pi()); }
Real Cot(const Real& x) { return C(x) / S(x); }
Real Acos(const Real& x) { return boost::multiprecision::acos(x) / pi(); }
Real Asin(const Real& x) { return boost::multiprecision::asin(x) / pi(); }
Real Sqrt(const Real& x) { return boost::multiprecision::sqrt(x); }
Real R(long long n, long long d = 1) { return Real(n) / Real(d); }

struct ClosedRow {
  const char* quad;
  std::function<Real()> a, b;
  const char* ref_a;
  const char* ref_b;
};

std::vector<ClosedRow> sporadic_rows() {
  const Real s3 = Sqrt(R(3));
  const Real s5 = Sqrt(R(5));
  const Real w = Sqrt(10 - 2 * s5);
  auto a15 = [=] { return Acos((2 * S(R(1, 15)) - s3 * C(R(7, 15))) / S(R(7, 15))); };
  auto a30 = [=] { return Acos((s3 * C(R(11, 30)) - 2 * S(R(1, 10))) / S(R(11, 30))); };
  auto a9 = [=] { return Acos(4 * s3 * S(R(2, 9)) / 3 - 1); };
  auto c9 = [=] { return Acos((s3 * Cot(R(2, 9)) - Cot(R(2, 9)) * S(R(1, 9))) / (1 + C(R(1, 9)))); };
  auto d30 = [=] {
    return Acos((Cot(R(1, 10)) - 2 * Cot(R(1, 10)) * C(R(7, 30)) * S(R(1, 5))) / (2 * S(R(1, 5)) * S(R(7, 30))));
  };
  auto e30 = [=] {
    return Acos((30 + 2 * s5 - s3 * (5 + s5) * w) / (2 - 10 * s5 + 3 * s3 * (s5 + 1) * w));
  };
  return {
      {"(6,3,4,3)/6", [] { return R(1, 2); }, [] { return R(1, 6); }, nullptr, nullptr},
      {"(1,8,4,3)/6", [] { return Acos(R(1, 3)); }, [] { return R(1); }, "0.3918", nullptr},
      {"(12,4,6,2)/9", [] { return 1 - Asin(Sqrt(R(2)) / (Sqrt(C(R(2, 9))) * (2 - 2 * C(R(4, 9))))); }, c9,
       "0.5673", "0.1741"},
      {"(2,10,3,6)/9", a9, [=] { return Acos((8 * C(R(1, 9)) - 4 * s3 * S(R(4, 9)) - 1) / 3); }, "0.3390",
       "0.5324"},
      {"(1,21,5,8)/15", a15,
       [=] {
         return Acos((51 - 90 * s3 * S(R(2, 5)) - 96 * s3 * S(R(7, 15)) + 88 * C(R(2, 15)) + 184 * C(R(1, 15))) /
                     (1 + 6 * C(R(7, 15)) - 2 * C(R(2, 15)) + 6 * C(R(2, 5)) + 2 * C(R(1, 5))));
       },
       "0.4241", "0.7413"},
      {"(4,9,5,17)/15", a15,
       [=] { return Acos((-3 + 9 * s5 - 5 * s3 * w) / (-9 - 9 * s5 + s3 * (s5 + 4) * w)); }, "0.4241", "0.1654"},
      {"(9,28,10,23)/30", d30, e30, "0.3353", "0.4159"},
      {"(3,16,10,41)/30", a30,
       [=] {
         return Acos((-28 + 60 * s3 * S(R(7, 15)) + 61 * s3 * S(R(4, 15)) + 61 * s3 * S(R(1, 15)) -
                      61 * C(R(2, 15)) - 120 * C(R(1, 15))) /
                     (C(R(2, 5)) + 3 * C(R(2, 15))));
       },
       "0.4698", "0.1461"},
      {"(5,32,6,23)/30", d30, e30, "0.3353", "0.4159"},
      {"(1,16,6,43)/30", a30,
       [=] {
         return Acos((-7 * s3 + 22 * s3 * C(R(1, 15)) - 24 * s3 * C(R(2, 15)) + 32 * S(R(7, 15)) - 18 * S(R(2, 5))) /
                     (21 * s3 - 66 * s3 * C(R(1, 15)) + 80 * s3 * C(R(2, 15)) - 104 * S(R(7, 15)) +
                      58 * S(R(2, 5))));
       },
       "0.4698", "0.2730"},
      {"(1,42,4,17)/30", a15,
       [=] {
         return Acos((s3 * (9 * s5 + 29) * w - 58 * s5 - 70) / ((15 * s5 + 27) * s3 * w - 46 * s5 - 146));
       },
       "0.4241", "0.5493"},
      {"(3,20,4,13)/18", a9,
       [=] { return Acos((C(R(1, 9)) - 1) / (2 * s3 * S(R(4, 9)) - 3 * C(R(1, 9)) - 1)); }, "0.3390", "0.4527"},
      {"(1,4,2,2)/4", [] { return R(1, 4); }, [] { return R(1, 2); }, nullptr, nullptr},
      {"(5,4,7,3)/9", c9,
       [=] {
         return Acos((68 * s3 + 47 * s3 * C(R(1, 9)) + 162 * S(R(2, 9)) + 162 * S(R(1, 9))) /
                     (99 * s3 + 69 * s3 * C(R(1, 9)) + 234 * S(R(2, 9)) + 234 * S(R(1, 9))));
       },
       "0.1741", "0.2584"},
      {"(15,6,10,7)/18", [] { return Acos(4 * C(R(1, 9)) - 3); },
       [=] { return Acos(28 * s3 * S(R(4, 9)) - 36 * C(R(1, 9)) - 13); }, "0.2258", "0.1183"},
  };
}

std::pair<Real, Real> family_closed_form(int family, int f) {
  const Real s3 = Sqrt(R(3));
  const Real F(f);
  if (family == 1) {
    Real x = 4 / F;
    Real a = Acos(C(x) * (1 - C(x)) / (S(x) * S(x)));
    return {a, 1 - 2 * a};
  }
  if (family == 2) {
    Real p = 4 / (3 * F), q = 8 / (3 * F), r = 2 / (3 * F), u = 2 / F;
    Real a = Acos((s3 * S(q) - s3 * S(p) - C(p) - C(q) + 2) / (s3 * S(q) + s3 * S(p) + C(p) - C(q)));
    Real b = Acos((s3 * S(r) + 4 * C(u) - C(r)) / (s3 * S(r) + 3 * C(r))) +
             Acos(s3 * (C(u) - C(r) + s3 * S(r)) / (3 * S(u)));
    return {a, b};
  }
  Real r = 2 / (3 * F), u = 2 / F, v = 4 / F, m = (F + 4) / (6 * F);
  Real a = Acos((s3 * S(r) * C(u) + C(r) * C(u) - 1) / (S(u) * (s3 * C(r) - S(r))));
  Real phi = Acos((S(u) - S(m) * S(v)) / Sqrt(-2 * S(v) * S(u) * S(m) - C(u) * C(u) - C(v) * C(v) + 2));
  // phi in units of pi from here on
  Real b = Asin(S(a) * S(phi + R(2, 3) - 4 / (3 * F)) / S(phi + R(4, 3) - 2 / (3 * F)));
  return {a, b};
}

Real reference_dev(const Real& x, const std::string& reference) {
  return boost::multiprecision::abs(x - (Real(reference) + Real("5e-5")));
}

}  // namespace

EdgeReport verify_edge_lengths(int limit_f) {
  EdgeReport rep;
  rep.limit_f = limit_f;
  auto add = [&](const std::string& quad, char edge, const Real& computed, const std::optional<Real>& closed,
                 const char* reference) {
    EdgeCheck c;
    c.quad = quad;
    c.edge = edge;
    c.computed = computed;
    c.closed_form = closed;
    if (closed) {
      c.closed_dev = boost::multiprecision::abs(computed - *closed);
      if (c.closed_dev > closed_form_tolerance()) c.ok = false;
      if (c.closed_dev > rep.max_closed_dev) rep.max_closed_dev = c.closed_dev;
    }
    if (reference) {
      c.reference = reference;
      c.reference_dev = reference_dev(computed, reference);
      if (c.reference_dev > reference_tolerance()) c.ok = false;
      if (c.reference_dev > rep.max_reference_dev) rep.max_reference_dev = c.reference_dev;
    }
    rep.pass = rep.pass && c.ok;
    rep.checks.push_back(std::move(c));
  };
  for (const auto& row : sporadic_rows()) {
    EdgeLengths e = compute_edges(parse_angles(row.quad));
    add(row.quad, 'a', e.a, row.a(), row.ref_a);
    add(row.quad, 'b', e.b, row.b(), row.ref_b);
  }
  struct Printed {
    int family, f;
    const char *a, *b;
  };
  for (const Printed& p : {Printed{1, 10, "0.4241", "0.1517"}, Printed{2, 6, "0.3390", "0.8065"},
                           Printed{3, 10, "0.4698", "0.0898"}}) {
    std::string id = "family" + std::to_string(p.family) + "@" + std::to_string(p.f);
    EdgeLengths e = compute_edges(family_angles(p.family, p.f));
    auto [ca, cb] = family_closed_form(p.family, p.f);
    add(id, 'a', e.a, ca, p.a);
    add(id, 'b', e.b, cb, p.b);
  }
  for (int family = 1; family <= 3; ++family) {
    for (int f = family_min_f(family); f <= 64; f += 2) {
      std::string id = "family" + std::to_string(family) + "@" + std::to_string(f);
      EdgeLengths e = compute_edges(family_angles(family, f));
      auto [ca, cb] = family_closed_form(family, f);
      add(id, 'a', e.a, ca, nullptr);
      add(id, 'b', e.b, cb, nullptr);
    }
    EdgeLengths e = compute_edges(family_angles(family, limit_f));
    Real limit = family == 1 ? R(1, 3) : Acos(R(1, 3));
    for (const Real& x : {e.a, e.b}) {
      Real d = boost::multiprecision::abs(x - limit);
      if (d > rep.max_limit_dev) rep.max_limit_dev = d;
    }
  }
  if (rep.max_limit_dev > Real("1e-3")) rep.pass = false;
  return rep;
}

nlohmann::ordered_json coordinates_json(const SphericalPlacement& p, const CombinatorialTiling& t,
                                        const QuadClass& q, int samples) {
  if (samples < 0) throw std::invalid_argument("arc samples must be non-negative");
  auto xyz = [](const Vec3& v) {
    return nlohmann::ordered_json::array({static_cast<double>(v.x), static_cast<double>(v.y),
                                          static_cast<double>(v.z)});
  };
  std::vector<std::array<int, 4>> vertex_of(t.f());
  for (std::size_t v = 0; v < p.vertex_corners.size(); ++v) {
    for (const auto& c : p.vertex_corners[v]) vertex_of[c.tile][c.label] = static_cast<int>(v);
  }
  nlohmann::ordered_json j;
  j["format"] = "a3b-coordinates";
  j["version"] = 1;
  j["quad"] = q.id();
  j["f"] = t.f();
  j["closure"] = static_cast<double>(p.closure);
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    nlohmann::ordered_json corners = nlohmann::ordered_json::array();
    for (const auto& c : p.vertex_corners[v]) corners.push_back({c.tile, c.label});
    verts.push_back({{"id", v}, {"xyz", xyz(p.vertices[v])}, {"corners", corners}});
  }
  j["vertices"] = verts;
  nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
  for (int tile = 0; tile < t.f(); ++tile) {
    for (int s = 0; s < 4; ++s) {
      EdgeRef o = t.partner({tile, s});
      if (o < EdgeRef{tile, s}) continue;
      const TilePlacement& tp = p.tiles[tile];
      Real len = (is_b_slot(s) ? p.b : p.a) * pi();
      nlohmann::ordered_json pts = nlohmann::ordered_json::array();
      for (int k = 0; k <= samples + 1; ++k) {
        Real th = len * k / (samples + 1);
        pts.push_back(xyz(boost::multiprecision::cos(th) * tp.corner[s] +
                          boost::multiprecision::sin(th) * tp.out_tangent[s]));
      }
      arcs.push_back({{"type", is_b_slot(s) ? "b" : "a"},
                      {"from", vertex_of[tile][s]},
                      {"to", vertex_of[tile][(s + 1) % 4]},
                      {"edge", {tile, s, o.tile, o.slot}},
                      {"points", pts}});
    }
  }
  j["arcs"] = arcs;
  return j;
}

void export_coordinates(const SphericalPlacement& p, const CombinatorialTiling& t, const QuadClass& q,
                        const std::string& path, int samples) {
  auto j = coordinates_json(p, t, q, samples);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace a3b
