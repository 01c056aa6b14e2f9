#include "a3b/classifier.hpp"

#include "a3b/builders.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace a3b {

namespace {

using Q = boost::rational<long long>;
constexpr int kVars = 5;  // alpha, beta, gamma, delta, u = 1/f

struct Row {
  std::array<Q, kVars> c{};
  Q rhs = 0;
};

struct Solution {
  std::array<Q, kVars> point{};
  std::vector<std::array<Q, kVars>> kernel;
};

std::optional<Solution> solve(std::vector<Row> rows) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int col = 0; col < kVars && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p].c[col] == Q(0)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Q inv = 1 / rows[r].c[col];
    for (auto& x : rows[r].c) x *= inv;
    rows[r].rhs *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o].c[col] == Q(0)) continue;
      Q m = rows[o].c[col];
      for (int k = 0; k < kVars; ++k) rows[o].c[k] -= m * rows[r].c[k];
      rows[o].rhs -= m * rows[r].rhs;
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t o = r; o < rows.size(); ++o) {
    if (rows[o].rhs != Q(0)) return std::nullopt;
  }
  Solution s;
  std::vector<bool> is_pivot(kVars, false);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    s.point[pivot_col[i]] = rows[i].rhs;
    is_pivot[pivot_col[i]] = true;
  }
  for (int free = 0; free < kVars; ++free) {
    if (is_pivot[free]) continue;
    std::array<Q, kVars> v{};
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i].c[free];
    s.kernel.push_back(v);
  }
  return s;
}

// One argument of the sine constraint as an affine form in the angles.
struct Form {
  std::array<Q, 4> c{};
};

// y = eps * (L - m) lies in [0, 1/2] on this branch.
struct Branch {
  int m = 0;
  int eps = 1;
};

struct Constraint {
  const char* name;
  std::array<Form, 4> forms;
};

const std::array<Constraint, 2>& constraints() {
  static const std::array<Constraint, 2> c = {{
      {"eq1", {{Form{{1, 0, Q(-1, 2), 0}}, Form{{0, Q(1, 2), 0, 0}}, Form{{0, 0, Q(1, 2), 0}},
                Form{{0, Q(-1, 2), 0, 1}}}}},
      {"eq2", {{Form{{1, 0, Q(1, 2), 0}}, Form{{0, Q(1, 2), 0, 0}}, Form{{0, 0, Q(1, 2), 0}},
                Form{{0, Q(1, 2), 0, 1}}}}},
  }};
  return c;
}

// Branches whose y-range meets the open range of the form over angles in (0, 2).
std::vector<Branch> branches_for(const Form& form) {
  Q lo = 0, hi = 0;
  for (const Q& x : form.c) (x < Q(0) ? lo : hi) += 2 * x;
  std::vector<Branch> out;
  for (int m = -3; m <= 4; ++m) {
    for (int eps : {1, -1}) {
      Q a = eps > 0 ? Q(m) : Q(m) - Q(1, 2);
      Q b = eps > 0 ? Q(m) + Q(1, 2) : Q(m);
      if (b > lo && a < hi) out.push_back({m, eps});
    }
  }
  return out;
}

// sum_i coef_i * y_i = rhs.
struct YEquation {
  std::array<Q, 4> coef{};
  Q rhs = 0;
};

struct ClassCase {
  std::string name;
  std::vector<YEquation> eqs;
  bool needs_vertex = false;
};

YEquation y_eq(std::initializer_list<std::pair<int, Q>> terms, Q rhs) {
  YEquation e;
  for (auto [i, c] : terms) e.coef[i] += c;
  e.rhs = rhs;
  return e;
}

Q to_q(const Rat& x) { return Q(static_cast<long long>(x.num()), static_cast<long long>(x.den())); }
Rat to_rat(const Q& x) { return Rat(BigInt(x.numerator()), BigInt(x.denominator())); }

std::vector<ClassCase> class_cases() {
  std::vector<ClassCase> out;
  for (int a : {0, 1}) {
    for (int b : {2, 3}) {
      out.push_back({"zero y" + std::to_string(a + 1) + ",y" + std::to_string(b + 1),
                     {y_eq({{a, 1}}, 0), y_eq({{b, 1}}, 0)}, true});
    }
  }
  out.push_back({"pairs y1=y3,y2=y4", {y_eq({{0, 1}, {2, -1}}, 0), y_eq({{1, 1}, {3, -1}}, 0)}, true});
  out.push_back({"pairs y1=y4,y2=y3", {y_eq({{0, 1}, {3, -1}}, 0), y_eq({{1, 1}, {2, -1}}, 0)}, true});
  // {1/6, theta} against {theta/2, 1/2 - theta/2}.
  const std::array<std::array<int, 2>, 2> sides = {{{0, 1}, {2, 3}}};
  for (int side = 0; side < 2; ++side) {
    const auto& p = sides[side];
    const auto& q = sides[1 - side];
    for (int sixth = 0; sixth < 2; ++sixth) {
      int a = p[sixth], t = p[1 - sixth];
      for (int half = 0; half < 2; ++half) {
        int c = q[half], d = q[1 - half];
        std::ostringstream name;
        name << "theta y" << a + 1 << "=1/6 y" << t + 1 << "=2y" << c + 1 << " y" << c + 1 << "+y" << d + 1 << "=1/2";
        out.push_back({name.str(),
                       {y_eq({{a, 1}}, Q(1, 6)), y_eq({{c, 2}, {t, -1}}, 0), y_eq({{c, 1}, {d, 1}}, Q(1, 2))},
                       false});
      }
    }
  }
  const auto& table = sporadic_sine_table();
  for (std::size_t row = 0; row < table.size(); ++row) {
    for (int side = 0; side < 2; ++side) {
      for (int o1 = 0; o1 < 2; ++o1) {
        for (int o2 = 0; o2 < 2; ++o2) {
          std::array<Q, 4> v{};
          const auto& r = table[row];
          std::array<Q, 2> lhs = {to_q(r[o1]), to_q(r[1 - o1])};
          std::array<Q, 2> rhs = {to_q(r[2 + o2]), to_q(r[3 - o2])};
          if (side == 1) std::swap(lhs, rhs);
          v = {lhs[0], lhs[1], rhs[0], rhs[1]};
          ClassCase cc{"table row " + std::to_string(row + 1), {}, false};
          for (int i = 0; i < 4; ++i) cc.eqs.push_back(y_eq({{i, 1}}, v[i]));
          out.push_back(std::move(cc));
        }
      }
    }
  }
  return out;
}

std::vector<VertexType> degree_three_types() {
  std::vector<VertexType> out;
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; i + j <= 3; ++j) {
      for (int k = 0; i + j + k <= 3; ++k) {
        int l = 3 - i - j - k;
        if ((i + l) % 2 == 0) out.push_back(VertexType{{i, j, k, l}});
      }
    }
  }
  return out;
}

std::string enumerator_of(ConvexityClass c) {
  switch (c) {
    case ConvexityClass::convex: return "convex";
    case ConvexityClass::alpha_ge_1: return "concave-alpha";
    case ConvexityClass::beta_ge_1: return "concave-beta";
    default: return "degenerate";
  }
}

bool angles_in_range(const std::array<Q, 4>& a) {
  return std::all_of(a.begin(), a.end(), [](const Q& x) { return x > Q(0) && x < Q(2); });
}


// Closed or open bounds on t for a line point + t * dir at fixed f.
struct Interval {
  Q lo, hi;
  bool lo_closed = false, hi_closed = false;
  bool contains(const Q& t) const {
    return (t > lo || (lo_closed && t == lo)) && (t < hi || (hi_closed && t == hi));
  }
};

// The t with all angles in (0, 2) and every folded value on its branch.
std::optional<Interval> line_interval(const std::array<Q, kVars>& p, const std::array<Q, kVars>& v,
                                      const Constraint& con, const std::array<Branch, 4>& b) {
  std::optional<Q> lo, hi;
  bool lo_closed = false, hi_closed = false;
  bool empty = false;
  // c0 + c1 t > bound (strict) or >= bound.
  auto need = [&](Q c0, Q c1, Q bound, bool strict) {
    if (c1 == Q(0)) {
      if (strict ? !(c0 > bound) : !(c0 >= bound)) empty = true;
      return;
    }
    Q t = (bound - c0) / c1;
    if (c1 > Q(0)) {
      if (!lo || t > *lo || (t == *lo && strict)) {
        lo = t;
        lo_closed = !strict;
      }
    } else {
      if (!hi || t < *hi || (t == *hi && strict)) {
        hi = t;
        hi_closed = !strict;
      }
    }
  };
  for (int k = 0; k < 4; ++k) {
    need(p[k], v[k], Q(0), true);
    need(-p[k], -v[k], Q(-2), true);
  }
  for (int i = 0; i < 4; ++i) {
    Q c0 = 0, c1 = 0;
    for (int k = 0; k < 4; ++k) {
      c0 += con.forms[i].c[k] * p[k];
      c1 += con.forms[i].c[k] * v[k];
    }
    c0 = (c0 - Q(b[i].m)) * Q(b[i].eps);
    c1 *= Q(b[i].eps);
    need(c0, c1, Q(0), false);
    need(-c0, -c1, Q(-1, 2), false);
  }
  if (empty || !lo || !hi) return std::nullopt;
  if (*lo > *hi || (*lo == *hi && !(lo_closed && hi_closed))) return std::nullopt;
  return Interval{*lo, *hi, lo_closed, hi_closed};
}

QuadAngles at(const std::array<Q, kVars>& p, const std::array<Q, kVars>& v, const Q& t) {
  return {to_rat(p[0] + t * v[0]), to_rat(p[1] + t * v[1]), to_rat(p[2] + t * v[2]), to_rat(p[3] + t * v[3])};
}

// Points of a line at fixed f that can carry a tiling: the t pinned by a
// vertex type that does not hold along the whole line (counts per angle are
// at most f), plus the breakpoints of the filter conditions. Throws when an
// open piece of the line survives.
std::vector<Q> pinned_points(const std::array<Q, kVars>& p, const std::array<Q, kVars>& v, int f,
                             const Interval& iv) {
  std::array<Q, 4> low{};
  for (int k = 0; k < 4; ++k) low[k] = std::max(Q(0), std::min(p[k] + iv.lo * v[k], p[k] + iv.hi * v[k]));
  std::set<Q> ts;
  std::array<int, 4> n{};
  auto rec = [&](auto&& self, int k, Q used) -> void {
    if (used > Q(2)) return;
    if (k == 4) {
      if (n[0] + n[1] + n[2] + n[3] < 3 || (n[0] + n[3]) % 2 != 0) return;
      Q c0 = 0, c1 = 0;
      for (int i = 0; i < 4; ++i) {
        c0 += n[i] * p[i];
        c1 += n[i] * v[i];
      }
      if (c1 == Q(0)) return;
      Q t = (2 - c0) / c1;
      if (iv.contains(t)) ts.insert(t);
      return;
    }
    for (n[k] = 0; n[k] <= f; ++n[k]) {
      Q next = used + n[k] * low[k];
      if (next > Q(2)) break;
      self(self, k + 1, next);
    }
    n[k] = 0;
  };
  rec(rec, 0, Q(0));
  // Between consecutive breakpoints of the filter conditions and away from
  // the pinned t, the filters and the vertex types do not change, so one
  // generic point decides each open piece.
  std::vector<std::pair<std::array<Q, 4>, Q>> atoms;  // coef . angles = rhs
  for (int i = 0; i < 4; ++i) {
    for (Q c : {Q(0), Q(1, 3), Q(1, 2), Q(1), Q(2)}) {
      std::array<Q, 4> a{};
      a[i] = 1;
      atoms.emplace_back(a, c);
    }
    for (int j = i + 1; j < 4; ++j) {
      std::array<Q, 4> a{};
      a[i] = 1;
      a[j] = -1;
      atoms.emplace_back(a, Q(0));
    }
  }
  atoms.push_back({{2, 1, 0, 0}, Q(1)});
  atoms.push_back({{0, 1, 2, 0}, Q(1)});
  atoms.push_back({{0, 0, 1, 2}, Q(1)});
  atoms.push_back({{0, 2, 1, 0}, Q(1)});
  atoms.push_back({{1, 1, 0, 1}, Q(2)});
  atoms.push_back({{1, 0, 1, 1}, Q(2)});
  atoms.push_back({{0, 1, 0, 1}, Q(2)});
  std::set<Q> cuts{iv.lo, iv.hi};
  for (const auto& [a, c] : atoms) {
    Q c0 = 0, c1 = 0;
    for (int i = 0; i < 4; ++i) {
      c0 += a[i] * p[i];
      c1 += a[i] * v[i];
    }
    if (c1 == Q(0)) continue;
    Q t = (c - c0) / c1;
    if (t > iv.lo && t < iv.hi) cuts.insert(t);
  }
  std::vector<Q> pts(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    std::optional<Q> generic;
    for (int j = 1; j < 64 && !generic; ++j) {
      Q t = pts[i] + (pts[i + 1] - pts[i]) * Q(j, 64);
      if (!ts.count(t)) generic = t;
    }
    if (!generic) throw std::logic_error("no generic point on a fixed-f line");
    QuadAngles g = at(p, v, *generic);
    if (admissibility_filters(g).empty() && !solve_balance(f, enumerate_vertex_types(g), {1}).empty()) {
      throw std::logic_error("a whole segment at f = " + std::to_string(f) + " passes, e.g. " + format_angles(g));
    }
  }
  for (const Q& t : pts) {
    if (iv.contains(t)) ts.insert(t);
  }
  return {ts.begin(), ts.end()};
}

}  // namespace

std::string to_string(Tileability t) {
  switch (t) {
    case Tileability::not_checked: return "not-checked";
    case Tileability::earth_map: return "earth-map";
    case Tileability::fixture: return "fixture";
    case Tileability::found: return "found";
    case Tileability::refuted: return "refuted";
    case Tileability::undecided: return "undecided";
  }
  return "?";
}

std::string CandidateReport::id() const { return format_angles(angles) + "@" + std::to_string(f); }

std::vector<CandidateReport> sine_candidates(int f_max) {
  std::map<std::pair<int, std::string>, CandidateReport> found;
  const auto cases = class_cases();
  const auto deg3 = degree_three_types();
  for (const auto& con : constraints()) {
    std::array<std::vector<Branch>, 4> br;
    for (int i = 0; i < 4; ++i) br[i] = branches_for(con.forms[i]);
    for (const Branch& b0 : br[0]) {
      for (const Branch& b1 : br[1]) {
        for (const Branch& b2 : br[2]) {
          for (const Branch& b3 : br[3]) {
            const std::array<Branch, 4> b = {b0, b1, b2, b3};
            // y_i as an affine form: y_i = eps (L_i - m).
            auto y_row = [&](const YEquation& e) {
              Row row;
              row.rhs = e.rhs;
              for (int i = 0; i < 4; ++i) {
                if (e.coef[i] == Q(0)) continue;
                Q s = e.coef[i] * b[i].eps;
                for (int k = 0; k < 4; ++k) row.c[k] += s * con.forms[i].c[k];
                row.rhs += s * b[i].m;
              }
              return row;
            };
            Row sum;
            sum.c = {1, 1, 1, 1, -4};
            sum.rhs = 2;
            for (const auto& cc : cases) {
              std::vector<Row> base{sum};
              for (const auto& e : cc.eqs) base.push_back(y_row(e));
              std::vector<std::optional<VertexType>> pins;
              if (cc.needs_vertex) {
                for (const auto& v : deg3) pins.push_back(v);
              } else {
                pins.push_back(std::nullopt);
              }
              for (const auto& pin : pins) {
                auto rows = base;
                if (pin) {
                  Row vr;
                  for (int k = 0; k < 4; ++k) vr.c[k] = pin->e[k];
                  vr.rhs = 2;
                  rows.push_back(vr);
                }
                auto sol = solve(rows);
                if (!sol) continue;
                std::vector<std::array<Q, kVars>> points;
                if (sol->kernel.empty()) {
                  points.push_back(sol->point);
                } else if (sol->kernel.size() == 1 && sol->kernel[0][4] != Q(0)) {
                  for (int f = 6; f <= f_max; f += 2) {
                    Q t = (Q(1, f) - sol->point[4]) / sol->kernel[0][4];
                    std::array<Q, kVars> p{};
                    for (int k = 0; k < kVars; ++k) p[k] = sol->point[k] + t * sol->kernel[0][k];
                    points.push_back(p);
                  }
                } else if (sol->kernel.size() <= 2) {
                  // Lines at fixed f: fix u first when the kernel moves it.
                  std::vector<std::pair<int, std::array<Q, kVars>>> lines;  // (f, point)
                  std::array<Q, kVars> dir{};
                  int u_dir = -1;
                  for (std::size_t i = 0; i < sol->kernel.size(); ++i) {
                    if (sol->kernel[i][4] != Q(0)) u_dir = static_cast<int>(i);
                  }
                  if (sol->kernel.size() == 2 && u_dir < 0) {
                    throw std::logic_error("two-parameter family at fixed f");
                  }
                  for (int f = 6; f <= f_max; f += 2) {
                    std::array<Q, kVars> p = sol->point;
                    if (u_dir >= 0) {
                      const auto& w = sol->kernel[u_dir];
                      Q s = (Q(1, f) - p[4]) / w[4];
                      for (int k = 0; k < kVars; ++k) p[k] += s * w[k];
                    } else if (p[4] != Q(1, f)) {
                      continue;
                    }
                    lines.emplace_back(f, p);
                  }
                  dir = sol->kernel[sol->kernel.size() == 2 ? 1 - u_dir : 0];
                  for (const auto& [f, lp] : lines) {
                    auto iv = line_interval(lp, dir, con, b);
                    if (!iv) continue;
                    for (const Q& t : pinned_points(lp, dir, f, *iv)) {
                      std::array<Q, kVars> p{};
                      for (int k = 0; k < kVars; ++k) p[k] = lp[k] + t * dir[k];
                      points.push_back(p);
                    }
                  }
                } else {
                  throw std::logic_error("solution family of dimension " + std::to_string(sol->kernel.size()));
                }
                for (const auto& p : points) {
                  if (p[4] <= Q(0)) continue;
                  Q inv = 1 / p[4];
                  if (inv.denominator() != 1 || inv.numerator() % 2 != 0 || inv.numerator() < 6 ||
                      inv.numerator() > f_max) {
                    continue;
                  }
                  std::array<Q, 4> ang = {p[0], p[1], p[2], p[3]};
                  if (!angles_in_range(ang)) continue;
                  bool ok = true;
                  for (int i = 0; i < 4 && ok; ++i) {
                    Q L = 0;
                    for (int k = 0; k < 4; ++k) L += con.forms[i].c[k] * ang[k];
                    Q y = b[i].eps * (L - b[i].m);
                    ok = y >= 0 && y <= Q(1, 2);
                  }
                  if (!ok) continue;
                  QuadAngles qa = {to_rat(ang[0]), to_rat(ang[1]), to_rat(ang[2]), to_rat(ang[3])};
                  if (!check_sine_constraint(qa)) continue;
                  QuadAngles canon = canonical_orientation(qa);
                  int f = static_cast<int>(inv.numerator());
                  auto key = std::make_pair(f, format_angles(canon));
                  if (found.count(key)) continue;
                  CandidateReport rep;
                  rep.angles = canon;
                  rep.f = f;
                  std::ostringstream m;
                  m << con.name << " " << cc.name;
                  if (pin) m << " pin " << pin->ascii();
                  rep.matched = m.str();
                  rep.enumerator = enumerator_of(classify_convexity(canon));
                  found.emplace(key, rep);
                }
              }
            }
          }
        }
      }
    }
  }
  std::vector<CandidateReport> out;
  for (auto& [k, v] : found) out.push_back(std::move(v));
  return out;
}

CandidateReport assess(const QuadAngles& angles, const ClassifyOptions& opts, const std::string& matched) {
  CandidateReport rep;
  rep.angles = canonical_orientation(angles);
  rep.matched = matched;
  rep.enumerator = enumerator_of(classify_convexity(rep.angles));
  auto f = angle_sum_f(rep.angles);
  if (!f) {
    rep.dismissal = "f-not-even";
    return rep;
  }
  rep.f = *f;
  if (is_symmetric(rep.angles)) {
    rep.dismissal = "symmetric";
    return rep;
  }
  QuadClass q;
  try {
    q = make_quad(rep.angles);
  } catch (const NotRealizable& e) {
    rep.dismissal = "not-realizable";
    return rep;
  } catch (const EdgeInconsistency& e) {
    rep.dismissal = "edge-inconsistent";
    return rep;
  }
  if (auto tags = admissibility_filters(q); !tags.empty()) {
    rep.dismissal = tags.front();
    return rep;
  }
  auto types = enumerate_vertex_types(q);
  rep.avc = types;
  if (solve_balance(q.f, types, {1}).empty()) {
    rep.dismissal = "no-balance";
    return rep;
  }
  if (has_earth_map_vertices(q.angles, q.f)) {
    rep.tileability = Tileability::earth_map;
    return rep;
  }
  for (const auto& name : exceptional_names()) {
    auto ex = build_exceptional(name);
    if (ex.quad.angles == q.angles) {
      rep.tileability = Tileability::fixture;
      return rep;
    }
  }
  if (q.f <= opts.search_cap) {
    SearchOptions so;
    so.cap = opts.search_cap;
    so.limit = 1;
    auto r = search_all_tilings(q, so);
    rep.balance_solutions = r.stats.balance_solutions;
    if (!r.tilings.empty()) {
      rep.tileability = Tileability::found;
    } else {
      rep.tileability = Tileability::refuted;
      rep.dismissal = "no-tiling";
    }
    return rep;
  }
  auto refined = refine_vertex_types(q, types, opts.local_budget);
  rep.avc = refined.kept;
  auto sols = solve_balance(q.f, refined.kept, {1});
  if (sols.empty()) {
    rep.tileability = Tileability::refuted;
    rep.dismissal = "no-balance-after-local";
    return rep;
  }
  SearchOptions so;
  so.cap = q.f;
  so.limit = 1;
  so.avc = refined.kept;
  so.node_budget = opts.node_budget;
  auto r = search_all_tilings(q, so);
  rep.balance_solutions = r.stats.balance_solutions;
  if (!r.tilings.empty()) {
    rep.tileability = Tileability::found;
  } else if (r.complete) {
    rep.tileability = Tileability::refuted;
    rep.dismissal = "no-tiling";
  } else {
    rep.tileability = Tileability::undecided;
    rep.dismissal = "undecided";
  }
  return rep;
}

namespace {

std::vector<CandidateReport> run(const ClassifyOptions& opts, const std::optional<std::string>& enumerator) {
  if (opts.f_max < 6) throw std::invalid_argument("f_max must be at least 6");
  std::vector<CandidateReport> out;
  for (const auto& c : sine_candidates(opts.f_max)) {
    if (enumerator && c.enumerator != *enumerator) continue;
    CandidateReport rep = assess(c.angles, opts, c.matched);
    if (!rep.dismissal || opts.audit) out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace

std::vector<CandidateReport> enumerate_convex(const ClassifyOptions& opts) { return run(opts, "convex"); }
std::vector<CandidateReport> enumerate_concave_alpha(const ClassifyOptions& opts) { return run(opts, "concave-alpha"); }
std::vector<CandidateReport> enumerate_concave_beta(const ClassifyOptions& opts) { return run(opts, "concave-beta"); }
std::vector<CandidateReport> enumerate_degenerate(const ClassifyOptions& opts) { return run(opts, "degenerate"); }

std::vector<CandidateReport> classify_all(const ClassifyOptions& opts) { return run(opts, std::nullopt); }

std::string audit_tsv(const std::vector<CandidateReport>& rows) {
  std::ostringstream out;
  out << "f\tquad\tclass\tenumerator\tmatched\tdecision\treason\n";
  for (const auto& r : rows) {
    out << r.f << '\t' << format_angles(r.angles) << '\t' << to_string(classify_convexity(r.angles)) << '\t'
        << r.enumerator << '\t' << r.matched << '\t' << (r.dismissal ? "dismissed" : "kept") << '\t'
        << (r.dismissal ? *r.dismissal : to_string(r.tileability)) << '\n';
  }
  return out.str();
}

}  // namespace a3b
