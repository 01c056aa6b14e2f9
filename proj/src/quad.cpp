#include "a3b/quad.hpp"

#include "a3b/vertex.hpp"

#include <algorithm>
#include <sstream>

namespace a3b {

namespace {

const Rat kOne(1);
const Rat kTwo(2);
const Rat kHalf = frac(1, 2);
const Rat kThird = frac(1, 3);

using boost::multiprecision::acos;
using boost::multiprecision::abs;

Real pi_real() { return boost::math::constants::pi<Real>(); }

// acos with the realizability guard; the result is in units of pi.
Real acos_units(const Real& c, const char* what) {
  if (abs(c) > Real(1) + edge_tolerance()) {
    throw NotRealizable(std::string(what) + ": |cos| = " + real_str(abs(c)) + " exceeds 1");
  }
  Real clamped = c > 1 ? Real(1) : (c < -1 ? Real(-1) : c);
  return Real(acos(clamped) / pi_real());
}

int cmp(const Rat& a, const Rat& b) { return a < b ? -1 : (b < a ? 1 : 0); }

// Generic path, all angles different from 1.
EdgeLengths generic_edges(const QuadAngles& q) {
  const Rat& al = q[kAlpha];
  const Rat& be = q[kBeta];
  const Rat& ga = q[kGamma];
  const Rat& de = q[kDelta];
  Real s_half_g = sin_pi(ga / 2);
  Real s_half_b = sin_pi(be / 2);
  Real c1 = (sin_pi(al) + cos_pi(de) * sin_pi(ga)) / (2 * sin_pi(de) * s_half_g * s_half_g);
  Real c2 = (sin_pi(de) + cos_pi(al) * sin_pi(be)) / (2 * sin_pi(al) * s_half_b * s_half_b);
  Real a1 = acos_units(c1, "edge a");
  Real a2 = acos_units(c2, "edge a (second form)");
  if (abs(a1 - a2) > edge_tolerance()) {
    throw EdgeInconsistency("the two expressions for a disagree: " + real_str(a1) + " vs " + real_str(a2));
  }
  Real ca = boost::multiprecision::cos(a1 * pi_real());
  Real cb_ = cos_pi(be);
  Real cg = cos_pi(ga);
  Real sb = sin_pi(be);
  Real sg = sin_pi(ga);
  Real cos_b = ca * ca * ca * (1 - cb_) * (1 - cg) - ca * ca * sb * sg + ca * (cb_ + cg - cb_ * cg) + sb * sg;
  return {a1, acos_units(cos_b, "edge b")};
}

// alpha = 1: isosceles triangle with apex gamma, legs a and a+b.
EdgeLengths alpha_one_edges(const QuadAngles& q) {
  const Rat& be = q[kBeta];
  const Rat& ga = q[kGamma];
  Real sb = sin_pi(be);
  Real ca = cos_pi(be) * (1 + cos_pi(ga)) / (sb * sin_pi(ga));
  Real cab = (cos_pi(ga) + cos_pi(be) * cos_pi(be)) / (sb * sb);
  Real a = acos_units(ca, "edge a");
  Real ab = acos_units(cab, "edge a+b");
  return {a, Real(ab - a)};
}

// beta = 1: triangle ACD with sides AC = 2a, CD = a, DA = b.
EdgeLengths beta_one_edges(const QuadAngles& q) {
  const Rat& al = q[kAlpha];
  const Rat& ga = q[kGamma];
  const Rat& de = q[kDelta];
  Real ca = (cos_pi(al) + cos_pi(ga) * cos_pi(de)) / (sin_pi(ga) * sin_pi(de));
  Real c2a = (cos_pi(de) + cos_pi(al) * cos_pi(ga)) / (sin_pi(al) * sin_pi(ga));
  Real cb = (cos_pi(ga) + cos_pi(al) * cos_pi(de)) / (sin_pi(al) * sin_pi(de));
  Real a = acos_units(ca, "edge a");
  Real two_a = acos_units(c2a, "edge 2a");
  if (abs(two_a - 2 * a) > edge_tolerance()) {
    throw EdgeInconsistency("degenerate triangle: AC = " + real_str(two_a) + " is not 2a = " + real_str(Real(2 * a)));
  }
  return {a, acos_units(cb, "edge b")};
}

std::string family_tag(int family) { return "family" + std::to_string(family); }

}  // namespace

std::string to_string(ConvexityClass c) {
  switch (c) {
    case ConvexityClass::convex: return "convex";
    case ConvexityClass::alpha_ge_1: return "alpha_ge_1";
    case ConvexityClass::beta_ge_1: return "beta_ge_1";
    case ConvexityClass::alpha_eq_1: return "alpha_eq_1";
    case ConvexityClass::beta_eq_1: return "beta_eq_1";
  }
  return "convex";
}

ConvexityClass convexity_from_string(const std::string& s) {
  for (auto c : {ConvexityClass::convex, ConvexityClass::alpha_ge_1, ConvexityClass::beta_ge_1,
                 ConvexityClass::alpha_eq_1, ConvexityClass::beta_eq_1}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown convexity class '" + s + "'");
}

std::string real_str(const Real& x, int digits) { return x.str(digits, std::ios::fixed); }

std::string QuadClass::id() const { return format_angles(angles) + "@" + std::to_string(f); }

std::string format_angles(const QuadAngles& q) {
  BigInt d = 1;
  for (const auto& x : q) d = lcm_big(d, x.den());
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 4; ++i) {
    if (i) os << ",";
    os << (q[i].num() * (d / q[i].den())).str();
  }
  os << ")/" << d.str();
  return os.str();
}

QuadAngles parse_angles(const std::string& text) {
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw std::invalid_argument("expected (n1,n2,n3,n4)/d, got '" + text + "'");
  }
  std::string inner = text.substr(open + 1, close - open - 1);
  std::string rest = text.substr(close + 1);
  BigInt den = 1;
  if (!rest.empty()) {
    if (rest[0] != '/') throw std::invalid_argument("expected '/' after ')' in '" + text + "'");
    den = RationalAngle::parse(rest.substr(1)).num();
    if (den <= 0) throw std::invalid_argument("nonpositive denominator in '" + text + "'");
  }
  QuadAngles q;
  std::istringstream is(inner);
  std::string item;
  int n = 0;
  while (std::getline(is, item, ',')) {
    if (n == 4) throw std::invalid_argument("more than four angles in '" + text + "'");
    q[n++] = RationalAngle::parse(item) / RationalAngle(den, BigInt(1));
  }
  if (n != 4) throw std::invalid_argument("expected four angles in '" + text + "'");
  return q;
}

std::optional<int> angle_sum_f(const RationalAngle& alpha, const RationalAngle& beta,
                               const RationalAngle& gamma, const RationalAngle& delta) {
  Rat excess = alpha + beta + gamma + delta - 2;
  if (excess.sign() <= 0) return std::nullopt;
  Rat f = Rat(4) / excess;
  if (!f.is_integer()) return std::nullopt;
  BigInt n = f.num();
  if (n < 6 || n % 2 != 0 || n > 1000000000) return std::nullopt;
  return static_cast<int>(n);
}

std::optional<int> angle_sum_f(const QuadAngles& q) { return angle_sum_f(q[0], q[1], q[2], q[3]); }

QuadAngles mirror(const QuadAngles& q) { return {q[kDelta], q[kGamma], q[kBeta], q[kAlpha]}; }

bool is_symmetric(const QuadAngles& q) { return q[kAlpha] == q[kDelta] && q[kBeta] == q[kGamma]; }

ConvexityClass classify_convexity(const QuadAngles& q) {
  for (int c : {kAlpha, kDelta}) {
    if (q[c] == kOne) return ConvexityClass::alpha_eq_1;
    if (q[c] > kOne) return ConvexityClass::alpha_ge_1;
  }
  for (int c : {kBeta, kGamma}) {
    if (q[c] == kOne) return ConvexityClass::beta_eq_1;
    if (q[c] > kOne) return ConvexityClass::beta_ge_1;
  }
  return ConvexityClass::convex;
}

bool has_earth_map_vertices(const QuadAngles& q, int f) {
  return q[kAlpha] + q[kBeta] + q[kDelta] == kTwo && q[kGamma] == frac(4, f);
}

QuadAngles canonical_orientation(const QuadAngles& q) {
  QuadAngles m = mirror(q);
  auto f = angle_sum_f(q);
  if (f) {
    bool here = has_earth_map_vertices(q, *f);
    bool there = has_earth_map_vertices(m, *f);
    if (here != there) return here ? q : m;
  }
  auto big_at_ab = [](const QuadAngles& x) { return x[kAlpha] >= kOne || x[kBeta] >= kOne; };
  if (big_at_ab(q) != big_at_ab(m)) return big_at_ab(q) ? q : m;
  if (q[kAlpha] != q[kDelta]) return q[kAlpha] > q[kDelta] ? q : m;
  return q[kBeta] >= q[kGamma] ? q : m;
}

EdgeLengths compute_edges(const QuadAngles& q) {
  if (q[kAlpha] == kOne) return alpha_one_edges(q);
  if (q[kDelta] == kOne) return alpha_one_edges(mirror(q));
  if (q[kBeta] == kOne) return beta_one_edges(q);
  if (q[kGamma] == kOne) return beta_one_edges(mirror(q));
  return generic_edges(q);
}

QuadClass make_quad(const QuadAngles& q, const std::string& provenance) {
  auto f = angle_sum_f(q);
  if (!f) throw std::invalid_argument("angle sum of " + format_angles(q) + " is not 2+4/f with f even >= 6");
  QuadClass out;
  out.angles = q;
  out.f = *f;
  out.convexity = classify_convexity(q);
  auto e = compute_edges(q);
  out.a = e.a;
  out.b = e.b;
  out.provenance = provenance;
  return out;
}

int family_min_f(int family) {
  if (family == 2) return 6;
  if (family == 1 || family == 3) return 10;
  throw std::invalid_argument("unknown family " + std::to_string(family));
}

QuadAngles family_angles(int family, int f) {
  if (f % 2 != 0 || f < family_min_f(family)) {
    throw std::invalid_argument(family_tag(family) + " needs an even f >= " + std::to_string(family_min_f(family)));
  }
  switch (family) {
    case 1: return {frac(4, f), Rat(1) - frac(4, f), frac(4, f), Rat(1)};
    case 2: return {frac(2, f), frac(4 * f - 4, 3 * f), frac(4, f), frac(2 * f - 2, 3 * f)};
    default: return {frac(2, f), frac(2 * f - 4, 3 * f), frac(4, f), frac(4 * f - 2, 3 * f)};
  }
}

QuadClass family_quad(int family, int f) {
  QuadClass q = make_quad(family_angles(family, f), family_tag(family));
  q.family = family;
  if (family == 1 && f % 4 == 0) q.k = f / 4;
  if (family == 2 && f % 6 == 4) q.k = (f - 4) / 6;
  if (family == 3 && f % 6 == 2) q.k = (f - 2) / 6;
  return q;
}

QuadClass parse_quad_id(const std::string& id) {
  auto at = id.find('@');
  std::string head = id.substr(0, at);
  std::optional<int> f;
  if (at != std::string::npos) {
    try {
      std::size_t used = 0;
      f = std::stoi(id.substr(at + 1), &used);
      if (used != id.size() - at - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad tile count in quad id '" + id + "'");
    }
  }
  if (head.rfind("family", 0) == 0) {
    if (!f) throw std::invalid_argument("family id '" + id + "' needs @f");
    int fam = 0;
    try {
      fam = std::stoi(head.substr(6));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad family in quad id '" + id + "'");
    }
    if (fam < 1 || fam > 3) throw std::invalid_argument("unknown family in quad id '" + id + "'");
    return family_quad(fam, *f);
  }
  QuadClass q = make_quad(parse_angles(head));
  if (f && *f != q.f) {
    throw std::invalid_argument("quad id '" + id + "': angle sum gives f=" + std::to_string(q.f));
  }
  return q;
}

std::vector<std::string> admissibility_filters(const QuadClass& q) { return admissibility_filters(q.angles); }

std::vector<std::string> admissibility_filters(const QuadAngles& q) {
  std::vector<std::string> out;
  for (const auto& x : q) {
    if (x.sign() <= 0 || x >= kTwo) {
      out.push_back("angle-range");
      return out;
    }
  }
  if (!angle_sum_f(q)) out.push_back("angle-sum");
  if (is_symmetric(q)) out.push_back("symmetric");
  int big = 0;
  for (const auto& x : q) big += x >= kOne ? 1 : 0;
  if (big >= 2) {
    out.push_back("two-angles-ge-1");
    return out;
  }
  const Rat& al = q[kAlpha];
  const Rat& be = q[kBeta];
  const Rat& ga = q[kGamma];
  const Rat& de = q[kDelta];

  if (cmp(ga, be) != cmp(al, de)) out.push_back("beta-gamma-vs-alpha-delta");
  if ((be == de) != (al == kOne) || (ga == al) != (de == kOne)) out.push_back("alpha-one-iff-beta-delta");
  if (classify_convexity(q) == ConvexityClass::convex) {
    if ((be > de) != (al < ga) || (be < de) != (al > ga)) out.push_back("convex-beta-delta-vs-alpha-gamma");
  }
  if ((de <= kOne && (2 * al + be <= kOne || be + 2 * ga <= kOne)) ||
      (al <= kOne && (2 * de + ga <= kOne || ga + 2 * be <= kOne))) {
    out.push_back("two-alpha-plus-beta");
  }

  // The concave conditions, stated for the angle >= 1 at alpha or beta and
  // applied to the mirror when the large angle sits at delta or gamma.
  QuadAngles m = mirror(q);
  for (const QuadAngles* x : std::array<const QuadAngles*, 2>{&q, &m}) {
    const Rat& a = (*x)[kAlpha];
    const Rat& b = (*x)[kBeta];
    const Rat& c = (*x)[kGamma];
    const Rat& d = (*x)[kDelta];
    if (a > kOne) {
      if (!(kOne > c && c > b && b > d)) out.push_back("alpha-gt-1-order");
      if (c <= kThird) out.push_back("alpha-gt-1-gamma-gt-third");
      if (d >= kHalf) out.push_back("alpha-gt-1-delta-lt-half");
    }
    if (a >= kOne && a + b + d != kTwo && a + c + d != kTwo) out.push_back("alpha-ge-1-no-abd-acd");
    if (b > kOne) {
      if (!(a < c && a < d)) out.push_back("beta-gt-1-alpha-smallest");
      if (a >= kHalf) out.push_back("beta-gt-1-alpha-lt-half");
      bool bd = false;
      if (b + d < kTwo) {
        for (const auto& v : enumerate_vertex_types(*x)) bd = bd || (v.e[kBeta] > 0 && v.e[kDelta] > 0);
      }
      if (!bd) out.push_back("beta-gt-1-no-beta-delta");
    }
  }
  return out;
}

bool signed_sine_product_equal(const RationalAngle& y1, const RationalAngle& y2,
                               const RationalAngle& y3, const RationalAngle& y4, int s) {
  FoldedSine f1 = fold_sine(y1);
  FoldedSine f2 = fold_sine(y2);
  FoldedSine f3 = fold_sine(y3);
  FoldedSine f4 = fold_sine(y4);
  int left = f1.sign * f2.sign;
  int right = s * f3.sign * f4.sign;
  if (left == 0 || right == 0) return left == 0 && right == 0;
  if (left != right) return false;
  return sine_product_equal(f1.folded, f2.folded, f3.folded, f4.folded);
}

SineConstraint sine_constraint(const QuadAngles& q) {
  const Rat& al = q[kAlpha];
  const Rat& be = q[kBeta];
  const Rat& ga = q[kGamma];
  const Rat& de = q[kDelta];
  SineConstraint out;
  out.difference_branch = signed_sine_product_equal(al - ga / 2, be / 2, ga / 2, de - be / 2, 1);
  out.sum_branch = signed_sine_product_equal(al + ga / 2, be / 2, ga / 2, de + be / 2, -1);
  return out;
}

bool check_sine_constraint(const QuadAngles& q) {
  auto s = sine_constraint(q);
  return s.difference_branch || s.sum_branch;
}

nlohmann::json to_json(const QuadClass& q) {
  nlohmann::ordered_json j;
  nlohmann::json angles = nlohmann::json::array();
  for (const auto& x : q.angles) angles.push_back(x.str());
  j["angles"] = angles;
  j["f"] = q.f;
  j["class"] = to_string(q.convexity);
  j["a"] = real_str(q.a, 20);
  j["b"] = real_str(q.b, 20);
  nlohmann::ordered_json prov;
  prov["tag"] = q.provenance;
  if (q.family) prov["family"] = *q.family;
  if (q.k) prov["k"] = *q.k;
  prov["mirrored"] = q.mirrored;
  j["provenance"] = prov;
  return j;
}

QuadClass quad_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("angles") || !j["angles"].is_array() || j["angles"].size() != 4) {
    throw std::invalid_argument("quad: 'angles' must be an array of four fractions");
  }
  QuadAngles q;
  for (int i = 0; i < 4; ++i) {
    if (!j["angles"][i].is_string()) throw std::invalid_argument("quad: angles[" + std::to_string(i) + "] is not a string");
    q[i] = RationalAngle::parse(j["angles"][i].get<std::string>());
  }
  QuadClass out = make_quad(q);
  if (j.contains("f") && j["f"].get<int>() != out.f) throw std::invalid_argument("quad: 'f' disagrees with the angle sum");
  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    if (p.is_object()) {
      out.provenance = p.value("tag", "");
      if (p.contains("family")) out.family = p["family"].get<int>();
      if (p.contains("k")) out.k = p["k"].get<int>();
      out.mirrored = p.value("mirrored", false);
    } else if (p.is_string()) {
      out.provenance = p.get<std::string>();
    }
  }
  return out;
}

}  // namespace a3b
