#include "a3b/builders.hpp"
#include "a3b/catalog.hpp"
#include "a3b/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace a3b;

namespace {

const Real kPi = boost::math::constants::pi<Real>();

Real total_area(const SphericalPlacement& p, int f) {
  Real s = 0;
  for (int i = 0; i < f; ++i) s += tile_area(p, i);
  return s;
}

// Independent check of the placement: edge arcs and corner angles measured
// from positions only.
Real corner_angle(const Vec3& at, const Vec3& prev, const Vec3& next) {
  auto tangent = [&](const Vec3& to) {
    Vec3 t = to - dot(at, to) * at;
    return (Real(1) / norm(t)) * t;
  };
  Vec3 u = tangent(prev), v = tangent(next);
  return boost::multiprecision::atan2(dot(cross(u, v), at), dot(u, v)) / kPi;
}

}  // namespace

TEST(Vec, Basics) {
  Vec3 x{1, 0, 0}, y{0, 1, 0};
  EXPECT_EQ(dot(x, y), 0);
  Vec3 z = cross(x, y);
  EXPECT_EQ(z.z, 1);
  EXPECT_LT(boost::multiprecision::abs(arc_length(x, y) - Real("0.5")), Real("1e-40"));
  EXPECT_LT(boost::multiprecision::abs(norm(x + y) - boost::multiprecision::sqrt(Real(2))), Real("1e-40"));
}

TEST(Realize, EarthMapClosesAndCoversSphere) {
  auto q = make_quad(parse_angles("(6,3,4,3)/6"));
  auto t = build_earth_map(q);
  auto p = realize(t, q);
  EXPECT_LE(p.closure, closure_tolerance());
  EXPECT_EQ(p.vertices.size(), 8u);
  EXPECT_LT(boost::multiprecision::abs(total_area(p, t.f()) - 4 * kPi), Real("1e-6"));
}

TEST(Realize, EdgesAndAnglesFromPositions) {
  auto q = make_quad(parse_angles("(3,20,4,13)/18"));
  auto t = flip_second(build_earth_map(q), q, 2);
  auto p = realize(t, q);
  for (int i = 0; i < t.f(); ++i) {
    const auto& c = p.tiles[i].corner;
    for (int s = 0; s < 4; ++s) {
      Real want = is_b_slot(s) ? q.b : q.a;
      EXPECT_LT(boost::multiprecision::abs(arc_length(c[s], c[(s + 1) % 4]) - want), Real("1e-9"));
    }
    // Interior angle: |angle| between the two edges at the corner, reflex when above 1.
    for (int k = 0; k < 4; ++k) {
      Real ang = corner_angle(c[k], c[(k + 3) % 4], c[(k + 1) % 4]);
      Real want = q.angles[k].to_real();
      Real got = t.chirality[i] > 0 ? ang : Real(-ang);
      if (got < 0) got += 2;
      EXPECT_LT(boost::multiprecision::abs(got - (Real(2) - want)) * boost::multiprecision::abs(got - want),
                Real("1e-9"))
          << "tile " << i << " corner " << k;
    }
  }
}

TEST(Realize, ExceptionalFixtures) {
  for (const auto& name : exceptional_names()) {
    auto ex = build_exceptional(name);
    auto p = realize(ex.tiling, ex.quad);
    EXPECT_LE(p.closure, closure_tolerance()) << name;
    EXPECT_LT(boost::multiprecision::abs(total_area(p, ex.tiling.f()) - 4 * kPi), Real("1e-6")) << name;
  }
}

TEST(Realize, DegenerateCorners) {
  for (const char* s : {"(6,3,4,3)/6", "(1,8,4,3)/6"}) {
    auto q = make_quad(parse_angles(s));
    EXPECT_LE(realize(build_earth_map(q), q).closure, closure_tolerance()) << s;
  }
  auto q = family_quad(1, 20);
  for (const auto& t : constructive_tilings(q)) EXPECT_LE(realize(t, q).closure, closure_tolerance());
}

TEST(Realize, WrongEdgeLengthFails) {
  auto q = family_quad(2, 16);
  auto t = build_earth_map(q);
  auto bad = q;
  bad.a += Real("0.01");
  EXPECT_THROW(realize(t, bad), RealizationError);
  auto other = make_quad(parse_angles("(6,3,4,3)/6"));
  EXPECT_THROW(realize(t, other), RealizationError);
}

TEST(EdgeLengths, ClosedFormsAndReferences) {
  auto rep = verify_edge_lengths();
  EXPECT_TRUE(rep.pass);
  EXPECT_LE(rep.max_closed_dev, closed_form_tolerance());
  EXPECT_LE(rep.max_reference_dev, reference_tolerance());
  EXPECT_LE(rep.max_limit_dev, Real("1e-3"));
  int refs = 0;
  for (const auto& c : rep.checks) refs += c.reference.has_value();
  EXPECT_GE(refs, 26);
}

TEST(EdgeLengths, FamilyLimits) {
  const Real third = Real(1) / 3;
  const Real g = boost::multiprecision::acos(third) / kPi;
  auto q1 = family_quad(1, 10000), q2 = family_quad(2, 10000), q3 = family_quad(3, 10000);
  EXPECT_LT(boost::multiprecision::abs(q1.a - third), Real("1e-3"));
  EXPECT_LT(boost::multiprecision::abs(q1.b - third), Real("1e-3"));
  EXPECT_LT(boost::multiprecision::abs(q2.a - g), Real("1e-3"));
  EXPECT_LT(boost::multiprecision::abs(q3.b - g), Real("1e-3"));
}

TEST(Export, CoordinateJson) {
  auto q = family_quad(3, 14);
  auto t = build_earth_map(q);
  auto p = realize(t, q);
  auto j = coordinates_json(p, t, q, 4);
  EXPECT_EQ(j["format"], "a3b-coordinates");
  EXPECT_EQ(j["vertices"].size(), 16u);
  EXPECT_EQ(j["arcs"].size(), 28u);
  EXPECT_EQ(j["arcs"][0]["points"].size(), 6u);
  for (const auto& v : j["vertices"]) {
    double r = 0;
    for (const auto& x : v["xyz"]) r += x.get<double>() * x.get<double>();
    EXPECT_NEAR(r, 1.0, 1e-12);
  }
  auto path = std::filesystem::temp_directory_path() / "a3b-test-coords.json";
  export_coordinates(p, t, q, path.string(), 2);
  std::ifstream is(path);
  auto back = nlohmann::json::parse(is);
  EXPECT_EQ(back["f"], 14);
  std::filesystem::remove(path);
  EXPECT_THROW(export_coordinates(p, t, q, "/nonexistent-dir/x.json"), std::runtime_error);
}
