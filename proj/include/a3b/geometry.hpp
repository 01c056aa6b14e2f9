#pragma once

// Spherical realization of combinatorial tilings and the edge length checks.

#include "a3b/quad.hpp"
#include "a3b/tiling.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace a3b {

struct Vec3 {
  Real x = 0, y = 0, z = 0;
};

Vec3 operator+(const Vec3& u, const Vec3& v);
Vec3 operator-(const Vec3& u, const Vec3& v);
Vec3 operator*(const Real& s, const Vec3& v);
Real dot(const Vec3& u, const Vec3& v);
Vec3 cross(const Vec3& u, const Vec3& v);
Real norm(const Vec3& v);

inline const Real& closure_tolerance() {
  static const Real tol("1e-6");
  return tol;
}

// Corner positions and edge tangents of every tile, indexed by corner label.
// out_tangent[c] is the unit tangent at corner c along slot c, in_tangent[c]
// the tangent at corner c along slot c-1 (towards corner c-1).
struct TilePlacement {
  std::array<Vec3, 4> corner;
  std::array<Vec3, 4> out_tangent;
  std::array<Vec3, 4> in_tangent;
};

struct SphericalPlacement {
  std::vector<TilePlacement> tiles;
  std::vector<std::vector<CornerRef>> vertex_corners;  // as CombinatorialTiling::vertices()
  std::vector<Vec3> vertices;                          // mean of the corner positions, normalized
  Real closure = 0;                                    // worst corner or tangent offset
  Real a = 0, b = 0;                                   // units of pi
};

class RealizationError : public std::runtime_error {
 public:
  RealizationError(const std::string& what, Real worst) : std::runtime_error(what), worst_(std::move(worst)) {}
  const Real& worst() const { return worst_; }

 private:
  Real worst_;
};

// Places tile 0 in a fixed frame and propagates along a breadth-first tree
// of gluings; the other gluings and every vertex are checked against tol.
SphericalPlacement realize(const CombinatorialTiling& t, const QuadClass& q, const Real& tol = closure_tolerance());

// Signed area of one placed tile (steradians).
Real tile_area(const SphericalPlacement& p, int tile);

// Great circle distance in units of pi.
Real arc_length(const Vec3& u, const Vec3& v);

struct EdgeCheck {
  std::string quad;      // angles or "familyN@f"
  char edge = 'a';       // 'a' or 'b'
  Real computed = 0;     // from compute_edges
  std::optional<Real> closed_form;
  std::optional<std::string> reference;  // four decimals, truncated
  Real closed_dev = 0;
  Real reference_dev = 0;  // distance from the truncation interval midpoint
  bool ok = true;
};

struct EdgeReport {
  std::vector<EdgeCheck> checks;
  Real max_closed_dev = 0;
  Real max_reference_dev = 0;
  // Edges of the families at large f against their limits.
  int limit_f = 10000;
  Real max_limit_dev = 0;
  bool pass = true;
};

inline const Real& closed_form_tolerance() {
  static const Real tol("1e-9");
  return tol;
}
inline const Real& reference_tolerance() {
  static const Real tol("5e-5");
  return tol;
}

EdgeReport verify_edge_lengths(int limit_f = 10000);

// Coordinate export: vertices and arcs sampled at `samples` interior points.
nlohmann::ordered_json coordinates_json(const SphericalPlacement& p, const CombinatorialTiling& t,
                                        const QuadClass& q, int samples = 8);
// Throws std::runtime_error when the file cannot be written.
void export_coordinates(const SphericalPlacement& p, const CombinatorialTiling& t, const QuadClass& q,
                        const std::string& path, int samples = 8);

}  // namespace a3b
