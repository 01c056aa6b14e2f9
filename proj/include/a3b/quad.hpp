#pragma once

// The a^3b quadrilateral: corners alpha, beta, gamma, delta in cyclic order,
// edges alpha-beta, beta-gamma, gamma-delta of length a and delta-alpha of length b.

#include "a3b/angle.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace a3b {

using QuadAngles = std::array<RationalAngle, 4>;

enum Corner : int { kAlpha = 0, kBeta = 1, kGamma = 2, kDelta = 3 };

enum class ConvexityClass { convex, alpha_ge_1, beta_ge_1, alpha_eq_1, beta_eq_1 };

std::string to_string(ConvexityClass c);
ConvexityClass convexity_from_string(const std::string& s);

class NotRealizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EdgeInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EdgeLengths {
  Real a;  // units of pi
  Real b;
};

struct QuadClass {
  QuadAngles angles;
  int f = 0;
  ConvexityClass convexity = ConvexityClass::convex;
  Real a = 0;
  Real b = 0;
  std::string provenance;
  std::optional<int> family;  // 1, 2 or 3 for the infinite families
  std::optional<int> k;       // family parameter where the tiling count depends on it
  bool mirrored = false;      // the derivation orientation was swapped alpha<->delta, beta<->gamma

  const RationalAngle& alpha() const { return angles[kAlpha]; }
  const RationalAngle& beta() const { return angles[kBeta]; }
  const RationalAngle& gamma() const { return angles[kGamma]; }
  const RationalAngle& delta() const { return angles[kDelta]; }

  // "(n1,n2,n3,n4)/d@f"
  std::string id() const;
};

// "(n1,n2,n3,n4)/d" over the common denominator.
std::string format_angles(const QuadAngles& q);
QuadAngles parse_angles(const std::string& text);

std::optional<int> angle_sum_f(const RationalAngle& alpha, const RationalAngle& beta,
                               const RationalAngle& gamma, const RationalAngle& delta);
std::optional<int> angle_sum_f(const QuadAngles& q);

// alpha<->delta, beta<->gamma.
QuadAngles mirror(const QuadAngles& q);
bool is_symmetric(const QuadAngles& q);

// Orientation independent: an angle adjacent to b counts as "alpha".
ConvexityClass classify_convexity(const QuadAngles& q);

// True when alpha+beta+delta = 2 and gamma = 4/f.
bool has_earth_map_vertices(const QuadAngles& q, int f);

// Chooses the stored orientation: the one carrying the earth map vertices,
// else the one with the angle >= 1 at alpha or beta, else alpha > delta.
QuadAngles canonical_orientation(const QuadAngles& q);

// Builds a record with f, class and edges filled in. Throws std::invalid_argument
// when the angle sum does not give an even f >= 6, and the edge errors of compute_edges.
QuadClass make_quad(const QuadAngles& q, const std::string& provenance = "");

// Family members in stored orientation.
QuadAngles family_angles(int family, int f);
QuadClass family_quad(int family, int f);
// The f range of each family: 1 and 3 need f >= 10, family 2 needs f >= 6.
int family_min_f(int family);

// "(3,20,4,13)/18@18" or "family2@16".
QuadClass parse_quad_id(const std::string& id);

std::vector<std::string> admissibility_filters(const QuadClass& q);
std::vector<std::string> admissibility_filters(const QuadAngles& q);

// Edge tolerance for the internal consistency checks.
inline const Real& edge_tolerance() {
  static const Real tol("1e-9");
  return tol;
}

EdgeLengths compute_edges(const QuadAngles& q);

struct SineConstraint {
  bool difference_branch = false;  // sin(alpha-gamma/2) sin(beta/2) = sin(gamma/2) sin(delta-beta/2)
  bool sum_branch = false;  // sin(alpha+gamma/2) sin(beta/2) = -sin(gamma/2) sin(delta+beta/2)
};

SineConstraint sine_constraint(const QuadAngles& q);
bool check_sine_constraint(const QuadAngles& q);
inline bool check_sine_constraint(const QuadClass& q) { return check_sine_constraint(q.angles); }

// Signed equality sin(y1) sin(y2) = s * sin(y3) sin(y4) decided exactly.
bool signed_sine_product_equal(const RationalAngle& y1, const RationalAngle& y2,
                               const RationalAngle& y3, const RationalAngle& y4, int s);

nlohmann::json to_json(const QuadClass& q);
QuadClass quad_from_json(const nlohmann::json& j);

std::string real_str(const Real& x, int digits = 12);

}  // namespace a3b
