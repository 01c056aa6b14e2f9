#pragma once

// Vertex types alpha^i beta^j gamma^k delta^l and the global counting system.

#include "a3b/quad.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace a3b {

struct VertexType {
  std::array<int, 4> e{};  // exponents of alpha, beta, gamma, delta

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  RationalAngle sum(const QuadAngles& q) const;
  // "α^2βγ"; "·" for the empty type.
  std::string str() const;
  // ASCII form "a2bc".
  std::string ascii() const;
  static VertexType parse(const std::string& text);

  friend bool operator==(const VertexType&, const VertexType&) = default;
  friend auto operator<=>(const VertexType&, const VertexType&) = default;
};

// All vertex types of a quad: angle sum 2, degree >= 3, even alpha+delta count.
// Sorted by exponent vector, largest first.
std::vector<VertexType> enumerate_vertex_types(const QuadAngles& q);
inline std::vector<VertexType> enumerate_vertex_types(const QuadClass& q) { return enumerate_vertex_types(q.angles); }

struct BalanceSolution {
  std::vector<std::pair<VertexType, int>> multiplicities;  // positive counts, in type order

  int vertex_count() const;
  std::array<int, 4> angle_counts() const;
  std::string str() const;  // "6αβδ,2γ^3"

  friend bool operator==(const BalanceSolution&, const BalanceSolution&) = default;
};

struct BalanceOptions {
  std::optional<std::size_t> limit;
};

// Every nonnegative integer solution of: each angle used f times, f+2 vertices.
std::vector<BalanceSolution> solve_balance(int f, const std::vector<VertexType>& types,
                                           BalanceOptions opts = {});
inline std::vector<BalanceSolution> solve_balance(const QuadClass& q, const std::vector<VertexType>& types,
                                                  BalanceOptions opts = {}) {
  return solve_balance(q.f, types, opts);
}

// Vertex census as it appears in a tiling.
using Census = std::vector<std::pair<VertexType, int>>;
BalanceSolution census_to_solution(const Census& c);
Census parse_census(const std::string& text);  // "6αβδ,2γ^3"

// True when partial <= some solution, componentwise.
bool census_within(const Census& partial, const std::vector<BalanceSolution>& solutions);

}  // namespace a3b
