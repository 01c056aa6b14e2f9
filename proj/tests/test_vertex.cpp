#include "a3b/search.hpp"
#include "a3b/vertex.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace a3b;

namespace {

// Counting system over the vertex types that survive local refutation.
std::vector<BalanceSolution> refined_balance(const std::string& quad) {
  auto q = make_quad(parse_angles(quad));
  return solve_balance(q.f, refine_vertex_types(q, enumerate_vertex_types(q)).kept);
}

std::vector<std::string> balance_strings(const std::string& quad) {
  std::vector<std::string> out;
  for (const auto& s : refined_balance(quad)) out.push_back(s.str());
  return out;
}

BalanceSolution sol(const std::string& census) { return census_to_solution(parse_census(census)); }

bool uses(const BalanceSolution& s, const VertexType& v) {
  for (const auto& [w, n] : s.multiplicities)
    if (w == v) return true;
  return false;
}

// Brute force over exponent vectors, independent of the enumerator.
std::vector<VertexType> brute_types(const QuadAngles& q, int bound) {
  std::vector<VertexType> out;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c)
        for (int d = 0; d <= bound; ++d) {
          VertexType v{{a, b, c, d}};
          if (v.degree() < 3 || (a + d) % 2) continue;
          if (v.sum(q) == Rat(2)) out.push_back(v);
        }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST(VertexType, Formatting) {
  VertexType v{{2, 1, 1, 0}};
  EXPECT_EQ(v.str(), "α^2βγ");
  EXPECT_EQ(v.ascii(), "a2bc");
  EXPECT_EQ(VertexType::parse("α^2βγ"), v);
  EXPECT_EQ(VertexType::parse("a2bc"), v);
  EXPECT_EQ(VertexType::parse("γ^10").e[2], 10);
  EXPECT_EQ(VertexType{}.str(), "·");
  EXPECT_THROW(VertexType::parse("αx"), std::invalid_argument);
}

TEST(VertexTypes, EnumeratorMatchesBruteForce) {
  for (const char* s : {"(6,3,4,3)/6", "(1,4,2,2)/4", "(5,4,7,3)/9", "(15,6,10,7)/18", "(3,20,4,13)/18",
                        "(2,10,3,6)/9", "(13,12,18,9)/24"}) {
    auto q = parse_angles(s);
    EXPECT_EQ(enumerate_vertex_types(q), brute_types(q, 16)) << s;
  }
}

TEST(VertexTypes, EarthMapQuad) {
  auto types = enumerate_vertex_types(parse_angles("(6,3,4,3)/6"));
  EXPECT_NE(std::find(types.begin(), types.end(), VertexType::parse("αβδ")), types.end());
  EXPECT_NE(std::find(types.begin(), types.end(), VertexType::parse("γ^3")), types.end());
}

TEST(Balance, UniqueSolutions) {
  EXPECT_EQ(balance_strings("(6,3,4,3)/6"), std::vector<std::string>{"6αβδ,2γ^3"});
  EXPECT_EQ(balance_strings("(1,4,2,2)/4"), std::vector<std::string>{"8α^2βγ,8βδ^2,2γ^4"});
  auto s = refined_balance("(15,6,10,7)/18");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], sol("14α^2β,10βγ^3,8αδ^3,6β^2γδ^2"));
}

TEST(Balance, RawTypesAdmitMore) {
  auto q = parse_angles("(15,6,10,7)/18");
  EXPECT_EQ(solve_balance(36, enumerate_vertex_types(q)).size(), 3u);
}

TEST(Balance, SixfoldDeltaVertex) {
  const auto d6 = VertexType::parse("δ^6");
  std::vector<BalanceSolution> with, without;
  for (const auto& s : refined_balance("(5,4,7,3)/9")) (uses(s, d6) ? with : without).push_back(s);
  ASSERT_EQ(without.size(), 1u);
  EXPECT_EQ(without[0], sol("6α^3δ,18βγ^2,4α^2β^2,10αβδ^3"));
  // Counting alone leaves several censuses with a δ^6 vertex; the realized
  // one is among them.
  EXPECT_EQ(with.size(), 5u);
  EXPECT_NE(std::find(with.begin(), with.end(), sol("18βγ^2,6α^2β^2,6α^3δ,6αβδ^3,2δ^6")), with.end());
}

TEST(Balance, CountsAreConsistent) {
  auto q = parse_angles("(3,20,4,13)/18");
  for (const auto& s : solve_balance(18, enumerate_vertex_types(q))) {
    EXPECT_EQ(s.vertex_count(), 20);
    EXPECT_EQ(s.angle_counts(), (std::array<int, 4>{18, 18, 18, 18}));
  }
}

TEST(Balance, Limit) {
  auto q = parse_angles("(5,4,7,3)/9");
  EXPECT_EQ(solve_balance(36, enumerate_vertex_types(q), {1}).size(), 1u);
}

TEST(Census, ParseAndWithin) {
  auto c = parse_census("6αβδ,2γ^3");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].second, 6);
  auto sols = solve_balance(6, enumerate_vertex_types(parse_angles("(6,3,4,3)/6")));
  EXPECT_TRUE(census_within(parse_census("3αβδ,1γ^3"), sols));
  EXPECT_FALSE(census_within(parse_census("7αβδ"), sols));
  EXPECT_THROW(parse_census("6αxβ"), std::invalid_argument);
}
