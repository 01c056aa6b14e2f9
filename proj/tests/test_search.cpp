#include "a3b/builders.hpp"
#include "a3b/catalog.hpp"
#include "a3b/search.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace a3b;

TEST(Search, EarthMapOnly) {
  auto q = make_quad(parse_angles("(6,3,4,3)/6"));
  auto r = search_all_tilings(q);
  EXPECT_TRUE(r.complete);
  ASSERT_EQ(r.tilings.size(), 1u);
  EXPECT_EQ(census_str(r.tilings[0].census()), "6αβδ,2γ^3");
  EXPECT_EQ(r.keys[0], canonical_key(build_earth_map(q)));
}

TEST(Search, TwoExceptionalTilings) {
  auto q = make_quad(parse_angles("(1,4,2,2)/4"));
  auto r = search_all_tilings(q);
  EXPECT_TRUE(r.complete);
  ASSERT_EQ(r.tilings.size(), 2u);
  std::set<std::string> want = {canonical_key(build_exceptional("f16_a").tiling),
                                canonical_key(build_exceptional("f16_b").tiling)};
  EXPECT_EQ(std::set<std::string>(r.keys.begin(), r.keys.end()), want);
  for (const auto& t : r.tilings) EXPECT_TRUE(validate(t, q).empty());
}

TEST(Search, AgreesWithBuildersAtSmallF) {
  for (const auto& e : expected_quads(18)) {
    QuadClass q = make_quad(e.angles);
    auto r = search_all_tilings(q);
    ASSERT_TRUE(r.complete) << q.id();
    std::set<std::string> built;
    for (const auto& t : constructive_tilings(q)) built.insert(canonical_key(t));
    EXPECT_EQ(std::set<std::string>(r.keys.begin(), r.keys.end()), built) << q.id();
    EXPECT_EQ(static_cast<int>(r.tilings.size()), e.tilings()) << q.id();
  }
}

TEST(Search, NoTilingForRefutedQuad) {
  auto q = make_quad(parse_angles("(13,12,18,9)/24"));
  SearchOptions so;
  so.cap = 24;
  auto r = search_all_tilings(q, so);
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.tilings.empty());
}

TEST(Search, CapAndLimits) {
  auto q = family_quad(1, 24);
  EXPECT_THROW(search_all_tilings(q), SearchCapExceeded);
  SearchOptions so;
  so.cap = 24;
  so.limit = 1;
  auto r = search_all_tilings(q, so);
  EXPECT_EQ(r.tilings.size(), 1u);
  EXPECT_FALSE(r.complete);
  SearchOptions tiny;
  tiny.node_budget = 3;
  auto r2 = search_all_tilings(family_quad(2, 16), tiny);
  EXPECT_FALSE(r2.complete);
}

TEST(Search, WithoutReflectionCountsMirrorsApart) {
  auto q = make_quad(parse_angles("(1,4,2,2)/4"));
  SearchOptions so;
  so.allow_reflection = false;
  auto r = search_all_tilings(q, so);
  EXPECT_GE(r.tilings.size(), 2u);
}

TEST(Search, RestrictedTypesAtThirtySix) {
  for (const char* s : {"(5,4,7,3)/9", "(15,6,10,7)/18"}) {
    auto q = make_quad(parse_angles(s));
    SearchOptions so;
    so.cap = 36;
    so.avc = refine_vertex_types(q, enumerate_vertex_types(q)).kept;
    auto r = search_all_tilings(q, so);
    EXPECT_TRUE(r.complete) << s;
    ASSERT_EQ(r.tilings.size(), 1u) << s;
  }
}

TEST(LocalRefutation, DropsImpossibleTypes) {
  auto q = make_quad(parse_angles("(15,6,10,7)/18"));
  auto types = enumerate_vertex_types(q);
  EXPECT_FALSE(vertex_type_feasible(q, types, VertexType::parse("β^6")));
  EXPECT_TRUE(vertex_type_feasible(q, types, VertexType::parse("βγ^3")));
  auto r = refine_vertex_types(q, types);
  ASSERT_EQ(r.removed.size(), 1u);
  EXPECT_EQ(r.removed[0], VertexType::parse("β^6"));
}

TEST(Counts, SmallTable) {
  for (const auto& c : count_tilings({6, 8, 10, 12})) {
    auto want = table_counts(c.f);
    ASSERT_TRUE(want);
    EXPECT_EQ(c.quads, want->first) << c.f;
    EXPECT_EQ(c.tilings, want->second) << c.f;
  }
  EXPECT_THROW(count_tilings_for_f(22), SearchCapExceeded);
}
