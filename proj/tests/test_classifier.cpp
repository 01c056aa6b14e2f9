#include "a3b/catalog.hpp"
#include "a3b/classifier.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace a3b;

namespace {

std::set<std::string> kept_ids(const std::vector<CandidateReport>& rows) {
  std::set<std::string> out;
  for (const auto& r : rows)
    if (!r.dismissal) out.insert(r.id());
  return out;
}

std::set<std::string> expected_ids(int f_max) {
  std::set<std::string> out;
  for (const auto& e : expected_quads(f_max)) out.insert(format_angles(e.angles) + "@" + std::to_string(e.f));
  return out;
}

}  // namespace

TEST(Classifier, RejectsSmallBound) {
  ClassifyOptions o;
  o.f_max = 4;
  EXPECT_THROW(classify_all(o), std::invalid_argument);
}

TEST(Classifier, SmallestF) {
  ClassifyOptions o;
  o.f_max = 6;
  auto rows = classify_all(o);
  EXPECT_EQ(kept_ids(rows).size(), 4u);
  EXPECT_EQ(kept_ids(rows), expected_ids(6));
}

TEST(Classifier, MatchesCatalogUpToTwentyFour) {
  ClassifyOptions o;
  o.f_max = 24;
  o.audit = true;
  auto rows = classify_all(o);
  EXPECT_EQ(kept_ids(rows), expected_ids(24));
  for (const auto& r : rows) {
    if (r.dismissal) continue;
    EXPECT_NE(r.tileability, Tileability::undecided) << r.id();
    EXPECT_NE(r.tileability, Tileability::refuted) << r.id();
  }
  auto tsv = audit_tsv(rows);
  EXPECT_EQ(tsv.rfind("f\tquad\tclass\tenumerator\tmatched\tdecision\treason\n", 0), 0u);
}

TEST(Classifier, EnumeratorsPartition) {
  ClassifyOptions o;
  o.f_max = 20;
  o.audit = true;
  std::set<std::string> seen;
  std::size_t total = 0;
  for (auto rows : {enumerate_convex(o), enumerate_concave_alpha(o), enumerate_concave_beta(o),
                    enumerate_degenerate(o)}) {
    for (const auto& r : rows) {
      seen.insert(r.id());
      ++total;
    }
  }
  EXPECT_EQ(seen.size(), total);
  EXPECT_EQ(total, classify_all(o).size());
}

TEST(Classifier, SineCandidatesContainTheCatalog) {
  std::set<std::string> raw;
  for (const auto& c : sine_candidates(36)) raw.insert(c.id());
  for (const auto& id : expected_ids(36)) EXPECT_TRUE(raw.count(id)) << id;
}

TEST(Assess, KnownQuads) {
  ClassifyOptions o;
  auto r = assess(parse_angles("(3,20,4,13)/18"), o);
  EXPECT_FALSE(r.dismissal);
  EXPECT_EQ(r.tileability, Tileability::earth_map);
  r = assess(parse_angles("(5,4,7,3)/9"), o);
  EXPECT_FALSE(r.dismissal);
  EXPECT_EQ(r.tileability, Tileability::fixture);
  o.search_cap = 24;
  r = assess(parse_angles("(13,12,18,9)/24"), o);
  ASSERT_TRUE(r.dismissal);
}

TEST(Assess, ConcaveCandidatesWithoutDegreeThreeVertex) {
  ASSERT_EQ(concave_table_candidates().size(), 29u);
  int survivors = 0;
  for (const auto& c : concave_table_candidates()) {
    auto q = parse_angles(c.angles);
    EXPECT_EQ(angle_sum_f(q), c.f) << c.angles;
    bool abd = q[kAlpha] + q[kBeta] + q[kDelta] == Rat(2);
    bool acd = q[kAlpha] + q[kGamma] + q[kDelta] == Rat(2);
    EXPECT_EQ(abd || acd, c.survives) << c.angles;
    auto r = assess(q, {});
    EXPECT_EQ(r.dismissal.has_value(), !c.survives) << c.angles;
    survivors += c.survives;
  }
  EXPECT_EQ(survivors, 3);
}

TEST(Assess, ConvexLinesHaveNoBalance) {
  for (const auto& sweep : {halving_line_sweep(36, 36), sixth_line_sweep(false, 120), sixth_line_sweep(true, 120)}) {
    EXPECT_FALSE(sweep.points.empty()) << sweep.name;
    for (const auto& q : sweep.points) {
      auto f = angle_sum_f(q);
      ASSERT_TRUE(f) << format_angles(q);
      EXPECT_TRUE(solve_balance(*f, enumerate_vertex_types(q), {1}).empty()) << format_angles(q);
    }
  }
}

TEST(Filters, NamedReasons) {
  auto f = admissibility_filters(parse_angles("(35,16,18,11)/30"));
  ASSERT_FALSE(f.empty());
  EXPECT_EQ(f.back(), "alpha-ge-1-no-abd-acd");
  EXPECT_TRUE(admissibility_filters(parse_angles("(1,4,2,2)/4")).empty());
}
