// Randomized property suites over generated tilings and angle tuples.

#include "a3b/builders.hpp"
#include "a3b/catalog.hpp"
#include "a3b/geometry.hpp"

#include <gtest/gtest.h>

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace a3b;

namespace {

constexpr int kCases = 1000;

std::mt19937_64& rng() {
  static std::mt19937_64 r(20261014);
  return r;
}

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Earth map quads that carry at least one flip kind.
const std::vector<QuadClass>& flippable_quads() {
  static const std::vector<QuadClass> pool = [] {
    std::vector<QuadClass> out;
    for (const auto& e : expected_quads(48)) {
      QuadClass q = make_quad(e.angles);
      if (!has_earth_map_vertices(q.angles, q.f)) continue;
      if (flip_width(q, FlipKind::first) || flip_width(q, FlipKind::second)) out.push_back(q);
    }
    return out;
  }();
  return pool;
}

struct Generated {
  QuadClass quad;
  CombinatorialTiling tiling;
  std::vector<Flip> schedule;
  std::vector<bool> used;  // timezones covered by the schedule
};

std::vector<FlipKind> kinds_of(const QuadClass& q) {
  std::vector<FlipKind> k;
  for (auto kind : {FlipKind::first, FlipKind::second})
    if (flip_width(q, kind)) k.push_back(kind);
  return k;
}

// A free flip position for `kind`, or -1.
int free_position(const Generated& g, FlipKind kind) {
  const int n = g.quad.f / 2, w = *flip_width(g.quad, kind);
  std::vector<int> starts;
  for (int p = 0; p < n; ++p) {
    bool ok = true;
    for (int j = 0; j < w && ok; ++j) ok = !g.used[(p + j) % n];
    if (ok) starts.push_back(p);
  }
  if (starts.empty()) return -1;
  return starts[uniform(0, static_cast<int>(starts.size()) - 1)];
}

void occupy(Generated& g, const Flip& f) {
  const int n = g.quad.f / 2, w = *flip_width(g.quad, f.kind);
  for (int j = 0; j < w; ++j) g.used[(f.position + j) % n] = true;
}

// Earth map with a random disjoint flip schedule.
Generated random_flipped(int max_flips) {
  const auto& pool = flippable_quads();
  Generated g;
  g.quad = pool[uniform(0, static_cast<int>(pool.size()) - 1)];
  g.used.assign(g.quad.f / 2, false);
  auto kinds = kinds_of(g.quad);
  int flips = uniform(0, max_flips);
  for (int i = 0; i < flips; ++i) {
    FlipKind k = kinds[uniform(0, static_cast<int>(kinds.size()) - 1)];
    int p = free_position(g, k);
    if (p < 0) break;
    g.schedule.push_back({k, p});
    occupy(g, g.schedule.back());
  }
  g.tiling = apply_flip_schedule(g.quad, g.schedule);
  return g;
}

// Any constructive tiling: flipped earth maps, the threefold ones and fixtures.
Generated random_tiling() {
  int pick = uniform(0, 19);
  if (pick == 0) {
    auto names = exceptional_names();
    auto ex = build_exceptional(names[uniform(0, static_cast<int>(names.size()) - 1)]);
    return {ex.quad, ex.tiling, {}, {}};
  }
  if (pick == 1) {
    QuadClass q = family_quad(2, 6 * uniform(1, 6) + 4);
    return {q, build_threefold_special(q, uniform(0, 2)), {}, {}};
  }
  return random_flipped(3);
}

CombinatorialTiling random_relabel(const CombinatorialTiling& t) {
  std::vector<int> perm(t.f());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng());
  return relabel_tiles(t, perm);
}

bool same(const CombinatorialTiling& x, const CombinatorialTiling& y) {
  return x.chirality == y.chirality && x.glue == y.glue;
}

}  // namespace

TEST(Properties, FlipIsAnInvolution) {
  int done = 0;
  for (int n = 0; done < kCases; ++n) {
    ASSERT_LT(n, 10 * kCases);
    auto g = random_flipped(2);
    auto kinds = kinds_of(g.quad);
    FlipKind k = kinds[uniform(0, static_cast<int>(kinds.size()) - 1)];
    int p = free_position(g, k);
    if (p < 0) continue;
    auto once = apply_flip(g.tiling, g.quad, {k, p});
    auto twice = apply_flip(once, g.quad, {k, p});
    ASSERT_TRUE(same(twice, g.tiling)) << g.quad.id() << " at " << p;
    ASSERT_TRUE(validate(once, g.quad).empty());
    ++done;
  }
}

TEST(Properties, DisjointFlipsCommute) {
  int done = 0;
  for (int n = 0; done < kCases; ++n) {
    ASSERT_LT(n, 20 * kCases);
    auto g = random_flipped(1);
    auto kinds = kinds_of(g.quad);
    FlipKind k1 = kinds[uniform(0, static_cast<int>(kinds.size()) - 1)];
    int p1 = free_position(g, k1);
    if (p1 < 0) continue;
    Flip a{k1, p1};
    occupy(g, a);
    FlipKind k2 = kinds[uniform(0, static_cast<int>(kinds.size()) - 1)];
    int p2 = free_position(g, k2);
    if (p2 < 0) continue;
    Flip b{k2, p2};
    auto ab = apply_flip(apply_flip(g.tiling, g.quad, a), g.quad, b);
    auto ba = apply_flip(apply_flip(g.tiling, g.quad, b), g.quad, a);
    ASSERT_TRUE(same(ab, ba)) << g.quad.id() << " " << p1 << " " << p2;
    ++done;
  }
}

TEST(Properties, CanonicalKeyInvariance) {
  for (int n = 0; n < kCases; ++n) {
    auto g = random_tiling();
    auto r = random_relabel(g.tiling);
    ASSERT_EQ(canonical_key(r, false), canonical_key(g.tiling, false)) << g.quad.id();
    ASSERT_EQ(canonical_key(r, true), canonical_key(g.tiling, true)) << g.quad.id();
    auto m = random_relabel(g.tiling.mirrored());
    ASSERT_EQ(canonical_key(m, true), canonical_key(g.tiling, true)) << g.quad.id();
  }
}

TEST(Properties, ParityAndEuler) {
  for (int n = 0; n < kCases; ++n) {
    auto g = random_tiling();
    const auto& t = g.tiling;
    auto verts = t.vertices();
    ASSERT_EQ(static_cast<int>(verts.size()), t.f() + 2) << g.quad.id();
    int slots = 0;
    for (const auto& tile : t.glue)
      for (const auto& e : tile) slots += e.tile >= 0;
    ASSERT_EQ(slots / 2, 2 * t.f());
    int corners = 0;
    for (const auto& v : verts) {
      int ad = 0;
      Rat sum = 0;
      for (const auto& c : v) {
        ad += c.label == kAlpha || c.label == kDelta;
        sum += g.quad.angles[c.label];
      }
      corners += static_cast<int>(v.size());
      ASSERT_EQ(ad % 2, 0) << g.quad.id();
      ASSERT_EQ(sum, Rat(2)) << g.quad.id();
      ASSERT_GE(v.size(), 3u);
    }
    ASSERT_EQ(corners, 4 * t.f());
  }
}

TEST(Properties, AreaSumsToFourPi) {
  const Real four_pi = 4 * boost::math::constants::pi<Real>();
  for (int n = 0; n < kCases; ++n) {
    auto g = random_tiling();
    auto p = realize(g.tiling, g.quad);
    ASSERT_LE(p.closure, closure_tolerance());
    Real area = 0;
    for (int i = 0; i < g.tiling.f(); ++i) area += tile_area(p, i);
    ASSERT_LT(boost::multiprecision::abs(area - four_pi), Real("1e-6")) << g.quad.id();
  }
}

// Every tuple (i, j, k, l)/d with 0 <= i, j, k, l <= d/2 and d <= 84 whose
// sine products agree at 100 digits must be accepted; random unequal tuples
// must be rejected.
TEST(Properties, SineProductMatchesNumericOracle) {
  using Big = boost::multiprecision::mpfr_float_100;
  const Big pi = boost::math::constants::pi<Big>();
  const Big eps("1e-80");
  std::uint64_t equal = 0, unequal = 0;
  for (int d = 1; d <= 84; ++d) {
    const int top = d / 2;
    std::vector<Big> s(top + 1);
    for (int k = 0; k <= top; ++k) s[k] = boost::multiprecision::sin(pi * k / d);
    struct P {
      int i, j;
      Big v;
    };
    std::vector<P> pairs;
    for (int i = 0; i <= top; ++i)
      for (int j = 0; j <= top; ++j) pairs.push_back({i, j, s[i] * s[j]});
    std::sort(pairs.begin(), pairs.end(), [](const P& x, const P& y) { return x.v < y.v; });
    auto primitive = [d](const P& x, const P& y) { return std::gcd(std::gcd(std::gcd(std::gcd(x.i, x.j), y.i), y.j), d) == 1; };
    for (std::size_t lo = 0; lo < pairs.size();) {
      std::size_t hi = lo + 1;
      while (hi < pairs.size() && pairs[hi].v - pairs[hi - 1].v < eps) ++hi;
      for (std::size_t x = lo; x < hi; ++x)
        for (std::size_t y = lo; y < hi; ++y) {
          if (!primitive(pairs[x], pairs[y])) continue;
          ASSERT_TRUE(sine_product_equal(frac(pairs[x].i, d), frac(pairs[x].j, d), frac(pairs[y].i, d),
                                         frac(pairs[y].j, d)))
              << pairs[x].i << "," << pairs[x].j << "," << pairs[y].i << "," << pairs[y].j << " /" << d;
          ++equal;
        }
      lo = hi;
    }
    for (int n = 0; n < 24 && pairs.size() > 1; ++n) {
      const P& x = pairs[uniform(0, static_cast<int>(pairs.size()) - 1)];
      const P& y = pairs[uniform(0, static_cast<int>(pairs.size()) - 1)];
      if (boost::multiprecision::abs(x.v - y.v) < eps) continue;
      ASSERT_FALSE(sine_product_equal(frac(x.i, d), frac(x.j, d), frac(y.i, d), frac(y.j, d)))
          << x.i << "," << x.j << "," << y.i << "," << y.j << " /" << d;
      ++unequal;
    }
  }
  EXPECT_GE(equal, static_cast<std::uint64_t>(kCases));
  EXPECT_GE(unequal, static_cast<std::uint64_t>(kCases));
  std::cout << "sine oracle: " << equal << " equal tuples, " << unequal << " unequal\n";
}
