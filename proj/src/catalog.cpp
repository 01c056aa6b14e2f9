#include "a3b/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace a3b {

namespace {

std::string pow_str(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

const std::vector<SporadicQuad>& sporadic_quads() {
  static const std::vector<SporadicQuad> data = {
      {"(6,3,4,3)/6", 6, {{"6αβδ,2γ^3"}}, false},
      {"(1,8,4,3)/6", 6, {{"6αβδ,2γ^3"}}, false},
      {"(12,4,6,2)/9", 6, {{"6αβδ,2γ^3"}}, false},
      {"(2,10,3,6)/9", 12, {{"12αβδ,2γ^6"}}, false},
      {"(1,21,5,8)/15", 12, {{"12αβδ,2γ^6"}}, false},
      {"(4,9,5,17)/15", 12, {{"12αβδ,2γ^6"}}, false},
      {"(9,28,10,23)/30", 12, {{"12αβδ,2γ^6"}}, false},
      {"(3,16,10,41)/30", 12, {{"12αβδ,2γ^6"}}, false},
      {"(5,32,6,23)/30", 20, {{"20αβδ,2γ^10"}}, false},
      {"(1,16,6,43)/30", 20, {{"20αβδ,2γ^10"}}, false},
      {"(1,42,4,17)/30", 30, {{"30αβδ,2γ^15"}}, false},
      {"(3,20,4,13)/18", 18, {{"18αβδ,2γ^9"}, {"16αβδ,2αγ^5δ,2βγ^4"}, {"14αβδ,2α^2γδ^2,4βγ^4"}}, false},
      {"(1,4,2,2)/4", 16, {{"8βδ^2,8α^2βγ,2γ^4", 2}}, true},
      {"(5,4,7,3)/9", 36, {{"18βγ^2,6α^2β^2,6α^3δ,6αβδ^3,2δ^6"}}, true},
      {"(15,6,10,7)/18", 36, {{"14α^2β,10βγ^3,8αδ^3,6β^2γδ^2"}}, true},
  };
  return data;
}

std::vector<CensusRow> family_census_rows(int family, int f) {
  if (f % 2 != 0 || f < family_min_f(family)) return {};
  const std::string abd = "αβδ";
  auto n = [](int x) { return std::to_string(x); };
  std::vector<CensusRow> rows = {{n(f) + abd + ",2" + pow_str("γ", f / 2)}};
  if (family == 1 && f % 4 == 0) {
    int k = f / 4;
    rows.push_back({n(f - 2) + abd + ",2α" + pow_str("γ", k - 1) + "δ,2β" + pow_str("γ", k + 1)});
    rows.push_back({n(f - 4) + abd + ",4α" + pow_str("γ", k - 1) + "δ,2β^2γ^2", 2});
  }
  if (family == 1 && f == 12) rows.push_back({"6αβδ,6αγ^2δ,2β^3"});
  if (family == 2 && f % 6 == 4) {
    int k = (f - 4) / 6;
    rows.push_back({n(f - 2) + abd + ",2β" + pow_str("γ", (f + 2) / 6) + ",2α" + pow_str("γ", (f - 1) / 3) + "δ"});
    rows.push_back({n(f - 4) + abd + ",4β" + pow_str("γ", (f + 2) / 6) + ",2α^2" + pow_str("γ", (f - 4) / 6) + "δ^2",
                    (k + 2) / 2});
    rows.push_back({n(f - 6) + abd + ",4β" + pow_str("γ", (f + 2) / 6) + ",2αδ^3,2α^2β" + pow_str("γ", (f - 4) / 6),
                    3});
  }
  if (family == 3 && f % 6 == 2 && f >= 14) {
    int k = (f - 2) / 6;
    rows.push_back({n(f - 2) + abd + ",2α" + pow_str("γ", (f - 2) / 6) + "δ,2β" + pow_str("γ", (f + 1) / 3)});
    rows.push_back({n(f - 4) + abd + ",4α" + pow_str("γ", (f - 2) / 6) + "δ,2β^2" + pow_str("γ", (f + 4) / 6),
                    (k + 3) / 2});
    rows.push_back({n(f - 6) + abd + ",6α" + pow_str("γ", (f - 2) / 6) + "δ,2β^3γ"});
  }
  return rows;
}

int ExpectedQuad::tilings() const {
  int t = 0;
  for (const auto& r : rows) t += r.tilings;
  return t;
}

std::vector<ExpectedQuad> expected_quads(int f_max) {
  std::vector<ExpectedQuad> out;
  for (const auto& s : sporadic_quads()) {
    if (s.f > f_max) continue;
    out.push_back({s.f, canonical_orientation(parse_angles(s.angles)), s.angles, s.rows});
  }
  for (int family = 1; family <= 3; ++family) {
    for (int f = family_min_f(family); f <= f_max; f += 2) {
      out.push_back({f, family_angles(family, f), "family" + std::to_string(family) + "@" + std::to_string(f),
                     family_census_rows(family, f)});
    }
  }
  std::sort(out.begin(), out.end(), [](const ExpectedQuad& x, const ExpectedQuad& y) {
    if (x.f != y.f) return x.f < y.f;
    return format_angles(x.angles) < format_angles(y.angles);
  });
  return out;
}

std::optional<std::pair<int, int>> table_counts(int f) {
  if (f < 6 || f % 2 != 0) return std::nullopt;
  static const std::map<int, std::pair<int, int>> special = {
      {6, {4, 4}}, {30, {4, 4}}, {8, {1, 1}}, {12, {8, 12}}, {16, {4, 14}}, {18, {4, 6}}, {20, {5, 13}}, {36, {5, 8}},
  };
  if (auto it = special.find(f); it != special.end()) return it->second;
  const int k = f / 12;
  switch (f % 12) {
    case 0: return std::pair{3, 6};
    case 2: return std::pair{3, k + 6};
    case 4: return std::pair{3, k + 11};
    case 6: return std::pair{3, 3};
    case 8: return std::pair{3, k + 10};
    default: return std::pair{3, k + 8};
  }
}

std::vector<FCount> count_tilings(const std::vector<int>& fs, int search_cap) {
  if (fs.empty()) return {};
  for (int f : fs) {
    if (f > search_cap) {
      throw SearchCapExceeded("counting tilings at f=" + std::to_string(f) + " needs a search cap >= " +
                              std::to_string(f) + " (cap is " + std::to_string(search_cap) + ")");
    }
  }
  ClassifyOptions opts;
  opts.f_max = std::max(6, *std::max_element(fs.begin(), fs.end()));
  opts.search_cap = search_cap;
  auto quads = classify_all(opts);
  std::vector<FCount> out;
  for (int f : fs) {
    FCount c;
    c.f = f;
    for (const auto& rep : quads) {
      if (rep.f != f) continue;
      QuadClass q = make_quad(rep.angles);
      SearchOptions so;
      so.cap = search_cap;
      auto r = search_all_tilings(q, so);
      ++c.quads;
      c.tilings += static_cast<int>(r.tilings.size());
      c.per_quad.emplace_back(q.id(), r.tilings.size());
    }
    out.push_back(std::move(c));
  }
  return out;
}

const std::vector<ConcaveCandidate>& concave_table_candidates() {
  static const std::vector<ConcaveCandidate> data = {
      {"(35,16,18,11)/30", 6},   {"(35,16,18,3)/30", 10},  {"(33,16,22,1)/30", 10},  {"(19,7,9,1)/15", 10},
      {"(41,10,16,3)/30", 12, true}, {"(17,5,9,4)/15", 12, true}, {"(19,3,11,2)/15", 12},
      {"(67,12,50,11)/60", 12},  {"(71,8,54,7)/60", 12},   {"(41,8,18,3)/30", 12},   {"(55,16,18,7)/42", 14},
      {"(49,16,30,1)/42", 14},   {"(43,6,16,1)/30", 20, true}, {"(43,4,18,1)/30", 20},
      {"(83,16,18,13)/60", 24},  {"(71,16,42,1)/60", 24},  {"(23,3,5,1)/15", 30},    {"(41,8,10,5)/30", 30},
      {"(37,8,18,1)/30", 30},    {"(67,16,42,1)/60", 40},  {"(79,16,18,13)/60", 40}, {"(43,6,8,5)/30", 60},
      {"(39,8,10,5)/30", 60},    {"(35,8,18,1)/30", 60},   {"(49,4,6,3)/30", 60},    {"(39,6,16,1)/30", 60},
      {"(47,4,10,1)/30", 60},    {"(77,10,36,1)/60", 60},  {"(59,6,20,1)/42", 84},
  };
  return data;
}

LineSweep halving_line_sweep(int f_max, int den_max) {
  LineSweep out{"alpha=gamma/2,delta=beta/2", {}};
  const Rat third = frac(1, 3);
  for (int f = 6; f <= f_max; f += 2) {
    // 3(alpha + delta) = 2 + 4/f, so beta + gamma = 2(2 + 4/f)/3.
    const Rat total = frac(2, 3) * (Rat(2) + frac(4, f));
    for (int d = 1; d <= den_max; ++d) {
      for (int j = 1; j < d; ++j) {
        Rat g = frac(j, d);
        if (g.den() != d || g <= third) continue;
        Rat b = total - g;
        if (!(g < b && b < Rat(1))) continue;
        out.points.push_back({g / 2, b, g, b / 2});
      }
    }
  }
  return out;
}

LineSweep sixth_line_sweep(bool steep, int f_max) {
  LineSweep out{steep ? "alpha=1/6+gamma/2,beta=2gamma,delta=1/2+3gamma/2"
                      : "alpha=1/6+gamma/2,beta=2gamma,delta=1/2+gamma/2",
                {}};
  const Rat lo = steep ? frac(4, 15) : frac(1, 3);
  const Rat hi = steep ? frac(1, 3) : frac(1, 2);
  for (int f = 6; f <= f_max; f += 2) {
    // The angle sum is 2/3 + 5 gamma (steep) or 2/3 + 4 gamma.
    const Rat slope = steep ? Rat(5) : Rat(4);
    Rat g = (Rat(2) + frac(4, f) - frac(2, 3)) / slope;
    if (!(lo < g && g < hi)) continue;
    Rat d = steep ? frac(1, 2) + frac(3, 2) * g : frac(1, 2) + g / 2;
    out.points.push_back({frac(1, 6) + g / 2, 2 * g, g, d});
  }
  return out;
}

FCount count_tilings_for_f(int f, int search_cap) { return count_tilings({f}, search_cap).front(); }

}  // namespace a3b
