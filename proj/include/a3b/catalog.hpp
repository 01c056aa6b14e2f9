#pragma once

// Reference data for the classification: the sporadic quads with their
// vertex censuses, the census rows of the three families, and the table of
// quad and tiling counts per f.

#include "a3b/classifier.hpp"
#include "a3b/quad.hpp"
#include "a3b/vertex.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace a3b {

// One census row; `tilings` distinct tilings share it.
struct CensusRow {
  std::string census;  // "6αβδ,2γ^3"
  int tilings = 1;
};

struct SporadicQuad {
  std::string angles;  // "(6,3,4,3)/6"
  int f = 0;
  std::vector<CensusRow> rows;
  // Tilings beyond the earth map and its flips.
  bool exceptional = false;
};

const std::vector<SporadicQuad>& sporadic_quads();

// Census rows of family member f (empty below the family's first f).
std::vector<CensusRow> family_census_rows(int family, int f);

struct ExpectedQuad {
  int f = 0;
  QuadAngles angles;  // canonical orientation
  std::string label;  // the sporadic angles or "familyN@f"
  std::vector<CensusRow> rows;
  int tilings() const;
};

// Every quad of the classification with f <= f_max, ordered by (f, angles).
std::vector<ExpectedQuad> expected_quads(int f_max);

// Q(f) and T(f) from the closed table; nullopt for odd f or f < 6.
std::optional<std::pair<int, int>> table_counts(int f);

struct FCount {
  int f = 0;
  int quads = 0;
  int tilings = 0;
  std::vector<std::pair<std::string, std::size_t>> per_quad;  // quad id, tilings found
};

// Candidates with an angle >= 1 from the sporadic sine rows. Only the
// rows with `survives` carry a vertex αβδ or αγδ.
struct ConcaveCandidate {
  std::string angles;
  int f = 0;
  bool survives = false;
};
const std::vector<ConcaveCandidate>& concave_table_candidates();

// Points of the convex one- and two-parameter lines that must admit no
// solution of the counting system.
struct LineSweep {
  std::string name;
  std::vector<QuadAngles> points;
};
// alpha = gamma/2, delta = beta/2 with gamma < beta < 1, gamma = j/d for d <= den_max.
LineSweep halving_line_sweep(int f_max, int den_max);
// alpha = 1/6 + gamma/2, beta = 2 gamma, delta = 1/2 + gamma/2 on 1/3 < gamma < 1/2 (steep = false)
// or delta = 1/2 + 3 gamma/2 on 4/15 < gamma < 1/3 (steep = true).
LineSweep sixth_line_sweep(bool steep, int f_max);

// Classifies at f and counts the tilings of every surviving quad by
// exhaustive search. Throws SearchCapExceeded when f > search_cap.
FCount count_tilings_for_f(int f, int search_cap = kDefaultSearchCap);

// Same for several f with one classification run.
std::vector<FCount> count_tilings(const std::vector<int>& fs, int search_cap = kDefaultSearchCap);

}  // namespace a3b
