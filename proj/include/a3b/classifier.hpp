#pragma once

// Enumeration of the rational a^3b quadrilaterals that tile the sphere.
//
// Candidates come from solving the sine constraint branch by branch: each of
// its four arguments is folded into [0, 1/2], the folded values are matched
// against the rational solution classes of sin x1 sin x2 = sin x3 sin x4, and
// the angle sum plus (for the one-parameter classes) a degree 3 vertex pin the
// angles for every f. Survivors then pass realizability, the admissibility
// filters and a tileability decision.

#include "a3b/quad.hpp"
#include "a3b/search.hpp"
#include "a3b/vertex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace a3b {

// How a candidate was settled.
enum class Tileability {
  not_checked,  // dismissed before the question came up
  earth_map,    // alpha+beta+delta = 2 and gamma = 4/f
  fixture,      // an exceptional fixture validates for it
  found,        // the search produced a tiling
  refuted,      // exhaustive search or local refutation: no tiling
  undecided,    // budgets ran out
};

std::string to_string(Tileability t);

struct CandidateReport {
  QuadAngles angles;       // canonical orientation
  int f = 0;
  std::string matched;     // solution class and branch that produced it
  std::string enumerator;  // convex, concave-alpha, concave-beta, degenerate
  std::optional<std::string> dismissal;  // none iff the quad is kept
  Tileability tileability = Tileability::not_checked;
  std::vector<VertexType> avc;  // vertex types left after refinement
  std::size_t balance_solutions = 0;

  std::string id() const;
};

struct ClassifyOptions {
  int f_max = 64;
  bool audit = false;                      // keep dismissed rows
  int search_cap = kDefaultSearchCap;      // exhaustive search up to this f
  std::uint64_t node_budget = 2000000;     // per search beyond the cap
  std::uint64_t local_budget = 200000;     // per local vertex refutation
};

// Raw solutions of the sine constraint with f <= f_max, canonicalized and
// deduplicated, before any filter.
std::vector<CandidateReport> sine_candidates(int f_max);

// The enumerators split the candidates by the shape of the quad.
std::vector<CandidateReport> enumerate_convex(const ClassifyOptions& opts);
std::vector<CandidateReport> enumerate_concave_alpha(const ClassifyOptions& opts);
std::vector<CandidateReport> enumerate_concave_beta(const ClassifyOptions& opts);
std::vector<CandidateReport> enumerate_degenerate(const ClassifyOptions& opts);

// Union of the four, ordered by (f, angles). Throws std::invalid_argument
// when f_max < 6.
std::vector<CandidateReport> classify_all(const ClassifyOptions& opts);

// Settles one quad: filters, counting system, then tileability.
CandidateReport assess(const QuadAngles& angles, const ClassifyOptions& opts, const std::string& matched = "");

// TSV with a header row: f, quad, class, enumerator, matched, decision, reason.
std::string audit_tsv(const std::vector<CandidateReport>& rows);

}  // namespace a3b
