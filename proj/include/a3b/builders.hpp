#pragma once

// Constructive tilings: the 2-layer earth map, its flip modifications, the
// threefold special modification and the exceptional fixtures.

#include "a3b/quad.hpp"
#include "a3b/tiling.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace a3b {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Earth map numbering: tiles 0..n-1 surround the pole at gamma-vertex N,
// tiles n..2n-1 the other pole; tile i and tile n+i share their b-edge (timezone i).
CombinatorialTiling build_earth_map(const QuadClass& q);

enum class FlipKind { first, second };

struct Flip {
  FlipKind kind = FlipKind::first;
  int position = 0;  // first timezone of the patch
};

// m with beta = m*gamma (first kind) or alpha+delta = m*gamma (second kind),
// when the modification is available for q.
std::optional<int> flip_width(const QuadClass& q, FlipKind kind);

CombinatorialTiling flip_first(const CombinatorialTiling& t, const QuadClass& q, int start_timezone);
CombinatorialTiling flip_second(const CombinatorialTiling& t, const QuadClass& q, int start_timezone);
CombinatorialTiling apply_flip(const CombinatorialTiling& t, const QuadClass& q, const Flip& flip);
CombinatorialTiling apply_flip_schedule(const QuadClass& q, const std::vector<Flip>& schedule);

// Second family with f = 6k+4; rotation in {0, 1, 2}.
CombinatorialTiling build_threefold_special(const QuadClass& q, int rotation);

struct ExceptionalTiling {
  QuadClass quad;
  CombinatorialTiling tiling;
};

// which: "f16_a", "f16_b", "f36_a", "f36_b".
ExceptionalTiling build_exceptional(const std::string& which);
std::vector<std::string> exceptional_names();

// Every tiling the builders produce for q (earth map, all disjoint flip
// schedules, special modifications, fixtures), one per canonical key.
std::vector<CombinatorialTiling> constructive_tilings(const QuadClass& q, bool allow_reflection = true);

}  // namespace a3b
