#pragma once

// Combinatorial a^3b tilings. Each tile has corner labels 0..3 (alpha..delta)
// and edge slots 0..3: slot s joins corners s and s+1, slot 3 is the b-edge.
// Chirality +1 means alpha, beta, gamma, delta run counterclockwise.

#include "a3b/quad.hpp"
#include "a3b/vertex.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace a3b {

struct EdgeRef {
  int tile = -1;
  int slot = -1;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

struct CornerRef {
  int tile = -1;
  int label = -1;  // Corner
  friend bool operator==(const CornerRef&, const CornerRef&) = default;
  friend auto operator<=>(const CornerRef&, const CornerRef&) = default;
};

inline bool is_b_slot(int slot) { return slot == 3; }

// Counterclockwise position of a slot / corner label and back.
inline int ccw_of_slot(int chirality, int slot) { return chirality > 0 ? slot : 3 - slot; }
inline int slot_of_ccw(int chirality, int p) { return chirality > 0 ? p : 3 - p; }
inline int label_of_ccw(int chirality, int c) { return chirality > 0 ? c : (4 - c) % 4; }
inline int ccw_of_label(int chirality, int label) { return chirality > 0 ? label : (4 - label) % 4; }

struct CombinatorialTiling {
  std::vector<int> chirality;                // +1 or -1 per tile
  std::vector<std::array<EdgeRef, 4>> glue;  // partner of each slot

  int f() const { return static_cast<int>(chirality.size()); }
  int add_tile(int chi);
  void connect(EdgeRef x, EdgeRef y);
  EdgeRef partner(EdgeRef e) const { return glue[e.tile][e.slot]; }

  // Corner orbits; each vertex lists its corners in rotation order,
  // starting from its smallest corner. Vertices are sorted by that corner.
  std::vector<std::vector<CornerRef>> vertices() const;
  Census census() const;
  CombinatorialTiling mirrored() const;
};

// The next corner around the vertex, crossing the counterclockwise outgoing
// edge of the current corner.
CornerRef next_corner(const CombinatorialTiling& t, CornerRef c);

// Structural checks; with a quad also angle sums, parity and the counting system.
std::vector<std::string> validate(const CombinatorialTiling& t, const QuadClass* q = nullptr);
inline std::vector<std::string> validate(const CombinatorialTiling& t, const QuadClass& q) { return validate(t, &q); }

// Isomorphism invariant of the corner-labeled map; with allow_reflection the
// mirror image gets the same key.
std::string canonical_key(const CombinatorialTiling& t, bool allow_reflection = true);

// Applies a tile permutation (new index of tile i is perm[i]).
CombinatorialTiling relabel_tiles(const CombinatorialTiling& t, const std::vector<int>& perm);

nlohmann::ordered_json tiling_to_json(const CombinatorialTiling& t, const QuadClass& q);
// Parses the tiling JSON; schema problems are thrown as std::invalid_argument
// naming the offending path.
CombinatorialTiling tiling_from_json(const nlohmann::json& j);

std::string census_str(const Census& c);

}  // namespace a3b
