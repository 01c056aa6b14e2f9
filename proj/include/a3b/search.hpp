#pragma once

// Exhaustive backtracking enumeration of edge-to-edge tilings by f copies of a quad.

#include "a3b/quad.hpp"
#include "a3b/tiling.hpp"
#include "a3b/vertex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace a3b {

class SearchCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultSearchCap = 20;

// Counting convention for tilings: isomorphism of corner-labeled maps,
// with or without global reflection.
inline constexpr bool kCountUpToReflection = true;

struct SearchOptions {
  std::optional<std::size_t> limit;        // stop after this many distinct tilings
  std::optional<std::uint64_t> node_budget;  // give up (complete = false) after this many nodes
  int cap = kDefaultSearchCap;             // refuse f above this
  bool allow_reflection = kCountUpToReflection;
  std::optional<std::vector<VertexType>> avc;  // restrict admissible vertex types
  bool use_balance = true;                 // prune closed censuses against the counting system
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t complete_hits = 0;  // complete tilings reached, before deduplication
  std::size_t balance_solutions = 0;
};

struct SearchResult {
  std::vector<CombinatorialTiling> tilings;  // one representative per key, ordered by key
  std::vector<std::string> keys;
  bool complete = true;  // false when the node budget or the limit stopped the search
  SearchStats stats;
};

SearchResult search_all_tilings(const QuadClass& q, const SearchOptions& opts = {});

// Local refutation of a vertex type: seeds a vertex forced to close as `type`
// and tries to close every vertex of the tiles around it. Returns false when
// no such neighbourhood exists (the type cannot occur in any tiling), true when one
// was found or the budget ran out.
bool vertex_type_feasible(const QuadClass& q, const std::vector<VertexType>& avc, const VertexType& type,
                          std::uint64_t node_budget = 200000);

struct RefinedTypes {
  std::vector<VertexType> kept;
  std::vector<VertexType> removed;  // in removal order
};

// Repeats the local refutation until no further type drops out.
RefinedTypes refine_vertex_types(const QuadClass& q, const std::vector<VertexType>& types,
                                 std::uint64_t node_budget = 200000);

}  // namespace a3b
