#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "icolor/graph.hpp"

namespace icolor {

inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;
inline constexpr EdgeIndex kDefaultEdgeLimit = 36;
inline constexpr int kMaxSearchColors = 127;

struct SearchOptions {
  std::uint64_t node_limit = kDefaultNodeLimit;
  EdgeIndex edge_limit = kDefaultEdgeLimit;
  // Only try first-edge colors in the lower half; c -> t+1-c maps interval
  // colorings to interval colorings, so existence is unaffected.
  bool reflection = true;
  // Swapping two vertices of one part is an automorphism. Require the
  // canonical orbit representative: colors on the edges from vertex (0:0) to
  // each part p >= 1 increase with the index, and so do the colors on the
  // edges from part 0 to the first vertex of part 1. The lexicographically
  // first coloring always satisfies this, so witnesses are unchanged.
  bool vertex_symmetry = true;
};

struct SearchOutcome {
  bool exists = false;
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes_explored = 0;
  int t = 0;
};

// Complete backtracking search for an interval t-coloring. Edges are colored
// in canonical order, colors tried ascending, so the witness is the
// lexicographically first interval t-coloring. A "no" is only returned after
// the search space is exhausted.
//
// Throws PreconditionError for graphs with a single part or t < max degree,
// ResourceLimit when the edge budget or the node budget is exceeded.
SearchOutcome search(std::shared_ptr<const CompleteMultipartite> graph, int t,
                     const SearchOptions& options = {});

struct FeasibleRange {
  int t_min = 0;  // max degree
  int t_max = 0;  // 2|V| - 4
  std::vector<SearchOutcome> verdicts;  // one per t in [t_min, t_max]
  std::uint64_t nodes_explored = 0;

  bool colorable() const;
  std::optional<int> min_t() const;  // w(G)
  std::optional<int> max_t() const;  // W(G)
  std::vector<int> feasible() const;
};

// Scans every t from max degree up to 2|V| - 4. Throws PreconditionError for
// fewer than 3 vertices or a single part; propagates ResourceLimit.
FeasibleRange feasible_t_range(std::shared_ptr<const CompleteMultipartite> graph,
                               const SearchOptions& options = {});

// Search budget from ICOLOR_NODE_LIMIT when set to a positive integer,
// otherwise `fallback`.
std::uint64_t node_limit_from_env(std::uint64_t fallback = kDefaultNodeLimit);

}  // namespace icolor
