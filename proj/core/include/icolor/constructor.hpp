#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "icolor/graph.hpp"

namespace icolor {

// Largest m or n accepted by the constructors.
inline constexpr int kMaxParameter = 1'000'000;
// Largest edge count for which a dense coloring is materialized.
inline constexpr EdgeIndex kMaxColoringEdges = 50'000'000;

// K_{m,n} with parts [m, n]: u_i = (0, i), v_j = (1, j).
// K_{1,m,n} with parts [1, m, n]: w = (0, 0), u_i = (1, i), v_j = (2, j).
inline constexpr VertexId k1mn_w() { return {0, 0}; }
inline constexpr VertexId k1mn_u(int i) { return {1, i}; }
inline constexpr VertexId k1mn_v(int j) { return {2, j}; }

// The canonical coloring of K_{m,n}: u_i v_j gets color i + j + 1, so
// u_i sees {i+1, ..., i+n} and v_j sees {j+1, ..., j+m}. Uses m + n - 1 colors.
EdgeColoring alpha_coloring(int m, int n);

// Bipartite graph H with sides B = {u'_0..u'_{m-1}, v'_0..v'_{n-1}} (one per
// uncolored star edge u_i w, v_j w of K_{1,m,n}) and C = {c_1..c_{m+n}} (one
// per color). b is joined to c_k when giving the star edge color k keeps its
// non-star endpoint's spectrum an interval on top of alpha_{m,n}:
//   u'_i c_i      (1 <= i <= m-1)      u'_i c_{i+n+1}  (0 <= i <= m-1)
//   v'_j c_j      (1 <= j <= n-1)      v'_j c_{j+m+1}  (0 <= j <= n-1)
// Every vertex has degree at most 2.
//
// Node numbering: u'_i = i, v'_j = m + j, c_k = m + n + k - 1.
class AuxiliaryGraph {
 public:
  AuxiliaryGraph(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int side_size() const { return m_ + n_; }
  int node_count() const { return 2 * (m_ + n_); }

  int u_node(int i) const { return i; }
  int v_node(int j) const { return m_ + j; }
  int c_node(int k) const { return m_ + n_ + k - 1; }

  bool in_b(int node) const { return node < m_ + n_; }
  // Color k of a C-side node.
  int color_of(int c_node) const { return c_node - (m_ + n_) + 1; }

  int degree(int node) const { return degree_[static_cast<std::size_t>(node)]; }
  std::span<const int> neighbors(int node) const {
    return {adjacency_[static_cast<std::size_t>(node)].data(),
            static_cast<std::size_t>(degree(node))};
  }

  // All edges as (b-node, c-node), sorted.
  std::vector<std::pair<int, int>> edges() const;

  // "u'3", "v'0", "c5".
  std::string label(int node) const;

 private:
  void add_edge(int b, int c);

  int m_;
  int n_;
  std::vector<std::array<int, 2>> adjacency_;
  std::vector<int> degree_;
};

AuxiliaryGraph build_aux_graph(int m, int n);

// A connected component of H. Paths are listed from their lower-indexed
// endpoint; cycles start at their lowest node and step to its lower neighbor
// first (the closing edge back to the start is implied).
struct Component {
  bool cycle = false;
  std::vector<int> walk;

  int edge_count() const {
    if (cycle) return static_cast<int>(walk.size());
    return walk.empty() ? 0 : static_cast<int>(walk.size()) - 1;
  }
};

// Components in order of their lowest node.
std::vector<Component> decompose(const AuxiliaryGraph& h);

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (b-node, c-node), sorted by b-node

  bool perfect_for(const AuxiliaryGraph& h) const {
    return static_cast<int>(pairs.size()) == h.side_size();
  }
};

struct NoPerfectMatching {
  Component witness;  // a path component with an even number of edges
};

// Alternate edges along every component: even cycles and odd paths are
// covered exactly; the first even path found (components in order of their
// lowest node) is returned as the reason no perfect matching exists.
std::variant<Matching, NoPerfectMatching> find_matching(const AuxiliaryGraph& h);

// Colors given to the star edges u_i w and v_j w by the matching of H.
struct StarColors {
  std::vector<Color> u;  // u[i] = color of u_i w
  std::vector<Color> v;  // v[j] = color of v_j w
};

// O(m + n) core of the construction. Throws NotColorable (with its parity
// certificate) when gcd(m+1, n+1) > 1, LimitsError above kMaxParameter.
StarColors extend_star_colors(int m, int n);

// Interval (m+n)-coloring of K_{1,m,n}: alpha_{m,n} on the u_i v_j edges and
// the matched colors on the star at w, whose spectrum is {1, ..., m+n}.
EdgeColoring extend_to_k1mn(int m, int n);

// Graphviz rendering of H in three ranks (u' row, c row, v' row). Matched
// edges are drawn bold when a matching is given.
std::string aux_graph_to_dot(const AuxiliaryGraph& h, const Matching* matching = nullptr);

}  // namespace icolor
