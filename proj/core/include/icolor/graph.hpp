#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace icolor {

using Color = int;
using EdgeIndex = std::size_t;

struct VertexId {
  int part = 0;
  int index = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

// An edge between two vertices of distinct parts, always stored with a < b.
class Edge {
 public:
  // Canonicalizes the endpoint order. Throws InvalidEdge when both endpoints
  // lie in the same part.
  static Edge make(VertexId x, VertexId y);

  VertexId a() const { return a_; }
  VertexId b() const { return b_; }

  bool touches(VertexId v) const { return a_ == v || b_ == v; }
  VertexId other(VertexId v) const { return v == a_ ? b_ : a_; }

  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  Edge(VertexId a, VertexId b) : a_(a), b_(b) {}
  VertexId a_;
  VertexId b_;
};

// Complete multipartite graph K_{s_0, s_1, ...}. Vertices are numbered
// lexicographically by (part, index); edges are enumerated lexicographically
// by (a, b). Immutable after construction.
class CompleteMultipartite {
 public:
  // Throws InvalidPartSizes for an empty list or a non-positive entry.
  explicit CompleteMultipartite(std::vector<int> part_sizes);

  const std::vector<int>& part_sizes() const { return part_sizes_; }
  int part_count() const { return static_cast<int>(part_sizes_.size()); }
  int vertex_count() const { return vertex_count_; }
  EdgeIndex edge_count() const { return edge_count_; }

  bool contains(VertexId v) const;
  int degree(VertexId v) const;
  int max_degree() const;

  // Dense vertex number in [0, vertex_count()).
  int flat(VertexId v) const;
  VertexId vertex_at(int flat_index) const;

  EdgeIndex edge_index(const Edge& e) const;
  EdgeIndex edge_index(VertexId x, VertexId y) const;
  Edge edge_at(EdgeIndex i) const;

  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;

  // Edge indices incident to v, ascending.
  std::vector<EdgeIndex> incident_edges(VertexId v) const;

  friend bool operator==(const CompleteMultipartite& x,
                         const CompleteMultipartite& y) {
    return x.part_sizes_ == y.part_sizes_;
  }

 private:
  void check_vertex(VertexId v) const;

  std::vector<int> part_sizes_;
  std::vector<int> part_offset_;  // first flat index of each part
  std::vector<EdgeIndex> first_edge_;  // per flat vertex, index of its first edge as `a`
  int vertex_count_ = 0;
  EdgeIndex edge_count_ = 0;
};

std::shared_ptr<const CompleteMultipartite> build_graph(std::vector<int> part_sizes);

std::vector<Edge> edges_of(const CompleteMultipartite& graph);

// Total assignment of colors 1..t to the edges of a graph, stored densely in
// edge-enumeration order. Construction enforces totality and range; whether
// the assignment is an interval coloring is the verifier's business.
class EdgeColoring {
 public:
  // Throws MalformedColoring when t < 1, the color count differs from the
  // edge count, or a color lies outside 1..t.
  EdgeColoring(std::shared_ptr<const CompleteMultipartite> graph, int t,
               std::vector<Color> colors);

  const CompleteMultipartite& graph() const { return *graph_; }
  const std::shared_ptr<const CompleteMultipartite>& graph_ptr() const { return graph_; }
  int t() const { return t_; }

  Color color(EdgeIndex i) const { return colors_[i]; }
  Color color(const Edge& e) const { return colors_[graph_->edge_index(e)]; }
  Color color(VertexId x, VertexId y) const {
    return colors_[graph_->edge_index(x, y)];
  }
  std::span<const Color> colors() const { return colors_; }

  Color min_color() const;
  Color max_color() const;

  friend bool operator==(const EdgeColoring& x, const EdgeColoring& y) {
    return x.t_ == y.t_ && x.colors_ == y.colors_ && *x.graph_ == *y.graph_;
  }

 private:
  std::shared_ptr<const CompleteMultipartite> graph_;
  int t_;
  std::vector<Color> colors_;
};

struct Spectrum {
  Color lo = 0;
  Color hi = 0;
  int size = 0;

  bool is_interval() const { return size == 0 || size == hi - lo + 1; }
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

// Translates every color by delta. For delta > 0 the budget grows by delta;
// for delta < 0 the budget becomes the largest color in use. Throws
// ColorUnderflow when any color would drop below 1.
EdgeColoring shift_colors(const EdgeColoring& coloring, int delta);

}  // namespace icolor
