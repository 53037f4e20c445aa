#include "icolor/graph.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "icolor/error.hpp"

namespace icolor {

namespace {

std::string describe(VertexId v) {
  return "(" + std::to_string(v.part) + ":" + std::to_string(v.index) + ")";
}

}  // namespace

Edge Edge::make(VertexId x, VertexId y) {
  if (x.part == y.part) {
    throw InvalidEdge("edge endpoints " + describe(x) + " and " + describe(y) +
                      " lie in the same part");
  }
  return x < y ? Edge(x, y) : Edge(y, x);
}

CompleteMultipartite::CompleteMultipartite(std::vector<int> part_sizes)
    : part_sizes_(std::move(part_sizes)) {
  if (part_sizes_.empty()) {
    throw InvalidPartSizes("part size list is empty");
  }
  long long total = 0;
  for (int s : part_sizes_) {
    if (s < 1) {
      throw InvalidPartSizes("part size " + std::to_string(s) + " is not positive");
    }
    total += s;
    if (total > INT_MAX / 2) {
      throw LimitsError("vertex count exceeds supported range");
    }
  }
  vertex_count_ = static_cast<int>(total);

  part_offset_.reserve(part_sizes_.size());
  int offset = 0;
  for (int s : part_sizes_) {
    part_offset_.push_back(offset);
    offset += s;
  }

  first_edge_.resize(static_cast<std::size_t>(vertex_count_));
  EdgeIndex running = 0;
  int flat_index = 0;
  for (std::size_t p = 0; p < part_sizes_.size(); ++p) {
    const int part_end = part_offset_[p] + part_sizes_[p];
    for (int i = 0; i < part_sizes_[p]; ++i, ++flat_index) {
      first_edge_[static_cast<std::size_t>(flat_index)] = running;
      running += static_cast<EdgeIndex>(vertex_count_ - part_end);
    }
  }
  edge_count_ = running;
}

bool CompleteMultipartite::contains(VertexId v) const {
  return v.part >= 0 && v.part < part_count() && v.index >= 0 &&
         v.index < part_sizes_[static_cast<std::size_t>(v.part)];
}

void CompleteMultipartite::check_vertex(VertexId v) const {
  if (!contains(v)) {
    throw InvalidVertex("vertex " + describe(v) + " is not in the graph");
  }
}

int CompleteMultipartite::degree(VertexId v) const {
  check_vertex(v);
  return vertex_count_ - part_sizes_[static_cast<std::size_t>(v.part)];
}

int CompleteMultipartite::max_degree() const {
  return vertex_count_ - *std::min_element(part_sizes_.begin(), part_sizes_.end());
}

int CompleteMultipartite::flat(VertexId v) const {
  check_vertex(v);
  return part_offset_[static_cast<std::size_t>(v.part)] + v.index;
}

VertexId CompleteMultipartite::vertex_at(int flat_index) const {
  if (flat_index < 0 || flat_index >= vertex_count_) {
    throw InvalidVertex("flat vertex index " + std::to_string(flat_index) +
                        " out of range");
  }
  auto it = std::upper_bound(part_offset_.begin(), part_offset_.end(), flat_index);
  const int part = static_cast<int>(it - part_offset_.begin()) - 1;
  return {part, flat_index - part_offset_[static_cast<std::size_t>(part)]};
}

EdgeIndex CompleteMultipartite::edge_index(const Edge& e) const {
  const int fa = flat(e.a());
  const int fb = flat(e.b());
  const auto pa = static_cast<std::size_t>(e.a().part);
  const int part_end = part_offset_[pa] + part_sizes_[pa];
  return first_edge_[static_cast<std::size_t>(fa)] +
         static_cast<EdgeIndex>(fb - part_end);
}

EdgeIndex CompleteMultipartite::edge_index(VertexId x, VertexId y) const {
  check_vertex(x);
  check_vertex(y);
  return edge_index(Edge::make(x, y));
}

Edge CompleteMultipartite::edge_at(EdgeIndex i) const {
  if (i >= edge_count_) {
    throw InvalidEdge("edge index " + std::to_string(i) + " out of range");
  }
  auto it = std::upper_bound(first_edge_.begin(), first_edge_.end(), i);
  const int fa = static_cast<int>(it - first_edge_.begin()) - 1;
  const VertexId a = vertex_at(fa);
  const auto pa = static_cast<std::size_t>(a.part);
  const int part_end = part_offset_[pa] + part_sizes_[pa];
  const int fb = part_end + static_cast<int>(i - first_edge_[static_cast<std::size_t>(fa)]);
  return Edge::make(a, vertex_at(fb));
}

std::vector<VertexId> CompleteMultipartite::vertices() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(vertex_count_));
  for (int p = 0; p < part_count(); ++p) {
    for (int i = 0; i < part_sizes_[static_cast<std::size_t>(p)]; ++i) {
      out.push_back({p, i});
    }
  }
  return out;
}

std::vector<Edge> CompleteMultipartite::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  const auto verts = vertices();
  for (std::size_t x = 0; x < verts.size(); ++x) {
    for (std::size_t y = x + 1; y < verts.size(); ++y) {
      if (verts[x].part != verts[y].part) {
        out.push_back(Edge::make(verts[x], verts[y]));
      }
    }
  }
  return out;
}

std::vector<EdgeIndex> CompleteMultipartite::incident_edges(VertexId v) const {
  check_vertex(v);
  std::vector<EdgeIndex> out;
  out.reserve(static_cast<std::size_t>(degree(v)));
  for (int p = 0; p < part_count(); ++p) {
    if (p == v.part) continue;
    for (int i = 0; i < part_sizes_[static_cast<std::size_t>(p)]; ++i) {
      out.push_back(edge_index(v, VertexId{p, i}));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::shared_ptr<const CompleteMultipartite> build_graph(std::vector<int> part_sizes) {
  return std::make_shared<const CompleteMultipartite>(std::move(part_sizes));
}

std::vector<Edge> edges_of(const CompleteMultipartite& graph) { return graph.edges(); }

EdgeColoring::EdgeColoring(std::shared_ptr<const CompleteMultipartite> graph, int t,
                           std::vector<Color> colors)
    : graph_(std::move(graph)), t_(t), colors_(std::move(colors)) {
  if (!graph_) {
    throw MalformedColoring("coloring has no graph");
  }
  if (t_ < 1) {
    throw MalformedColoring("color budget t=" + std::to_string(t_) + " is not positive");
  }
  if (colors_.size() != graph_->edge_count()) {
    throw MalformedColoring("coloring assigns " + std::to_string(colors_.size()) +
                            " colors to a graph with " +
                            std::to_string(graph_->edge_count()) + " edges");
  }
  for (EdgeIndex i = 0; i < colors_.size(); ++i) {
    if (colors_[i] < 1 || colors_[i] > t_) {
      const Edge e = graph_->edge_at(i);
      throw MalformedColoring("edge " + describe(e.a()) + "-" + describe(e.b()) +
                              " has color " + std::to_string(colors_[i]) +
                              " outside 1.." + std::to_string(t_));
    }
  }
}

Color EdgeColoring::min_color() const {
  return colors_.empty() ? 0 : *std::min_element(colors_.begin(), colors_.end());
}

Color EdgeColoring::max_color() const {
  return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

EdgeColoring shift_colors(const EdgeColoring& coloring, int delta) {
  if (delta == 0) return coloring;

  std::vector<Color> shifted(coloring.colors().begin(), coloring.colors().end());
  for (Color& c : shifted) {
    if (static_cast<long long>(c) + delta < 1) {
      throw ColorUnderflow("shifting color " + std::to_string(c) + " by " +
                           std::to_string(delta) + " leaves the positive range");
    }
    if (static_cast<long long>(c) + delta > INT_MAX) {
      throw LimitsError("shifted color exceeds supported range");
    }
    c += delta;
  }

  long long t = static_cast<long long>(coloring.t()) + delta;
  if (delta < 0 && !shifted.empty()) {
    t = *std::max_element(shifted.begin(), shifted.end());
  }
  if (t < 1) {
    throw ColorUnderflow("shifting by " + std::to_string(delta) +
                         " leaves no colors in the budget");
  }
  if (t > INT_MAX) {
    throw LimitsError("shifted color budget exceeds supported range");
  }
  return EdgeColoring(coloring.graph_ptr(), static_cast<int>(t), std::move(shifted));
}

}  // namespace icolor
