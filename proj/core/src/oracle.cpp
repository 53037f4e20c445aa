#include "icolor/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "icolor/error.hpp"

namespace icolor {

namespace {

// Bit c set <=> color c. Bit 0 is never used.
__extension__ typedef unsigned __int128 ColorMask;

constexpr ColorMask bit(Color c) { return ColorMask{1} << c; }

// Colors from..to inclusive; empty when from > to.
constexpr ColorMask range_mask(Color from, Color to) {
  if (from > to) return 0;
  const ColorMask upto = (to + 1 >= 128) ? ~ColorMask{0} : (bit(to + 1) - 1);
  return upto & ~(bit(from) - 1);
}

int popcount(ColorMask m) {
  return __builtin_popcountll(static_cast<unsigned long long>(m)) +
         __builtin_popcountll(static_cast<unsigned long long>(m >> 64));
}

constexpr EdgeIndex kNoEdge = static_cast<EdgeIndex>(-1);

class Searcher {
 public:
  Searcher(const CompleteMultipartite& graph, int t, const SearchOptions& options)
      : t_(t),
        node_limit_(options.node_limit),
        reflection_(options.reflection),
        all_colors_(range_mask(1, t)) {
    const EdgeIndex edge_count = graph.edge_count();
    const auto vertex_count = static_cast<std::size_t>(graph.vertex_count());
    endpoints_.reserve(edge_count);
    incident_.resize(vertex_count);
    for (EdgeIndex i = 0; i < edge_count; ++i) {
      const Edge e = graph.edge_at(i);
      const int a = graph.flat(e.a());
      const int b = graph.flat(e.b());
      endpoints_.push_back({a, b});
      incident_[static_cast<std::size_t>(a)].push_back(i);
      incident_[static_cast<std::size_t>(b)].push_back(i);
    }
    below_.assign(edge_count, kNoEdge);
    if (options.vertex_symmetry) {
      const auto& sizes = graph.part_sizes();
      const VertexId origin{0, 0};
      for (int p = 1; p < graph.part_count(); ++p) {
        for (int i = 1; i < sizes[static_cast<std::size_t>(p)]; ++i) {
          below_[graph.edge_index(origin, VertexId{p, i})] =
              graph.edge_index(origin, VertexId{p, i - 1});
        }
      }
      const VertexId pivot{1, 0};
      for (int i = 1; i < sizes[0]; ++i) {
        below_[graph.edge_index(VertexId{0, i}, pivot)] =
            graph.edge_index(VertexId{0, i - 1}, pivot);
      }
    }
    degree_.resize(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
      degree_[v] = graph.degree(graph.vertex_at(static_cast<int>(v)));
    }
    state_.assign(vertex_count, VertexState{});
    color_uses_.assign(static_cast<std::size_t>(t) + 1, 0);
    colors_.assign(edge_count, 0);
    unused_colors_ = t;
  }

  bool run() { return extend(0); }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Color>& colors() const { return colors_; }

 private:
  struct VertexState {
    int count = 0;
    Color lo = 0;
    Color hi = 0;
    ColorMask used = 0;
  };

  // Colors that keep v's spectrum extendable to d(v) consecutive colors in
  // 1..t and are not yet used at v.
  ColorMask available(std::size_t v) const {
    const VertexState& s = state_[v];
    if (s.count == 0) return all_colors_;
    const int d = degree_[v];
    return range_mask(std::max(1, s.hi - d + 1), std::min(t_, s.lo + d - 1)) & ~s.used;
  }

  void place(std::size_t v, Color c) {
    VertexState& s = state_[v];
    if (s.count == 0) {
      s.lo = s.hi = c;
    } else {
      s.lo = std::min(s.lo, c);
      s.hi = std::max(s.hi, c);
    }
    ++s.count;
    s.used |= bit(c);
  }

  // After coloring edges [0, next), checks that v's uncolored edges can still
  // be colored: each has a candidate color, together they offer enough
  // distinct colors, and they can reach every gap inside v's current span.
  bool viable(std::size_t v, EdgeIndex next) const {
    const VertexState& s = state_[v];
    const int remaining = degree_[v] - s.count;
    if (remaining == 0) return true;
    const ColorMask own = available(v);
    ColorMask reach = 0;
    for (EdgeIndex f : incident_[v]) {
      if (f < next) continue;
      const auto [a, b] = endpoints_[f];
      const auto other = static_cast<std::size_t>(static_cast<std::size_t>(a) == v ? b : a);
      const ColorMask cand = own & available(other);
      if (cand == 0) return false;
      reach |= cand;
    }
    if (popcount(reach) < remaining) return false;
    if (s.count > 0) {
      const ColorMask gaps = range_mask(s.lo, s.hi) & ~s.used;
      if ((gaps & ~reach) != 0) return false;
    }
    return true;
  }

  bool extend(EdgeIndex e) {
    const EdgeIndex total = colors_.size();
    if (e == total) return unused_colors_ == 0;
    // Each remaining edge can introduce at most one new color.
    if (static_cast<EdgeIndex>(unused_colors_) > total - e) return false;

    const auto [a, b] = endpoints_[e];
    const auto va = static_cast<std::size_t>(a);
    const auto vb = static_cast<std::size_t>(b);
    ColorMask candidates = available(va) & available(vb);
    if (e == 0 && reflection_) candidates &= range_mask(1, (t_ + 1) / 2);
    if (below_[e] != kNoEdge) candidates &= range_mask(colors_[below_[e]] + 1, t_);

    const VertexState saved_a = state_[va];
    const VertexState saved_b = state_[vb];
    for (Color c = 1; c <= t_ && candidates != 0; ++c) {
      if ((candidates & bit(c)) == 0) continue;
      candidates &= ~bit(c);
      if (++nodes_ > node_limit_) {
        throw ResourceLimit("search exceeded the node budget of " +
                            std::to_string(node_limit_));
      }
      place(va, c);
      place(vb, c);
      colors_[e] = c;
      const auto slot = static_cast<std::size_t>(c);
      if (color_uses_[slot]++ == 0) --unused_colors_;

      if (viable(va, e + 1) && viable(vb, e + 1) && extend(e + 1)) return true;

      if (--color_uses_[slot] == 0) ++unused_colors_;
      state_[va] = saved_a;
      state_[vb] = saved_b;
    }
    colors_[e] = 0;
    return false;
  }

  int t_;
  std::uint64_t node_limit_;
  bool reflection_;
  ColorMask all_colors_;
  std::vector<std::pair<int, int>> endpoints_;
  std::vector<std::vector<EdgeIndex>> incident_;
  // below_[e]: earlier edge whose color e must exceed, or kNoEdge.
  std::vector<EdgeIndex> below_;
  std::vector<int> degree_;
  std::vector<VertexState> state_;
  std::vector<int> color_uses_;
  std::vector<Color> colors_;
  int unused_colors_ = 0;
  std::uint64_t nodes_ = 0;
};

void check_searchable(const CompleteMultipartite& graph, const SearchOptions& options) {
  if (graph.part_count() < 2) {
    throw PreconditionError("graph with a single part has no edges to color");
  }
  if (graph.edge_count() > options.edge_limit) {
    throw ResourceLimit("graph has " + std::to_string(graph.edge_count()) +
                        " edges; the search budget is " + std::to_string(options.edge_limit));
  }
}

}  // namespace

SearchOutcome search(std::shared_ptr<const CompleteMultipartite> graph, int t,
                     const SearchOptions& options) {
  if (!graph) throw PreconditionError("search needs a graph");
  check_searchable(*graph, options);
  if (t < graph->max_degree()) {
    throw PreconditionError("t=" + std::to_string(t) + " is below the maximum degree " +
                            std::to_string(graph->max_degree()));
  }

  SearchOutcome outcome;
  outcome.t = t;
  // Every color must appear on some edge.
  if (static_cast<EdgeIndex>(t) > graph->edge_count()) return outcome;
  if (t > kMaxSearchColors) {
    throw ResourceLimit("t=" + std::to_string(t) + " exceeds the searchable color range");
  }

  Searcher searcher(*graph, t, options);
  outcome.exists = searcher.run();
  outcome.nodes_explored = searcher.nodes();
  if (outcome.exists) {
    outcome.witness.emplace(std::move(graph), t, searcher.colors());
  }
  return outcome;
}

bool FeasibleRange::colorable() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const SearchOutcome& o) { return o.exists; });
}

std::vector<int> FeasibleRange::feasible() const {
  std::vector<int> out;
  for (const auto& o : verdicts) {
    if (o.exists) out.push_back(o.t);
  }
  return out;
}

std::optional<int> FeasibleRange::min_t() const {
  const auto f = feasible();
  if (f.empty()) return std::nullopt;
  return f.front();
}

std::optional<int> FeasibleRange::max_t() const {
  const auto f = feasible();
  if (f.empty()) return std::nullopt;
  return f.back();
}

FeasibleRange feasible_t_range(std::shared_ptr<const CompleteMultipartite> graph,
                               const SearchOptions& options) {
  if (!graph) throw PreconditionError("search needs a graph");
  if (graph->vertex_count() < 3) {
    throw PreconditionError("the 2|V|-4 ceiling needs at least 3 vertices");
  }
  check_searchable(*graph, options);

  FeasibleRange range;
  range.t_min = graph->max_degree();
  range.t_max = 2 * graph->vertex_count() - 4;
  for (int t = range.t_min; t <= range.t_max; ++t) {
    range.verdicts.push_back(search(graph, t, options));
    range.nodes_explored += range.verdicts.back().nodes_explored;
  }
  return range;
}

std::uint64_t node_limit_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("ICOLOR_NODE_LIMIT");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0 || raw[0] == '-') return fallback;
  return value;
}

}  // namespace icolor
