#include "icolor/constructor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "icolor/error.hpp"
#include "icolor/obstruction.hpp"

namespace icolor {

namespace {

void check_parameters(int m, int n) {
  if (m < 1 || n < 1) {
    throw PreconditionError("parameters must be positive, got m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
  }
  if (m > kMaxParameter || n > kMaxParameter) {
    throw LimitsError("parameters are capped at " + std::to_string(kMaxParameter));
  }
}

void check_edge_budget(long long edges) {
  if (edges > static_cast<long long>(kMaxColoringEdges)) {
    throw LimitsError("coloring would have " + std::to_string(edges) +
                      " edges; dense colorings are capped at " +
                      std::to_string(kMaxColoringEdges));
  }
}

}  // namespace

EdgeColoring alpha_coloring(int m, int n) {
  check_parameters(m, n);
  check_edge_budget(static_cast<long long>(m) * n);
  auto graph = build_graph({m, n});
  std::vector<Color> colors(graph->edge_count());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      colors[graph->edge_index(VertexId{0, i}, VertexId{1, j})] = i + j + 1;
    }
  }
  return EdgeColoring(std::move(graph), m + n - 1, std::move(colors));
}

AuxiliaryGraph::AuxiliaryGraph(int m, int n) : m_(m), n_(n) {
  check_parameters(m, n);
  const auto nodes = static_cast<std::size_t>(node_count());
  adjacency_.assign(nodes, {-1, -1});
  degree_.assign(nodes, 0);

  for (int i = 0; i < m; ++i) {
    if (i >= 1) add_edge(u_node(i), c_node(i));
    add_edge(u_node(i), c_node(i + n + 1));
  }
  for (int j = 0; j < n; ++j) {
    if (j >= 1) add_edge(v_node(j), c_node(j));
    add_edge(v_node(j), c_node(j + m + 1));
  }
  for (auto& adj : adjacency_) {
    if (adj[1] != -1 && adj[1] < adj[0]) std::swap(adj[0], adj[1]);
  }
}

void AuxiliaryGraph::add_edge(int b, int c) {
  for (int x : {b, c}) {
    auto& deg = degree_[static_cast<std::size_t>(x)];
    if (deg == 2) {
      throw InvariantViolation("auxiliary graph node " + label(x) + " exceeds degree 2");
    }
    adjacency_[static_cast<std::size_t>(x)][static_cast<std::size_t>(deg++)] = x == b ? c : b;
  }
}

std::vector<std::pair<int, int>> AuxiliaryGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int b = 0; b < side_size(); ++b) {
    for (int c : neighbors(b)) out.emplace_back(b, c);
  }
  return out;
}

std::string AuxiliaryGraph::label(int node) const {
  if (node < m_) return "u'" + std::to_string(node);
  if (node < m_ + n_) return "v'" + std::to_string(node - m_);
  return "c" + std::to_string(color_of(node));
}

AuxiliaryGraph build_aux_graph(int m, int n) { return AuxiliaryGraph(m, n); }

std::vector<Component> decompose(const AuxiliaryGraph& h) {
  const int count = h.node_count();
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  std::vector<Component> out;
  std::vector<int> stack;

  for (int root = 0; root < count; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;

    // Collect the component to find its endpoints. Every node reached here is
    // larger than root, since smaller nodes were consumed by earlier passes.
    int start = -1;
    stack.assign(1, root);
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (h.degree(x) < 2 && (start == -1 || x < start)) start = x;
      for (int y : h.neighbors(x)) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }

    Component comp;
    comp.cycle = start == -1;
    if (comp.cycle) start = root;
    int prev = -1;
    int cur = start;
    while (true) {
      comp.walk.push_back(cur);
      const auto nbrs = h.neighbors(cur);
      int next = -1;
      if (comp.cycle && prev == -1) {
        next = nbrs[0];  // lower neighbor
      } else {
        for (int y : nbrs) {
          if (y != prev) {
            next = y;
            break;
          }
        }
      }
      if (next == -1 || next == start) break;
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::variant<Matching, NoPerfectMatching> find_matching(const AuxiliaryGraph& h) {
  const auto components = decompose(h);
  Matching matching;
  std::vector<int> component_of(static_cast<std::size_t>(h.node_count()), -1);

  for (std::size_t ci = 0; ci < components.size(); ++ci) {
    const Component& comp = components[ci];
    for (int x : comp.walk) component_of[static_cast<std::size_t>(x)] = static_cast<int>(ci);

    if (!comp.cycle && comp.edge_count() % 2 == 0) {
      return NoPerfectMatching{comp};
    }
    // Cycles in a bipartite graph are even; odd paths alternate cleanly.
    const auto& walk = comp.walk;
    const std::size_t len = walk.size();
    const std::size_t edges = static_cast<std::size_t>(comp.edge_count());
    for (std::size_t e = 0; e < edges; e += 2) {
      int x = walk[e];
      int y = walk[(e + 1) % len];
      if (!h.in_b(x)) std::swap(x, y);
      matching.pairs.emplace_back(x, y);
    }
  }
  std::sort(matching.pairs.begin(), matching.pairs.end());

  if (!matching.perfect_for(h)) {
    throw InvariantViolation("alternating selection did not cover every node of H");
  }
  // u'_0 and v'_0 are both B-side endpoints; sharing a path would make it even.
  if (component_of[static_cast<std::size_t>(h.u_node(0))] ==
      component_of[static_cast<std::size_t>(h.v_node(0))]) {
    throw InvariantViolation("u'0 and v'0 share a component of a perfectly matched H");
  }
  return matching;
}

StarColors extend_star_colors(int m, int n) {
  check_parameters(m, n);
  if (!gcd_colorability(m, n)) {
    throw NotColorable(parity_certificate(m, n));
  }
  if (m == n) {
    throw InvariantViolation("m = n passed the gcd screen");
  }
  const AuxiliaryGraph h(m, n);
  auto result = find_matching(h);
  if (auto* failure = std::get_if<NoPerfectMatching>(&result)) {
    throw InvariantViolation("H(" + std::to_string(m) + "," + std::to_string(n) +
                             ") has no perfect matching although gcd(m+1, n+1) = 1; "
                             "even path starts at " +
                             h.label(failure->witness.walk.front()));
  }
  const auto& matching = std::get<Matching>(result);

  StarColors star;
  star.u.assign(static_cast<std::size_t>(m), 0);
  star.v.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [b, c] : matching.pairs) {
    const Color k = h.color_of(c);
    if (b < m) {
      star.u[static_cast<std::size_t>(b)] = k;
    } else {
      star.v[static_cast<std::size_t>(b - m)] = k;
    }
  }
  return star;
}

EdgeColoring extend_to_k1mn(int m, int n) {
  const StarColors star = extend_star_colors(m, n);
  check_edge_budget(static_cast<long long>(m) * n + m + n);

  auto graph = build_graph({1, m, n});
  std::vector<Color> colors(graph->edge_count());
  const VertexId w = k1mn_w();
  for (int i = 0; i < m; ++i) {
    colors[graph->edge_index(w, k1mn_u(i))] = star.u[static_cast<std::size_t>(i)];
  }
  for (int j = 0; j < n; ++j) {
    colors[graph->edge_index(w, k1mn_v(j))] = star.v[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      colors[graph->edge_index(k1mn_u(i), k1mn_v(j))] = i + j + 1;
    }
  }
  return EdgeColoring(std::move(graph), m + n, std::move(colors));
}

std::string aux_graph_to_dot(const AuxiliaryGraph& h, const Matching* matching) {
  auto id = [&](int node) {
    if (node < h.m()) return "u" + std::to_string(node);
    if (node < h.side_size()) return "v" + std::to_string(node - h.m());
    return "c" + std::to_string(h.color_of(node));
  };
  auto matched = [&](int b, int c) {
    return matching != nullptr &&
           std::binary_search(matching->pairs.begin(), matching->pairs.end(),
                              std::make_pair(b, c));
  };

  std::ostringstream os;
  os << "graph H_" << h.m() << "_" << h.n() << " {\n";
  os << "  rankdir=TB;\n  splines=line;\n  node [shape=circle, fontsize=10];\n";

  // Column x holds u'_x, c_x and v'_x; the u' row sits on top.
  auto rank = [&](const char* name, int from, int to, int y) {
    os << "  subgraph " << name << " {\n    rank=same;\n";
    for (int node = from; node < to; ++node) {
      const int x = node < h.m()             ? node
                    : node < h.side_size()   ? node - h.m()
                                             : h.color_of(node);
      os << "    " << id(node) << " [label=\"" << h.label(node) << "\", pos=\"" << x << ","
         << y << "!\"];\n";
    }
    os << "  }\n";
  };
  rank("u_row", 0, h.m(), 1);
  rank("c_row", h.side_size(), h.node_count(), 0);
  rank("v_row", h.m(), h.side_size(), -1);

  for (const auto& [b, c] : h.edges()) {
    // Edge direction drives dot's ranking: u' above c, c above v'.
    if (b < h.m()) {
      os << "  " << id(b) << " -- " << id(c);
    } else {
      os << "  " << id(c) << " -- " << id(b);
    }
    if (matched(b, c)) os << " [style=bold, penwidth=2.5]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace icolor
