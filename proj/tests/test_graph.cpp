#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "icolor/coloring_json.hpp"
#include "icolor/constructor.hpp"
#include "icolor/error.hpp"
#include "icolor/graph.hpp"
#include "icolor/verifier.hpp"
#include "support/naive_oracle.hpp"

using namespace icolor;

namespace {

// Edge count from the definition: every pair of vertices in distinct parts.
EdgeIndex count_pairs(const std::vector<int>& parts) {
  EdgeIndex n = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (std::size_t q = p + 1; q < parts.size(); ++q) {
      n += static_cast<EdgeIndex>(parts[p]) * static_cast<EdgeIndex>(parts[q]);
    }
  }
  return n;
}

}  // namespace

TEST_CASE("part sizes are validated") {
  CHECK_THROWS_AS(CompleteMultipartite({}), InvalidPartSizes);
  CHECK_THROWS_AS(CompleteMultipartite({2, 0}), InvalidPartSizes);
  CHECK_THROWS_AS(CompleteMultipartite({-1, 3}), InvalidPartSizes);
  CHECK_NOTHROW(CompleteMultipartite({3}));
}

TEST_CASE("edges never join a part to itself") {
  CHECK_THROWS_AS(Edge::make({1, 0}, {1, 2}), InvalidEdge);
  const Edge e = Edge::make({2, 1}, {0, 3});
  CHECK(e.a() == VertexId{0, 3});
  CHECK(e.b() == VertexId{2, 1});
  CHECK(e.other({0, 3}) == VertexId{2, 1});
}

TEST_CASE("K_{1,2,3} enumeration") {
  const CompleteMultipartite g({1, 2, 3});
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 11);
  CHECK(g.max_degree() == 5);
  CHECK(g.degree({0, 0}) == 5);
  CHECK(g.degree({1, 1}) == 4);
  CHECK(g.degree({2, 2}) == 3);
  CHECK(g.edge_at(0) == Edge::make({0, 0}, {1, 0}));
  CHECK(g.edge_at(10) == Edge::make({1, 1}, {2, 2}));
  CHECK_THROWS_AS(g.degree({3, 0}), InvalidVertex);
  CHECK_THROWS_AS(g.degree({1, 2}), InvalidVertex);
}

TEST_CASE("property: edge count, degrees and enumeration order for every sum <= 12") {
  for (const auto& parts : testing::multipartite_up_to_edges(36)) {
    int sum = 0;
    for (int p : parts) sum += p;
    if (sum > 12) continue;
    CAPTURE(parts);
    const CompleteMultipartite g(parts);
    REQUIRE(g.edge_count() == count_pairs(parts));

    const auto edges = g.edges();
    REQUIRE(edges.size() == g.edge_count());
    CHECK(std::is_sorted(edges.begin(), edges.end()));
    CHECK(std::adjacent_find(edges.begin(), edges.end()) == edges.end());

    EdgeIndex degree_sum = 0;
    for (const VertexId v : g.vertices()) {
      REQUIRE(g.vertex_at(g.flat(v)) == v);
      const int expected = sum - parts[static_cast<std::size_t>(v.part)];
      CHECK(g.degree(v) == expected);
      const auto inc = g.incident_edges(v);
      CHECK(inc.size() == static_cast<std::size_t>(expected));
      for (EdgeIndex i : inc) CHECK(edges[i].touches(v));
      degree_sum += static_cast<EdgeIndex>(g.degree(v));
    }
    CHECK(degree_sum == 2 * g.edge_count());
    for (EdgeIndex i = 0; i < edges.size(); ++i) {
      REQUIRE(g.edge_index(edges[i]) == i);
      REQUIRE(g.edge_index(edges[i].b(), edges[i].a()) == i);
    }
  }
}

TEST_CASE("colorings enforce totality and range") {
  auto g = build_graph({1, 2});
  CHECK_THROWS_AS(EdgeColoring(g, 2, {1}), MalformedColoring);
  CHECK_THROWS_AS(EdgeColoring(g, 2, {1, 3}), MalformedColoring);
  CHECK_THROWS_AS(EdgeColoring(g, 2, {0, 1}), MalformedColoring);
  CHECK_THROWS_AS(EdgeColoring(g, 0, {1, 1}), MalformedColoring);
  const EdgeColoring c(g, 2, {2, 1});
  CHECK(c.min_color() == 1);
  CHECK(c.max_color() == 2);
  CHECK(c.color({1, 1}, {0, 0}) == 1);
}

TEST_CASE("shift_colors") {
  const EdgeColoring base = alpha_coloring(2, 3);  // colors 1..4
  SUBCASE("shift up grows the budget") {
    const EdgeColoring up = shift_colors(base, 3);
    CHECK(up.t() == base.t() + 3);
    CHECK(up.min_color() == 4);
  }
  SUBCASE("shift down tightens the budget to the largest color") {
    const EdgeColoring up = shift_colors(base, 5);
    const EdgeColoring down = shift_colors(up, -5);
    CHECK(down == base);
  }
  SUBCASE("underflow") { CHECK_THROWS_AS(shift_colors(base, -1), ColorUnderflow); }
}

TEST_CASE("property: shifting up then down is the identity and keeps interval spectra") {
  std::mt19937 rng(12345);
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const EdgeColoring base = alpha_coloring(m, n);
      const int k = std::uniform_int_distribution<int>(1, 40)(rng);
      const EdgeColoring up = shift_colors(base, k);
      CHECK(shift_colors(up, -k) == base);
      for (const VertexId v : base.graph().vertices()) {
        const Spectrum s = spectrum_of(base, v);
        const Spectrum su = spectrum_of(up, v);
        CHECK(su.is_interval());
        CHECK(su.lo == s.lo + k);
        CHECK(su.hi == s.hi + k);
      }
    }
  }
}

TEST_CASE("coloring documents round-trip") {
  const EdgeColoring c = extend_to_k1mn(2, 3);
  std::istringstream in(format_coloring(c));
  CHECK(read_coloring(in) == c);
  CHECK(coloring_from_json(to_json(c)) == c);

  SUBCASE("any edge order and endpoint order is accepted") {
    nlohmann::json doc = to_json(c);
    auto& edges = doc["edges"];
    std::reverse(edges.begin(), edges.end());
    std::swap(edges[0]["a"], edges[0]["b"]);
    CHECK(coloring_from_json(doc) == c);
  }
  SUBCASE("duplicates, gaps and zero colors are rejected") {
    nlohmann::json dup = to_json(c);
    dup["edges"][1] = dup["edges"][0];
    CHECK_THROWS_AS(coloring_from_json(dup), MalformedColoring);

    nlohmann::json missing = to_json(c);
    missing["edges"].erase(missing["edges"].begin());
    CHECK_THROWS_AS(coloring_from_json(missing), MalformedColoring);

    nlohmann::json zero = to_json(c);
    zero["edges"][0]["color"] = 0;
    CHECK_THROWS_AS(coloring_from_json(zero), MalformedColoring);

    nlohmann::json same_part = to_json(c);
    same_part["edges"][0]["b"] = {1, 1};
    same_part["edges"][0]["a"] = {1, 0};
    CHECK_THROWS_AS(coloring_from_json(same_part), MalformedColoring);
  }
  SUBCASE("truncated text") {
    std::string text = format_coloring(c);
    std::istringstream cut(text.substr(0, text.size() / 2));
    CHECK_THROWS_AS(read_coloring(cut), MalformedColoring);
  }
}
