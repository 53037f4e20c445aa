#include <doctest.h>

#include <random>
#include <set>

#include "icolor/constructor.hpp"
#include "icolor/error.hpp"
#include "icolor/verifier.hpp"

using namespace icolor;

namespace {

// K_{1,1,2} with w = (0,0), u0 = (1,0), v0 = (2,0), v1 = (2,1); edges in
// canonical order: w-u0, w-v0, w-v1, u0-v0, u0-v1.
EdgeColoring k112(std::vector<Color> colors, int t = 3) {
  return EdgeColoring(build_graph({1, 1, 2}), t, std::move(colors));
}

}  // namespace

TEST_CASE("an interval 3-coloring of K_{1,1,2} passes") {
  const EdgeColoring c = k112({3, 2, 1, 1, 2});
  const VerifyReport r = verify(c);
  CHECK(r.valid());
  CHECK(r.violations.empty());
  CHECK(spectrum_of(c, {0, 0}) == Spectrum{1, 3, 3});
  CHECK(spectrum_colors(c, {1, 0}) == std::vector<Color>{1, 2, 3});
}

TEST_CASE("a single injected conflict yields exactly one duplicate-color violation") {
  // u0-v0 recolored 1 -> 3 clashes with w-u0 at u0 and nowhere else.
  const VerifyReport r = verify(k112({3, 2, 1, 3, 2}));
  CHECK_FALSE(r.proper);
  REQUIRE(r.violations.size() == 1);
  const Violation& v = r.violations.front();
  CHECK(v.kind == ViolationKind::kDuplicateColor);
  REQUIRE(v.vertex.has_value());
  CHECK(*v.vertex == VertexId{1, 0});
  CHECK(v.colors == std::vector<Color>{3});
  CHECK(v.edges.size() == 2);
  CHECK(std::string(to_string(v.kind)) == "duplicate-color");
}

TEST_CASE("a gap in a spectrum is reported with the expected interval") {
  // K_{1,2}: w sees {1, 3}.
  const EdgeColoring c(build_graph({1, 2}), 3, {1, 3});
  const VerifyReport r = verify(c);
  CHECK(r.proper);
  CHECK_FALSE(r.spectra_are_intervals);
  CHECK_FALSE(r.all_colors_used);
  REQUIRE(r.violations.size() == 2);
  CHECK(r.violations[0].kind == ViolationKind::kNonIntervalSpectrum);
  CHECK(*r.violations[0].vertex == VertexId{0, 0});
  CHECK(r.violations[0].expected_lo == 1);
  CHECK(r.violations[0].expected_hi == 3);
  CHECK(r.violations[1].kind == ViolationKind::kUnusedColor);
  CHECK(r.violations[1].colors == std::vector<Color>{2});
}

TEST_CASE("unused colors are listed ascending") {
  const EdgeColoring c(build_graph({1, 1}), 4, {2});
  const VerifyReport r = verify(c);
  CHECK(r.proper);
  CHECK(r.spectra_are_intervals);
  REQUIRE(r.violations.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r.violations[i].kind == ViolationKind::kUnusedColor);
  }
  CHECK(r.violations[0].colors == std::vector<Color>{1});
  CHECK(r.violations[1].colors == std::vector<Color>{3});
  CHECK(r.violations[2].colors == std::vector<Color>{4});
}

TEST_CASE("report JSON names each kind") {
  const nlohmann::json j = to_json(verify(k112({3, 2, 1, 3, 2})));
  CHECK(j.at("proper") == false);
  CHECK(j.at("violations").at(0).at("kind") == "duplicate-color");
}

TEST_CASE("property: the canonical bipartite coloring has the documented spectra") {
  for (int m = 1; m <= 30; ++m) {
    for (int n = 1; n <= 30; ++n) {
      const EdgeColoring a = alpha_coloring(m, n);
      REQUIRE(a.t() == m + n - 1);
      REQUIRE(verify(a).valid());
      for (int i = 0; i < m; ++i) {
        REQUIRE(spectrum_of(a, {0, i}) == Spectrum{i + 1, i + n, n});
      }
      for (int j = 0; j < n; ++j) {
        REQUIRE(spectrum_of(a, {1, j}) == Spectrum{j + 1, j + m, m});
      }
    }
  }
}

TEST_CASE("property: verdicts agree with a direct check on random colorings") {
  std::mt19937 rng(7);
  for (const auto& parts : std::vector<std::vector<int>>{{1, 1, 2}, {2, 3}, {1, 2, 2}, {2, 2, 2}}) {
    auto g = build_graph(parts);
    const auto edges = g->edges();
    for (int t = g->max_degree(); t <= g->max_degree() + 3; ++t) {
      for (int trial = 0; trial < 400; ++trial) {
        std::vector<Color> colors(edges.size());
        for (auto& c : colors) c = std::uniform_int_distribution<int>(1, t)(rng);
        // Start from a valid coloring now and then so both verdicts occur.
        if (trial % 4 == 0 && parts == std::vector<int>{2, 3} && t == 4) {
          const EdgeColoring a = alpha_coloring(2, 3);
          colors.assign(a.colors().begin(), a.colors().end());
        }
        bool proper = true;
        bool intervals = true;
        for (const VertexId v : g->vertices()) {
          std::set<Color> seen;
          int count = 0;
          for (EdgeIndex e = 0; e < edges.size(); ++e) {
            if (!edges[e].touches(v)) continue;
            seen.insert(colors[e]);
            ++count;
          }
          if (static_cast<int>(seen.size()) != count) proper = false;
          if (*seen.rbegin() - *seen.begin() + 1 != static_cast<int>(seen.size())) {
            intervals = false;
          }
        }
        const std::set<Color> used(colors.begin(), colors.end());
        const bool surjective = static_cast<int>(used.size()) == t;

        const VerifyReport r = verify(EdgeColoring(g, t, colors));
        REQUIRE(r.proper == proper);
        REQUIRE(r.spectra_are_intervals == intervals);
        REQUIRE(r.all_colors_used == surjective);
        REQUIRE(r.valid() == r.violations.empty());
      }
    }
  }
}
