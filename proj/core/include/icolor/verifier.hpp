#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "icolor/graph.hpp"

namespace icolor {

enum class ViolationKind {
  kDuplicateColor,      // two incident edges at a vertex share a color
  kNonIntervalSpectrum,  // a vertex's colors are not consecutive
  kUnusedColor,         // a color in 1..t appears on no edge
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<VertexId> vertex;
  std::vector<Edge> edges;    // offending edges, canonical order
  std::vector<Color> colors;  // offending colors (duplicate color, spectrum, or unused color)
  Color expected_lo = 0;      // for spectra: the interval [lo, hi] the colors should fill
  Color expected_hi = 0;
  std::string detail;
};

struct VerifyReport {
  bool proper = true;
  bool spectra_are_intervals = true;
  bool all_colors_used = true;
  std::vector<Violation> violations;

  bool valid() const { return proper && spectra_are_intervals && all_colors_used; }
};

// Checks that `coloring` is an interval t-coloring: proper, every vertex
// spectrum an interval, every color in 1..t used. Violations are listed per
// vertex in vertex order, then unused colors ascending. Throws
// MalformedColoring if a color lies outside 1..t.
VerifyReport verify(const EdgeColoring& coloring);

// Spectrum of v over its incident edge colors. Throws InvalidVertex.
Spectrum spectrum_of(const EdgeColoring& coloring, VertexId v);

// Sorted distinct colors at v.
std::vector<Color> spectrum_colors(const EdgeColoring& coloring, VertexId v);

nlohmann::json to_json(const Violation& violation);
nlohmann::json to_json(const VerifyReport& report);

}  // namespace icolor
