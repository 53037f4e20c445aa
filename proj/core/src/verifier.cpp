#include "icolor/verifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "icolor/coloring_json.hpp"
#include "icolor/error.hpp"

namespace icolor {

namespace {

std::string vertex_label(VertexId v) {
  std::ostringstream os;
  os << "(" << v.part << ":" << v.index << ")";
  return os.str();
}

std::string join(const std::vector<Color>& colors) {
  std::ostringstream os;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i) os << ",";
    os << colors[i];
  }
  return os.str();
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDuplicateColor:
      return "duplicate-color";
    case ViolationKind::kNonIntervalSpectrum:
      return "non-interval-spectrum";
    case ViolationKind::kUnusedColor:
      return "unused-color";
  }
  return "unknown";
}

std::vector<Color> spectrum_colors(const EdgeColoring& coloring, VertexId v) {
  std::vector<Color> out;
  for (EdgeIndex i : coloring.graph().incident_edges(v)) {
    out.push_back(coloring.color(i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Spectrum spectrum_of(const EdgeColoring& coloring, VertexId v) {
  const auto colors = spectrum_colors(coloring, v);
  if (colors.empty()) return {};
  return {colors.front(), colors.back(), static_cast<int>(colors.size())};
}

VerifyReport verify(const EdgeColoring& coloring) {
  const auto& graph = coloring.graph();
  const int t = coloring.t();
  for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
    if (coloring.color(i) < 1 || coloring.color(i) > t) {
      throw MalformedColoring("color " + std::to_string(coloring.color(i)) + " outside 1.." +
                              std::to_string(t));
    }
  }

  VerifyReport report;
  std::vector<bool> used(static_cast<std::size_t>(t) + 1, false);

  for (const VertexId v : graph.vertices()) {
    std::map<Color, std::vector<Edge>> by_color;
    for (EdgeIndex i : graph.incident_edges(v)) {
      by_color[coloring.color(i)].push_back(graph.edge_at(i));
      used[static_cast<std::size_t>(coloring.color(i))] = true;
    }
    for (auto& [c, edges] : by_color) {
      if (edges.size() < 2) continue;
      report.proper = false;
      Violation viol{ViolationKind::kDuplicateColor, v, edges, {c}, 0, 0, {}};
      viol.detail = "vertex " + vertex_label(v) + " has " + std::to_string(edges.size()) +
                    " incident edges with color " + std::to_string(c);
      report.violations.push_back(std::move(viol));
    }
    if (by_color.empty()) continue;
    const Color lo = by_color.begin()->first;
    const Color hi = by_color.rbegin()->first;
    const int size = static_cast<int>(by_color.size());
    if (size != hi - lo + 1) {
      report.spectra_are_intervals = false;
      std::vector<Color> spectrum;
      for (const auto& entry : by_color) spectrum.push_back(entry.first);
      Violation viol{ViolationKind::kNonIntervalSpectrum, v, {}, spectrum, lo, hi, {}};
      std::vector<Color> missing;
      for (Color c = lo; c <= hi; ++c) {
        if (!by_color.count(c)) missing.push_back(c);
      }
      viol.detail = "vertex " + vertex_label(v) + " spectrum {" + join(spectrum) +
                    "} is not an interval; missing {" + join(missing) + "} within [" +
                    std::to_string(lo) + "," + std::to_string(hi) + "]";
      report.violations.push_back(std::move(viol));
    }
  }

  for (Color c = 1; c <= t; ++c) {
    if (used[static_cast<std::size_t>(c)]) continue;
    report.all_colors_used = false;
    Violation viol{ViolationKind::kUnusedColor, std::nullopt, {}, {c}, 1, t, {}};
    viol.detail = "color " + std::to_string(c) + " of 1.." + std::to_string(t) + " is unused";
    report.violations.push_back(std::move(viol));
  }
  return report;
}

nlohmann::json to_json(const Violation& violation) {
  nlohmann::json j{{"kind", to_string(violation.kind)}};
  j["vertex"] = violation.vertex ? to_json(*violation.vertex) : nlohmann::json(nullptr);
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : violation.edges) {
    edges.push_back({{"a", to_json(e.a())}, {"b", to_json(e.b())}});
  }
  j["edges"] = std::move(edges);
  j["colors"] = violation.colors;
  if (violation.kind != ViolationKind::kDuplicateColor) {
    j["expected"] = {violation.expected_lo, violation.expected_hi};
  }
  j["detail"] = violation.detail;
  return j;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) violations.push_back(to_json(v));
  return {{"valid", report.valid()},
          {"proper", report.proper},
          {"spectra_are_intervals", report.spectra_are_intervals},
          {"all_colors_used", report.all_colors_used},
          {"violations", std::move(violations)}};
}

}  // namespace icolor
