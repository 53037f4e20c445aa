#include "icolor/coloring_json.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "icolor/error.hpp"

namespace icolor {

namespace {

constexpr Color kUnset = 0;

VertexId vertex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw MalformedColoring("vertex must be a [part, index] integer pair, got " + j.dump());
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

nlohmann::json to_json(VertexId v) { return nlohmann::json::array({v.part, v.index}); }

nlohmann::json to_json(const EdgeColoring& coloring) {
  const auto& graph = coloring.graph();
  nlohmann::json edges = nlohmann::json::array();
  for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
    const Edge e = graph.edge_at(i);
    edges.push_back({{"a", to_json(e.a())}, {"b", to_json(e.b())}, {"color", coloring.color(i)}});
  }
  return {{"part_sizes", graph.part_sizes()}, {"t", coloring.t()}, {"edges", std::move(edges)}};
}

EdgeColoring coloring_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw MalformedColoring("coloring document must be a JSON object");
  }
  for (const char* key : {"part_sizes", "t", "edges"}) {
    if (!doc.contains(key)) {
      throw MalformedColoring(std::string("coloring document is missing \"") + key + "\"");
    }
  }
  const auto& sizes = doc.at("part_sizes");
  if (!sizes.is_array()) {
    throw MalformedColoring("\"part_sizes\" must be an array");
  }
  std::vector<int> part_sizes;
  for (const auto& s : sizes) {
    if (!s.is_number_integer()) {
      throw MalformedColoring("\"part_sizes\" entries must be integers");
    }
    part_sizes.push_back(s.get<int>());
  }
  if (!doc.at("t").is_number_integer()) {
    throw MalformedColoring("\"t\" must be an integer");
  }
  const int t = doc.at("t").get<int>();
  const auto& edges = doc.at("edges");
  if (!edges.is_array()) {
    throw MalformedColoring("\"edges\" must be an array");
  }

  auto graph = build_graph(std::move(part_sizes));
  if (edges.size() != graph->edge_count()) {
    throw MalformedColoring("document lists " + std::to_string(edges.size()) +
                            " edges, graph has " + std::to_string(graph->edge_count()));
  }

  std::vector<Color> colors(graph->edge_count(), kUnset);
  for (const auto& rec : edges) {
    if (!rec.is_object() || !rec.contains("a") || !rec.contains("b") ||
        !rec.contains("color") || !rec.at("color").is_number_integer()) {
      throw MalformedColoring("edge record must have \"a\", \"b\" and integer \"color\": " +
                              rec.dump());
    }
    const VertexId a = vertex_from_json(rec.at("a"));
    const VertexId b = vertex_from_json(rec.at("b"));
    if (!graph->contains(a) || !graph->contains(b) || a.part == b.part) {
      throw MalformedColoring("edge record does not name an edge of the graph: " + rec.dump());
    }
    const EdgeIndex idx = graph->edge_index(a, b);
    if (colors[idx] != kUnset) {
      throw MalformedColoring("edge listed twice: " + rec.dump());
    }
    const Color c = rec.at("color").get<Color>();
    if (c == kUnset) {
      throw MalformedColoring("edge has color 0: " + rec.dump());
    }
    colors[idx] = c;
  }
  return EdgeColoring(std::move(graph), t, std::move(colors));
}

std::string dump_document(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

EdgeColoring read_coloring(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedColoring(std::string("coloring document does not parse: ") + e.what());
  }
  return coloring_from_json(doc);
}

std::string format_coloring(const EdgeColoring& coloring) {
  const auto& graph = coloring.graph();
  std::ostringstream os;
  os << "{\n  \"part_sizes\": [";
  for (std::size_t i = 0; i < graph.part_sizes().size(); ++i) {
    os << (i ? ", " : "") << graph.part_sizes()[i];
  }
  os << "],\n  \"t\": " << coloring.t() << ",\n  \"edges\": [";
  for (EdgeIndex i = 0; i < graph.edge_count(); ++i) {
    const Edge e = graph.edge_at(i);
    os << (i ? ",\n" : "\n") << "    {\"a\": [" << e.a().part << ", " << e.a().index
       << "], \"b\": [" << e.b().part << ", " << e.b().index
       << "], \"color\": " << coloring.color(i) << "}";
  }
  os << (graph.edge_count() ? "\n  ]\n}\n" : "]\n}\n");
  return os.str();
}

void write_coloring(std::ostream& out, const EdgeColoring& coloring) {
  out << format_coloring(coloring);
}

}  // namespace icolor
