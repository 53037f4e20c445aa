#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "icolor/graph.hpp"

namespace icolor {

// Coloring document:
//   { "part_sizes": [...], "t": int,
//     "edges": [ { "a": [part, idx], "b": [part, idx], "color": int }, ... ] }
// Writers emit edges in canonical enumeration order. Readers accept any order
// and either endpoint order, and throw MalformedColoring (or InvalidPartSizes)
// for anything that is not a total assignment of colors 1..t.
nlohmann::json to_json(const EdgeColoring& coloring);
EdgeColoring coloring_from_json(const nlohmann::json& doc);

nlohmann::json to_json(VertexId v);

// Generic serialized form: two-space indent, trailing newline.
std::string dump_document(const nlohmann::json& doc);

// Canonical coloring file: keys in document order, one edge per line.
std::string format_coloring(const EdgeColoring& coloring);

EdgeColoring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const EdgeColoring& coloring);

}  // namespace icolor
