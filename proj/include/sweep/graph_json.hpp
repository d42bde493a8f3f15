#pragma once

#include "sweep/graph.hpp"

#include <string>

namespace sweep {

/// Parses a graph from its JSON text form:
///
///   {"n": 7, "edges": [[1,2],[1,3]], "coords": [[0.0,1.0], ...]}
///
/// Vertex ids are 1-based; "coords" is optional and must list one
/// [x, y] pair per vertex when present. Throws std::runtime_error with
/// a descriptive message on malformed input.
Graph parse_graph_json(const std::string& text);

/// Reads and parses the file at `path`; errors mention the path.
Graph load_graph(const std::string& path);

/// Canonical JSON text for `g`: n, sorted edge list, and coords when
/// the graph has them. Stable byte-for-byte across runs.
std::string graph_to_json(const Graph& g);

/// Reads an entire file into memory; throws std::runtime_error if the
/// file cannot be opened.
std::string read_text_file(const std::string& path);

/// Writes `text` to `path`, replacing any existing content.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sweep
