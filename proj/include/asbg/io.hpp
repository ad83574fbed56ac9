#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "asbg/graph.hpp"

namespace asbg {

using Json = nlohmann::ordered_json;

/// Reads the graph document {"vertices": [...], "edges": [[a, b], ...]}.
/// Throws Error(MalformedInput) for JSON/schema problems and the Graph
/// constructor's errors for structural ones.
Graph parse_graph(std::string_view text);
Graph graph_from_json(const Json& doc);

/// Vertices sorted, edges sorted by (min endpoint, max endpoint).
Json graph_to_json(const Graph& g);
std::string serialize_graph(const Graph& g);

/// Key used for an edge in colouring maps: "u--v" with u < v.
std::string edge_key(const Graph& g, EdgeId e);

/// {"u--v": "blue" | "red", ...} in edge order.
Json colouring_to_json(const Graph& g, const Colouring& c);
Colouring colouring_from_json(const Graph& g, const Json& doc);

}  // namespace asbg
