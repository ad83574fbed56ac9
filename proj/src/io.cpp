#include "asbg/io.hpp"

namespace asbg {

Graph graph_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw Error(ErrorKind::MalformedInput, "graph document needs \"vertices\" and \"edges\"");
  const Json& vs = doc["vertices"];
  const Json& es = doc["edges"];
  if (!vs.is_array() || !es.is_array())
    throw Error(ErrorKind::MalformedInput, "\"vertices\" and \"edges\" must be arrays");
  std::vector<std::string> names;
  names.reserve(vs.size());
  for (const auto& v : vs) {
    if (!v.is_string()) throw Error(ErrorKind::MalformedInput, "vertex ids must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<NamedEdge> edges;
  edges.reserve(es.size());
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw Error(ErrorKind::MalformedInput, "each edge must be a pair of vertex ids");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Graph(std::move(names), std::move(edges));
}

Graph parse_graph(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw Error(ErrorKind::MalformedInput, std::string("malformed JSON: ") + ex.what());
  }
  return graph_from_json(doc);
}

Json graph_to_json(const Graph& g) {
  Json doc;
  doc["vertices"] = g.names();
  Json edges = Json::array();
  for (const auto& [a, b] : g.named_edges()) edges.push_back({a, b});
  doc["edges"] = std::move(edges);
  return doc;
}

std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump(); }

std::string edge_key(const Graph& g, EdgeId e) {
  auto [a, b] = g.named_edge(e);
  return a + "--" + b;
}

Json colouring_to_json(const Graph& g, const Colouring& c) {
  Json doc = Json::object();
  for (EdgeId e = 0; e < g.edge_count(); ++e) doc[edge_key(g, e)] = std::string(to_string(c[e]));
  return doc;
}

Colouring colouring_from_json(const Graph& g, const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::MalformedInput, "colouring must be an object");
  Colouring c{std::vector<Colour>(g.edge_count(), Colour::Blue)};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto key = edge_key(g, e);
    if (!doc.contains(key)) throw Error(ErrorKind::InvalidColouring, "no colour for edge " + key);
    const auto& val = doc[key];
    if (val == "blue") {
      c[e] = Colour::Blue;
    } else if (val == "red") {
      c[e] = Colour::Red;
    } else {
      throw Error(ErrorKind::InvalidColouring, "edge " + key + " must be \"blue\" or \"red\"");
    }
  }
  if (doc.size() != g.edge_count())
    throw Error(ErrorKind::InvalidColouring, "colouring names edges outside the graph");
  return c;
}

}  // namespace asbg
