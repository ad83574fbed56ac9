#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace asbg {

using VertexId = std::size_t;
using EdgeId = std::size_t;

enum class ErrorKind {
  MalformedInput,
  DuplicateVertex,
  UnknownVertex,
  SelfLoop,
  DuplicateEdge,
  OddCycle,
  AcyclicGraph,
  NotInSkeleton,
  AllLeafType,
  Disconnected,
  NotATree,
  NotUnicyclic,
  NotCactus,
  NotAnAsm,
  InvalidOrder,
  InvalidDemand,
  InvalidColouring,
  NotAlternating,
  NotColourable,
  BudgetExceeded,
  OutOfRange,
  PreconditionViolated,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind` is stable and meant for
/// programmatic dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Edge endpoints with `u < v`. Because vertex ids follow the lexicographic
/// order of the names, this is also the (min name, max name) orientation.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool has(VertexId x) const { return x == u || x == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using NamedEdge = std::pair<std::string, std::string>;

/// Simple undirected graph over string-named vertices.
///
/// Vertex ids are positions in the sorted name list and edge ids are
/// positions in the sorted edge list, so every iteration in the library is
/// lexicographic and deterministic. Instances are immutable.
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalizes. Throws Error on duplicate vertices,
  /// unknown endpoints, self-loops and parallel edges.
  Graph(std::vector<std::string> vertices, std::vector<NamedEdge> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId id(std::string_view name) const;  // throws UnknownVertex

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  NamedEdge named_edge(EdgeId e) const;
  std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;

  /// Neighbours in increasing id order.
  std::span<const VertexId> neighbours(VertexId v) const { return adj_[v]; }
  /// Incident edge ids, aligned with neighbours(v).
  std::span<const EdgeId> incident(VertexId v) const { return inc_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }

  /// Subgraph on the given edges; keeps only the endpoints of those edges
  /// unless `keep` lists extra vertices to retain.
  Graph edge_subgraph(std::span<const EdgeId> edges,
                      std::span<const VertexId> keep = {}) const;
  /// Induced subgraph on the given vertices.
  Graph induced(std::span<const VertexId> vertices) const;
  /// Graph with the given vertices (and their edges) removed.
  Graph without(std::span<const VertexId> vertices) const;

  std::vector<NamedEdge> named_edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<EdgeId>> inc_;
};

enum class Colour : std::uint8_t { Blue, Red };

inline Colour opposite(Colour c) {
  return c == Colour::Blue ? Colour::Red : Colour::Blue;
}
std::string_view to_string(Colour c);

/// Total map edge id -> colour for one particular graph.
struct Colouring {
  std::vector<Colour> colour;

  Colour operator[](EdgeId e) const { return colour[e]; }
  Colour& operator[](EdgeId e) { return colour[e]; }
  std::size_t size() const { return colour.size(); }
  friend auto operator<=>(const Colouring&, const Colouring&) = default;
};

/// deg^B(v) - deg^R(v).
int colour_balance(const Graph& g, const Colouring& c, VertexId v);

/// Sides of a two-colouring of the vertices. In every component the
/// lexicographically smallest vertex sits in part 1.
struct Bipartition {
  std::vector<VertexId> part1;
  std::vector<VertexId> part2;
  std::vector<std::uint8_t> side;  // side[v] in {1, 2}

  bool in_part1(VertexId v) const { return side[v] == 1; }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Thrown by bipartition() when the graph has an odd cycle. `witness` is a
/// closed walk v0 v1 ... v0 of odd length (simple cycle).
class OddCycleError : public Error {
 public:
  explicit OddCycleError(std::vector<VertexId> witness);
  const std::vector<VertexId>& witness() const { return witness_; }

 private:
  std::vector<VertexId> witness_;
};

Bipartition bipartition(const Graph& g);

struct CandidateReport {
  bool bipartite = false;
  bool balanced = false;
  bool connected = false;
  bool all_degrees_odd = false;
};

/// The four necessary conditions for ASBG-colourability. `balanced` is
/// evaluated per component (false when not bipartite).
CandidateReport validate_candidate(const Graph& g);

bool is_connected(const Graph& g);

/// Component index per vertex; components numbered by their smallest vertex.
std::vector<std::size_t> component_labels(const Graph& g, std::size_t* count = nullptr);

std::vector<Graph> components(const Graph& g);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

struct ColouredGraph {
  Graph graph;
  Colouring colouring;
  Bipartition bipartition;
};

/// Bundles a graph and colouring, computing the bipartition.
ColouredGraph make_coloured(Graph g, Colouring c);

}  // namespace asbg
