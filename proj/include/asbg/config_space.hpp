#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asbg/graph.hpp"
#include "asbg/io.hpp"

namespace asbg {

/// Vertex orders on the two lines of an ASBG drawing: order1 permutes
/// part 1, order2 permutes part 2.
struct Configuration {
  std::vector<VertexId> order1;
  std::vector<VertexId> order2;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Closed walk v0 e0 v1 e1 ... v(n-1) e(n-1) v0; edges[i] joins vertices[i]
/// and vertices[(i+1) % n]. colours[i] is the colour of edges[i] before
/// rotation.
struct AlternatingCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<Colour> colours;
};

/// Every vertex sees its neighbours, read in the order of the other part,
/// as B, R, B, ..., R, B. Throws InvalidOrder when the orders do not permute
/// the parts of cg.bipartition.
bool is_configuration_valid(const ColouredGraph& cg, const Configuration& cfg);

/// Layer-by-layer construction from the least vertex of each component.
/// Throws NotCactus or InvalidColouring.
Configuration configure_cactus(const ColouredGraph& cg);

constexpr std::size_t kMaxBrutePart = 8;

/// Backtracking over both orders with prefix pruning. Throws BudgetExceeded
/// when a part has more than 8 vertices.
std::optional<Configuration> brute_force_configuration(const ColouredGraph& cg);

/// Throws NotAlternating unless cyc is a simple cycle whose colours under c
/// alternate and match cyc.colours.
Colouring rotate(const Graph& g, const Colouring& c, const AlternatingCycle& cyc);

/// Edge-disjoint cycles, alternating under c1, whose rotations in order
/// turn c1 into c2. Throws InvalidColouring unless both are difference-1.
std::vector<AlternatingCycle> rotation_decomposition(const Graph& g, const Colouring& c1,
                                                     const Colouring& c2);

/// Every simple alternating cycle of g under c, each once.
std::vector<AlternatingCycle> alternating_cycles(const Graph& g, const Colouring& c);

constexpr std::size_t kMaxEnumerateEdges = 24;

/// All difference-1 colourings, sorted. Throws NotColourable or
/// BudgetExceeded (more than 24 edges).
std::vector<Colouring> enumerate_colourings(const Graph& g);

/// {"order1": [...], "order2": [...]}
Json configuration_to_json(const Graph& g, const Configuration& cfg);
Configuration configuration_from_json(const Graph& g, const Json& doc);

/// Undirected DOT graph, one rank per part, coloured edges. Without a
/// configuration the parts are laid out by vertex id.
std::string to_dot(const ColouredGraph& cg, const std::optional<Configuration>& cfg);

}  // namespace asbg
