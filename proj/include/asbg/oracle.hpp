#pragma once

#include <cstddef>
#include <vector>

#include "asbg/graph.hpp"

// Brute-force reference answers. Nothing here calls into the decision,
// structure, flow or configuration code; only the graph model is shared.
namespace asbg {

struct OracleBudget {
  std::size_t max_edges = 24;
  std::size_t max_vertices = 64;
  double time_limit_seconds = 60.0;
};

/// Every colouring with deg^B - deg^R = k at each vertex, from a scan of
/// all 2^|E| colourings; sorted.
std::vector<Colouring> oracle_difference_k(const Graph& g, int k, const OracleBudget& budget = {});

/// Classes of "lie on a common cycle" from explicitly enumerated cycles
/// (every edge subset that is a connected 2-regular graph). Classes sorted,
/// ordered by first edge.
std::vector<std::vector<EdgeId>> oracle_cycle_relation(const Graph& g,
                                                       const OracleBudget& budget = {14, 64, 60.0});

/// Tries every pair of vertex orders; parts of at most 8 vertices.
bool oracle_configurable(const ColouredGraph& cg, const OracleBudget& budget = {64, 16, 60.0});

}  // namespace asbg
