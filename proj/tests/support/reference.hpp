#pragma once

// Small test-side reference computations, written independently of the
// library algorithms they are compared against.

#include <cstdint>
#include <vector>

#include "asbg/flow.hpp"
#include "asbg/graph.hpp"

namespace asbg::reference {

/// prod_{j<n} (3j+1)! / (n+j)!, evaluated through prime exponents.
std::uint64_t asm_product_formula(int n);

/// Part 1 = vertices whose name starts with 'p', part 2 = the rest.
Bipartition name_bipartition(const Graph& g);
Bipartition swap_parts(const Bipartition& bp);

/// Maximum matching size by augmenting paths from part 1 (Kuhn).
std::size_t max_matching(const Graph& g, const Bipartition& bp);

/// Minimum s-t cut capacity over every vertex subset containing s but not t.
long min_cut(const FlowNetwork& net);

/// Shortest-path distances by Floyd-Warshall; -1 when unreachable.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// Number of connected components, by repeated DFS.
std::size_t component_count(const Graph& g);

}  // namespace asbg::reference
