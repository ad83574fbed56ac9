#pragma once

#include <optional>
#include <vector>

#include "asbg/graph.hpp"

namespace asbg {

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  long capacity = 0;
};

/// Directed network with integer capacities. Arc order is significant: the
/// solver breaks ties by it, which is what makes results reproducible.
struct FlowNetwork {
  std::size_t node_count = 0;
  std::size_t source = 0;
  std::size_t sink = 0;
  std::vector<Arc> arcs;
};

struct FlowResult {
  long value = 0;
  std::vector<long> flow;  // per arc, aligned with FlowNetwork::arcs
};

/// Shortest augmenting paths (Edmonds-Karp). Throws PreconditionViolated
/// when the source has incoming arcs, the sink outgoing ones, or a capacity
/// is below 1.
FlowResult max_flow(const FlowNetwork& net);

/// r(v) per vertex id.
using DegreeDemand = std::vector<int>;

/// Throws InvalidDemand unless 0 <= r(v) <= deg(v) for every vertex.
void check_demand(const Graph& g, const DegreeDemand& demand);

/// Node 0 is the source, node v+1 is vertex v, the last node is the sink.
/// Arcs: (s, u) with capacity r(u) for u in part 1, every edge directed part
/// 1 -> part 2 with capacity 1, (v, t) with capacity r(v) for v in part 2.
/// Zero-capacity arcs are left out.
FlowNetwork build_network(const Graph& g, const Bipartition& bp, const DegreeDemand& demand);

enum class DemandMode {
  /// deg_H = r on the side with the smaller demand total, <= r on the other.
  AtMost,
  /// deg_H = r everywhere; needs equal demand totals on both sides.
  Exact,
};

/// Edge set of a subgraph meeting the demand, read off a maximum flow.
/// Deterministic for a given input, not canonical among all solutions.
std::optional<std::vector<EdgeId>> degree_constrained_subgraph(const Graph& g, const Bipartition& bp,
                                                               const DegreeDemand& demand,
                                                               DemandMode mode = DemandMode::AtMost);

constexpr std::size_t kMaxSubsetScanPart = 20;

/// For every S within part 1:
///   sum_{v in S} r(v) <= sum_{n in N(S)} min(r(n), |N(n) cap S|).
/// Exponential in |part 1|; throws BudgetExceeded above 20 vertices.
bool multimatching_condition(const Graph& g, const Bipartition& bp, const DegreeDemand& demand);

/// |S| <= |N(S)| for every S within part 1 (subset scan, same budget).
bool hall_check(const Graph& g, const Bipartition& bp);

/// Colouring with deg^B(v) - deg^R(v) = k everywhere, found as an exact
/// degree-constrained subgraph with r(v) = (deg(v) - k) / 2 coloured red.
/// Throws OddCycle for non-bipartite input.
std::optional<Colouring> decide_difference_k(const Graph& g, int k);

/// Difference-0 colouring via an Euler-circuit cycle decomposition, each
/// cycle coloured alternately. Throws OddCycle for non-bipartite input.
std::optional<Colouring> decide_difference_0(const Graph& g);

/// Splits an even-degree graph into edge-disjoint cycles (edge id lists in
/// traversal order).
std::vector<std::vector<EdgeId>> cycle_decomposition(const Graph& g);

}  // namespace asbg
