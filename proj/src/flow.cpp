#include "asbg/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace asbg {

namespace {

struct Residual {
  std::size_t to;
  long cap;
  std::size_t rev;  // index of the paired residual arc in adj[to]
  std::size_t arc;  // index in FlowNetwork::arcs, or npos for reverse arcs
};

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  const std::size_t n = net.node_count;
  if (net.source >= n || net.sink >= n || net.source == net.sink)
    throw Error(ErrorKind::PreconditionViolated, "source and sink must be distinct nodes");
  std::vector<std::vector<Residual>> adj(n);
  std::vector<std::pair<std::size_t, std::size_t>> where(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    if (a.from >= n || a.to >= n || a.from == a.to)
      throw Error(ErrorKind::PreconditionViolated, "arc endpoints out of range");
    if (a.capacity < 1) throw Error(ErrorKind::PreconditionViolated, "arc capacity below 1");
    if (a.to == net.source) throw Error(ErrorKind::PreconditionViolated, "arc into the source");
    if (a.from == net.sink) throw Error(ErrorKind::PreconditionViolated, "arc out of the sink");
    where[i] = {a.from, adj[a.from].size()};
    adj[a.from].push_back({a.to, a.capacity, adj[a.to].size(), i});
    adj[a.to].push_back({a.from, 0, adj[a.from].size() - 1, npos});
  }

  FlowResult result;
  std::vector<std::pair<std::size_t, std::size_t>> pred(n);
  while (true) {
    std::vector<bool> seen(n, false);
    seen[net.source] = true;
    std::deque<std::size_t> queue{net.source};
    while (!queue.empty() && !seen[net.sink]) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < adj[x].size(); ++k) {
        const Residual& r = adj[x][k];
        if (r.cap > 0 && !seen[r.to]) {
          seen[r.to] = true;
          pred[r.to] = {x, k};
          queue.push_back(r.to);
        }
      }
    }
    if (!seen[net.sink]) break;
    long push = std::numeric_limits<long>::max();
    for (std::size_t v = net.sink; v != net.source; v = pred[v].first)
      push = std::min(push, adj[pred[v].first][pred[v].second].cap);
    for (std::size_t v = net.sink; v != net.source; v = pred[v].first) {
      Residual& r = adj[pred[v].first][pred[v].second];
      r.cap -= push;
      adj[r.to][r.rev].cap += push;
    }
    result.value += push;
  }

  result.flow.resize(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Residual& r = adj[where[i].first][where[i].second];
    result.flow[i] = net.arcs[i].capacity - r.cap;
  }
  return result;
}

void check_demand(const Graph& g, const DegreeDemand& demand) {
  if (demand.size() != g.vertex_count())
    throw Error(ErrorKind::InvalidDemand, "demand must cover every vertex");
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (demand[v] < 0 || demand[v] > static_cast<int>(g.degree(v)))
      throw Error(ErrorKind::InvalidDemand,
                  "demand at '" + g.name(v) + "' outside 0.." + std::to_string(g.degree(v)));
}

namespace {

void check_bipartition(const Graph& g, const Bipartition& bp) {
  if (bp.side.size() != g.vertex_count())
    throw Error(ErrorKind::PreconditionViolated, "bipartition does not match the graph");
  for (const Edge& e : g.edges())
    if (bp.side[e.u] == bp.side[e.v])
      throw Error(ErrorKind::PreconditionViolated, "edge inside one side of the bipartition");
}

Bipartition swapped(const Bipartition& bp) {
  Bipartition out{bp.part2, bp.part1, bp.side};
  for (auto& s : out.side) s = s == 1 ? 2 : 1;
  return out;
}

long demand_total(const std::vector<VertexId>& part, const DegreeDemand& demand) {
  long total = 0;
  for (VertexId v : part) total += demand[v];
  return total;
}

}  // namespace

FlowNetwork build_network(const Graph& g, const Bipartition& bp, const DegreeDemand& demand) {
  check_demand(g, demand);
  check_bipartition(g, bp);
  const std::size_t n = g.vertex_count();
  FlowNetwork net{n + 2, 0, n + 1, {}};
  for (VertexId u : bp.part1)
    if (demand[u] > 0) net.arcs.push_back({0, u + 1, demand[u]});
  for (VertexId u : bp.part1)
    for (VertexId v : g.neighbours(u)) net.arcs.push_back({u + 1, v + 1, 1});
  for (VertexId v : bp.part2)
    if (demand[v] > 0) net.arcs.push_back({v + 1, n + 1, demand[v]});
  return net;
}

std::optional<std::vector<EdgeId>> degree_constrained_subgraph(const Graph& g, const Bipartition& bp,
                                                               const DegreeDemand& demand,
                                                               DemandMode mode) {
  check_demand(g, demand);
  check_bipartition(g, bp);
  long left = demand_total(bp.part1, demand);
  long right = demand_total(bp.part2, demand);
  if (mode == DemandMode::Exact && left != right) return std::nullopt;
  if (left > right) return degree_constrained_subgraph(g, swapped(bp), demand, mode);

  FlowNetwork net = build_network(g, bp, demand);
  FlowResult fr = max_flow(net);
  if (fr.value != left) return std::nullopt;
  std::vector<EdgeId> h;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    if (a.from == net.source || a.to == net.sink || fr.flow[i] == 0) continue;
    h.push_back(*g.edge_between(a.from - 1, a.to - 1));
  }
  std::sort(h.begin(), h.end());
  return h;
}

bool multimatching_condition(const Graph& g, const Bipartition& bp, const DegreeDemand& demand) {
  check_demand(g, demand);
  check_bipartition(g, bp);
  const auto& p1 = bp.part1;
  if (p1.size() > kMaxSubsetScanPart)
    throw Error(ErrorKind::BudgetExceeded, "subset scan limited to 20 vertices in part 1");
  std::vector<int> hits(g.vertex_count(), 0);  // |N(n) cap S| for n in part 2
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p1.size()); ++mask) {
    std::fill(hits.begin(), hits.end(), 0);
    long lhs = 0;
    for (std::size_t i = 0; i < p1.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      lhs += demand[p1[i]];
      for (VertexId n : g.neighbours(p1[i])) ++hits[n];
    }
    long rhs = 0;
    for (VertexId n : bp.part2) rhs += std::min(demand[n], hits[n]);
    if (lhs > rhs) return false;
  }
  return true;
}

bool hall_check(const Graph& g, const Bipartition& bp) {
  check_bipartition(g, bp);
  const auto& p1 = bp.part1;
  if (p1.size() > kMaxSubsetScanPart)
    throw Error(ErrorKind::BudgetExceeded, "subset scan limited to 20 vertices in part 1");
  std::vector<bool> hit(g.vertex_count());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p1.size()); ++mask) {
    std::fill(hit.begin(), hit.end(), false);
    std::size_t size = 0, image = 0;
    for (std::size_t i = 0; i < p1.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      ++size;
      for (VertexId n : g.neighbours(p1[i]))
        if (!hit[n]) {
          hit[n] = true;
          ++image;
        }
    }
    if (size > image) return false;
  }
  return true;
}

std::optional<Colouring> decide_difference_k(const Graph& g, int k) {
  if (k < 0) throw Error(ErrorKind::OutOfRange, "k must be non-negative");
  Bipartition bp = bipartition(g);
  DegreeDemand demand(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int d = static_cast<int>(g.degree(v));
    if (d < k || (d - k) % 2 != 0) return std::nullopt;
    demand[v] = (d - k) / 2;
  }
  auto red = degree_constrained_subgraph(g, bp, demand, DemandMode::Exact);
  if (!red) return std::nullopt;
  Colouring c{std::vector<Colour>(g.edge_count(), Colour::Blue)};
  for (EdgeId e : *red) c[e] = Colour::Red;
  return c;
}

std::vector<std::vector<EdgeId>> cycle_decomposition(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0)
      throw Error(ErrorKind::PreconditionViolated, "cycle decomposition needs even degrees");
  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  std::vector<std::vector<EdgeId>> cycles;
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    // Hierholzer: the circuit comes out as a sequence of (vertex, via-edge).
    std::vector<std::pair<VertexId, EdgeId>> stack{{start, 0}}, circuit;
    while (!stack.empty()) {
      VertexId x = stack.back().first;
      auto inc = g.incident(x);
      while (cursor[x] < inc.size() && used[inc[cursor[x]]]) ++cursor[x];
      if (cursor[x] == inc.size()) {
        circuit.push_back(stack.back());
        stack.pop_back();
      } else {
        EdgeId e = inc[cursor[x]];
        used[e] = true;
        stack.push_back({g.edge(e).other(x), e});
      }
    }
    if (circuit.size() < 2) continue;
    // Peel simple cycles off the closed walk at each repeated vertex.
    std::vector<VertexId> path;
    std::vector<EdgeId> path_edges;
    std::vector<std::size_t> pos(g.vertex_count(), SIZE_MAX);
    for (std::size_t i = 0; i < circuit.size(); ++i) {
      VertexId v = circuit[i].first;
      if (i > 0) path_edges.push_back(circuit[i - 1].second);
      if (pos[v] != SIZE_MAX) {
        std::size_t from = pos[v];
        std::vector<EdgeId> cyc(path_edges.begin() + static_cast<long>(from), path_edges.end());
        path_edges.resize(from);
        for (std::size_t j = from + 1; j < path.size(); ++j) pos[path[j]] = SIZE_MAX;
        path.resize(from + 1);
        cycles.push_back(std::move(cyc));
      } else {
        pos[v] = path.size();
        path.push_back(v);
      }
    }
  }
  return cycles;
}

std::optional<Colouring> decide_difference_0(const Graph& g) {
  bipartition(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return std::nullopt;
  Colouring c{std::vector<Colour>(g.edge_count(), Colour::Blue)};
  for (const auto& cyc : cycle_decomposition(g))
    for (std::size_t i = 0; i < cyc.size(); ++i) c[cyc[i]] = i % 2 == 0 ? Colour::Blue : Colour::Red;
  return c;
}

}  // namespace asbg
