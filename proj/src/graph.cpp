#include "asbg/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace asbg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::OddCycle: return "OddCycle";
    case ErrorKind::AcyclicGraph: return "AcyclicGraph";
    case ErrorKind::NotInSkeleton: return "NotInSkeleton";
    case ErrorKind::AllLeafType: return "AllLeafType";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NotUnicyclic: return "NotUnicyclic";
    case ErrorKind::NotCactus: return "NotCactus";
    case ErrorKind::NotAnAsm: return "NotAnAsm";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidDemand: return "InvalidDemand";
    case ErrorKind::InvalidColouring: return "InvalidColouring";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::NotColourable: return "NotColourable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

std::string_view to_string(Colour c) { return c == Colour::Blue ? "blue" : "red"; }

Graph::Graph(std::vector<std::string> vertices, std::vector<NamedEdge> edges) {
  names_ = std::move(vertices);
  std::sort(names_.begin(), names_.end());
  if (auto dup = std::adjacent_find(names_.begin(), names_.end()); dup != names_.end()) {
    throw Error(ErrorKind::DuplicateVertex, "duplicate vertex id '" + *dup + "'");
  }
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = find(a);
    auto ib = find(b);
    if (!ia) throw Error(ErrorKind::UnknownVertex, "edge references unknown vertex '" + a + "'");
    if (!ib) throw Error(ErrorKind::UnknownVertex, "edge references unknown vertex '" + b + "'");
    if (*ia == *ib) throw Error(ErrorKind::SelfLoop, "self-loop at '" + a + "'");
    edges_.push_back({std::min(*ia, *ib), std::max(*ia, *ib)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorKind::DuplicateEdge,
                "duplicate edge {" + names_[dup->u] + ", " + names_[dup->v] + "}");
  }
  adj_.assign(names_.size(), {});
  inc_.assign(names_.size(), {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    adj_[edges_[e].u].push_back(edges_[e].v);
    adj_[edges_[e].v].push_back(edges_[e].u);
  }
  for (VertexId v = 0; v < names_.size(); ++v) {
    std::sort(adj_[v].begin(), adj_[v].end());
    inc_[v].reserve(adj_[v].size());
    for (VertexId w : adj_[v]) inc_[v].push_back(*edge_between(v, w));
  }
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId Graph::id(std::string_view name) const {
  auto v = find(name);
  if (!v) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
  return *v;
}

NamedEdge Graph::named_edge(EdgeId e) const {
  return {names_[edges_[e].u], names_[edges_[e].v]};
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const {
  Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

Graph Graph::edge_subgraph(std::span<const EdgeId> edges, std::span<const VertexId> keep) const {
  std::set<VertexId> vs(keep.begin(), keep.end());
  std::vector<NamedEdge> named;
  named.reserve(edges.size());
  for (EdgeId e : edges) {
    vs.insert(edges_[e].u);
    vs.insert(edges_[e].v);
    named.push_back(named_edge(e));
  }
  std::vector<std::string> vnames;
  for (VertexId v : vs) vnames.push_back(names_[v]);
  return Graph(std::move(vnames), std::move(named));
}

Graph Graph::induced(std::span<const VertexId> vertices) const {
  std::vector<bool> in(names_.size(), false);
  for (VertexId v : vertices) in[v] = true;
  std::vector<std::string> vnames;
  for (VertexId v = 0; v < names_.size(); ++v)
    if (in[v]) vnames.push_back(names_[v]);
  std::vector<NamedEdge> named;
  for (EdgeId e = 0; e < edges_.size(); ++e)
    if (in[edges_[e].u] && in[edges_[e].v]) named.push_back(named_edge(e));
  return Graph(std::move(vnames), std::move(named));
}

Graph Graph::without(std::span<const VertexId> vertices) const {
  std::vector<bool> drop(names_.size(), false);
  for (VertexId v : vertices) drop[v] = true;
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < names_.size(); ++v)
    if (!drop[v]) keep.push_back(v);
  return induced(keep);
}

std::vector<NamedEdge> Graph::named_edges() const {
  std::vector<NamedEdge> out;
  out.reserve(edges_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) out.push_back(named_edge(e));
  return out;
}

int colour_balance(const Graph& g, const Colouring& c, VertexId v) {
  int balance = 0;
  for (EdgeId e : g.incident(v)) balance += c[e] == Colour::Blue ? 1 : -1;
  return balance;
}

OddCycleError::OddCycleError(std::vector<VertexId> witness)
    : Error(ErrorKind::OddCycle, "graph contains an odd cycle of length " +
                                     std::to_string(witness.empty() ? 0 : witness.size() - 1)),
      witness_(std::move(witness)) {}

Bipartition bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Bipartition bp;
  bp.side.assign(n, 0);
  std::vector<VertexId> parent(n, n);
  std::vector<std::size_t> depth(n, 0);
  for (VertexId root = 0; root < n; ++root) {
    if (bp.side[root] != 0) continue;
    bp.side[root] = 1;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbours(x)) {
        if (bp.side[y] == 0) {
          bp.side[y] = bp.side[x] == 1 ? 2 : 1;
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (bp.side[y] == bp.side[x]) {
          // Walk both tree paths up to their meeting point.
          std::vector<VertexId> left{x}, right{y};
          VertexId a = x, b = y;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::vector<VertexId> cycle(left.rbegin(), left.rend());
          cycle.insert(cycle.end(), right.begin(), right.end());
          cycle.push_back(cycle.front());
          throw OddCycleError(std::move(cycle));
        }
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) (bp.side[v] == 1 ? bp.part1 : bp.part2).push_back(v);
  return bp;
}

std::vector<std::size_t> component_labels(const Graph& g, std::size_t* count) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (label[root] != n) continue;
    label[root] = next;
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbours(x)) {
        if (label[y] == n) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  component_labels(g, &count);
  return count <= 1;
}

std::vector<Graph> components(const Graph& g) {
  std::size_t count = 0;
  auto label = component_labels(g, &count);
  std::vector<std::vector<VertexId>> members(count);
  for (VertexId v = 0; v < g.vertex_count(); ++v) members[label[v]].push_back(v);
  std::vector<Graph> out;
  out.reserve(count);
  for (const auto& m : members) out.push_back(g.induced(m));
  return out;
}

bool is_forest(const Graph& g) {
  std::size_t count = 0;
  component_labels(g, &count);
  return g.edge_count() + count == g.vertex_count();
}

bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && is_connected(g) && g.edge_count() + 1 == g.vertex_count();
}

CandidateReport validate_candidate(const Graph& g) {
  CandidateReport report;
  report.connected = is_connected(g);
  report.all_degrees_odd = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 == 0) report.all_degrees_odd = false;
  try {
    Bipartition bp = bipartition(g);
    report.bipartite = true;
    std::size_t count = 0;
    auto label = component_labels(g, &count);
    std::vector<long> diff(count, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) diff[label[v]] += bp.in_part1(v) ? 1 : -1;
    report.balanced = std::all_of(diff.begin(), diff.end(), [](long d) { return d == 0; });
  } catch (const OddCycleError&) {
    report.bipartite = false;
    report.balanced = false;
  }
  return report;
}

ColouredGraph make_coloured(Graph g, Colouring c) {
  if (c.size() != g.edge_count())
    throw Error(ErrorKind::InvalidColouring, "colouring does not cover the edge set");
  Bipartition bp = bipartition(g);
  return {std::move(g), std::move(c), std::move(bp)};
}

}  // namespace asbg
