#include "asbg/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace asbg {

namespace {

class Clock {
 public:
  explicit Clock(double limit) : limit_(limit), start_(std::chrono::steady_clock::now()) {}
  void check() const {
    std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
    if (spent.count() > limit_) throw Error(ErrorKind::BudgetExceeded, "oracle time limit reached");
  }

 private:
  double limit_;
  std::chrono::steady_clock::time_point start_;
};

void check_size(const Graph& g, const OracleBudget& budget) {
  if (g.edge_count() > budget.max_edges || g.vertex_count() > budget.max_vertices)
    throw Error(ErrorKind::BudgetExceeded, "graph exceeds the oracle budget");
}

}  // namespace

std::vector<Colouring> oracle_difference_k(const Graph& g, int k, const OracleBudget& budget) {
  check_size(g, budget);
  Clock clock(budget.time_limit_seconds);
  const std::size_t m = g.edge_count();
  std::vector<Colouring> out;
  std::vector<int> net(g.vertex_count());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if ((mask & 0xffff) == 0) clock.check();
    std::fill(net.begin(), net.end(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      int s = (mask >> e & 1) ? -1 : 1;  // bit set: red
      net[g.edge(e).u] += s;
      net[g.edge(e).v] += s;
    }
    if (!std::all_of(net.begin(), net.end(), [k](int x) { return x == k; })) continue;
    Colouring c{std::vector<Colour>(m)};
    for (EdgeId e = 0; e < m; ++e) c[e] = (mask >> e & 1) ? Colour::Red : Colour::Blue;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<EdgeId>> oracle_cycle_relation(const Graph& g, const OracleBudget& budget) {
  check_size(g, budget);
  Clock clock(budget.time_limit_seconds);
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> cyclic(m, false);
  std::vector<int> deg(g.vertex_count());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if ((mask & 0xfff) == 0) clock.check();
    std::fill(deg.begin(), deg.end(), 0);
    std::vector<EdgeId> sub;
    for (EdgeId e = 0; e < m; ++e)
      if (mask >> e & 1) {
        sub.push_back(e);
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
      }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 0 && d != 2; })) continue;
    // 2-regular: a single cycle iff walking from one edge covers all of them.
    std::vector<bool> taken(m, false);
    VertexId start = g.edge(sub[0]).u, cur = start;
    EdgeId via = sub[0];
    std::size_t walked = 0;
    do {
      taken[via] = true;
      ++walked;
      cur = g.edge(via).other(cur);
      for (EdgeId f : sub)
        if (!taken[f] && g.edge(f).has(cur)) {
          via = f;
          break;
        }
    } while (cur != start);
    if (walked != sub.size()) continue;
    for (EdgeId e : sub) {
      cyclic[e] = true;
      parent[find(e)] = find(sub[0]);
    }
  }
  std::vector<std::vector<EdgeId>> classes;
  std::vector<std::size_t> slot(m, SIZE_MAX);
  for (EdgeId e = 0; e < m; ++e) {
    if (!cyclic[e]) continue;
    std::size_t r = find(e);
    if (slot[r] == SIZE_MAX) {
      slot[r] = classes.size();
      classes.emplace_back();
    }
    classes[slot[r]].push_back(e);
  }
  return classes;
}

namespace {

// Every vertex on the other side of `order` sees B, R, ..., B along it.
bool order_works(const ColouredGraph& cg, const std::vector<VertexId>& order, int other_side) {
  const Graph& g = cg.graph;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (cg.bipartition.side[u] != other_side) continue;
    std::vector<Colour> seq;
    for (VertexId y : order)
      if (auto e = g.edge_between(u, y)) seq.push_back(cg.colouring[*e]);
    if (seq.empty()) continue;
    if (seq.size() % 2 == 0) return false;
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (seq[i] != (i % 2 == 0 ? Colour::Blue : Colour::Red)) return false;
  }
  return true;
}

bool some_order_works(const ColouredGraph& cg, int side, const Clock& clock) {
  std::vector<VertexId> order;
  for (VertexId v = 0; v < cg.graph.vertex_count(); ++v)
    if (cg.bipartition.side[v] == side) order.push_back(v);
  std::size_t tried = 0;
  do {
    if (++tried % 4096 == 0) clock.check();
    if (order_works(cg, order, side == 1 ? 2 : 1)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace

bool oracle_configurable(const ColouredGraph& cg, const OracleBudget& budget) {
  check_size(cg.graph, budget);
  std::size_t ones = std::count(cg.bipartition.side.begin(), cg.bipartition.side.end(), 1);
  if (ones > 8 || cg.graph.vertex_count() - ones > 8)
    throw Error(ErrorKind::BudgetExceeded, "oracle limited to 8 vertices per part");
  Clock clock(budget.time_limit_seconds);
  return some_order_works(cg, 1, clock) && some_order_works(cg, 2, clock);
}

}  // namespace asbg
