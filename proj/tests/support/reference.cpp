#include "reference.hpp"

#include <functional>
#include <map>

namespace asbg::reference {

std::uint64_t asm_product_formula(int n) {
  std::map<int, int> exponent;
  auto add_factorial = [&](int m, int sign) {
    for (int k = 2; k <= m; ++k) {
      int x = k;
      for (int p = 2; p <= x; ++p)
        while (x % p == 0) {
          exponent[p] += sign;
          x /= p;
        }
    }
  };
  for (int j = 0; j < n; ++j) {
    add_factorial(3 * j + 1, +1);
    add_factorial(n + j, -1);
  }
  std::uint64_t out = 1;
  for (auto [p, e] : exponent) {
    if (e < 0) return 0;  // not an integer; never expected
    for (int i = 0; i < e; ++i) out *= static_cast<std::uint64_t>(p);
  }
  return out;
}

Bipartition name_bipartition(const Graph& g) {
  Bipartition bp;
  bp.side.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    bool first = g.name(v)[0] == 'p';
    bp.side[v] = first ? 1 : 2;
    (first ? bp.part1 : bp.part2).push_back(v);
  }
  return bp;
}

Bipartition swap_parts(const Bipartition& bp) {
  Bipartition out{bp.part2, bp.part1, bp.side};
  for (auto& s : out.side) s = static_cast<std::uint8_t>(3 - s);
  return out;
}

std::size_t max_matching(const Graph& g, const Bipartition& bp) {
  std::vector<long> mate(g.vertex_count(), -1);
  std::vector<bool> visited;
  std::function<bool(VertexId)> augment = [&](VertexId u) {
    for (VertexId w : g.neighbours(u)) {
      if (visited[w]) continue;
      visited[w] = true;
      if (mate[w] < 0 || augment(static_cast<VertexId>(mate[w]))) {
        mate[w] = static_cast<long>(u);
        return true;
      }
    }
    return false;
  };
  std::size_t size = 0;
  for (VertexId u : bp.part1) {
    visited.assign(g.vertex_count(), false);
    if (augment(u)) ++size;
  }
  return size;
}

long min_cut(const FlowNetwork& net) {
  const std::size_t n = net.node_count;
  long best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> net.source & 1) || (mask >> net.sink & 1)) continue;
    long cut = 0;
    for (const Arc& a : net.arcs)
      if ((mask >> a.from & 1) && !(mask >> a.to & 1)) cut += a.capacity;
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t count = 0;
  std::function<void(VertexId)> visit = [&](VertexId v) {
    seen[v] = true;
    for (VertexId w : g.neighbours(v))
      if (!seen[w]) visit(w);
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) {
      ++count;
      visit(v);
    }
  return count;
}

}  // namespace asbg::reference
