#include "asbg/config_space.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "asbg/colouring.hpp"
#include "asbg/structure.hpp"

namespace asbg {

namespace {

std::vector<std::size_t> positions(const Graph& g, const std::vector<VertexId>& order,
                                   const std::vector<VertexId>& part) {
  std::vector<std::size_t> pos(g.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.vertex_count() || pos[order[i]] != SIZE_MAX)
      throw Error(ErrorKind::InvalidOrder, "order repeats or names an unknown vertex");
    pos[order[i]] = i;
  }
  if (order.size() != part.size())
    throw Error(ErrorKind::InvalidOrder, "order does not cover its part");
  for (VertexId v : part)
    if (pos[v] == SIZE_MAX) throw Error(ErrorKind::InvalidOrder, "order misses '" + g.name(v) + "'");
  return pos;
}

bool alternates_at(const ColouredGraph& cg, VertexId u, const std::vector<std::size_t>& pos) {
  const Graph& g = cg.graph;
  auto nbrs = g.neighbours(u);
  auto inc = g.incident(u);
  std::vector<std::size_t> idx(nbrs.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pos[nbrs[a]] < pos[nbrs[b]]; });
  if (idx.size() % 2 == 0) return false;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    Colour want = k % 2 == 0 ? Colour::Blue : Colour::Red;
    if (cg.colouring[inc[idx[k]]] != want) return false;
  }
  return true;
}

}  // namespace

bool is_configuration_valid(const ColouredGraph& cg, const Configuration& cfg) {
  const Graph& g = cg.graph;
  auto pos1 = positions(g, cfg.order1, cg.bipartition.part1);
  auto pos2 = positions(g, cfg.order2, cg.bipartition.part2);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    if (!alternates_at(cg, v, cg.bipartition.in_part1(v) ? pos2 : pos1)) return false;
  }
  return true;
}

namespace {

// The two lines under construction. Vertices go into the line of their part.
class Placement {
 public:
  explicit Placement(const ColouredGraph& cg) : cg_(cg), placed_(cg.graph.vertex_count(), false) {}

  bool placed(VertexId v) const { return placed_[v]; }

  void append(VertexId v) { insert_at(v, line_of(v).size()); }

  // Lays out x's unplaced neighbours around the placed ones so that x's
  // edges alternate in line order.
  void satisfy(VertexId x) {
    const Graph& g = cg_.graph;
    std::vector<VertexId> pre, blue, red;
    for (std::size_t k = 0; k < g.degree(x); ++k) {
      VertexId y = g.neighbours(x)[k];
      if (placed_[y]) {
        pre.push_back(y);
      } else {
        (cg_.colouring[g.incident(x)[k]] == Colour::Blue ? blue : red).push_back(y);
      }
    }
    if (pre.size() > 2) throw std::logic_error("more than two placed neighbours in a cactus layer");
    auto& line = line_of_other(x);
    std::sort(pre.begin(), pre.end(), [&](VertexId a, VertexId b) { return index_in(line, a) < index_in(line, b); });

    const std::size_t slots = g.degree(x);
    auto colour_of = [&](VertexId y) { return cg_.colouring[*g.edge_between(x, y)]; };
    auto slot_colour = [](std::size_t s) { return s % 2 == 0 ? Colour::Blue : Colour::Red; };
    // Slots for the placed neighbours: the earliest ones that fit.
    std::vector<std::size_t> fixed;
    std::size_t from = 0;
    for (VertexId a : pre) {
      std::size_t s = from;
      while (slot_colour(s) != colour_of(a)) ++s;
      fixed.push_back(s);
      from = s + 1;
    }
    if (!fixed.empty() && fixed.back() >= slots)
      throw std::logic_error("placed neighbours admit no alternating layout");

    // Fill the free slots, then insert each group next to its anchor.
    std::vector<std::vector<VertexId>> groups(pre.size() + 1);
    std::size_t bi = 0, ri = 0, group = 0;
    for (std::size_t s = 0; s < slots; ++s) {
      if (group < fixed.size() && fixed[group] == s) {
        ++group;
        continue;
      }
      groups[group].push_back(slot_colour(s) == Colour::Blue ? blue[bi++] : red[ri++]);
    }
    if (pre.empty()) {
      for (VertexId y : groups[0]) insert_at(y, line.size());
      return;
    }
    // Before the first anchor, between the anchors, after the last.
    std::size_t at = index_in(line, pre[0]);
    for (VertexId y : groups[0]) insert_at(y, at++);
    for (std::size_t k = 0; k < pre.size(); ++k) {
      at = index_in(line, pre[k]) + 1;
      for (VertexId y : groups[k + 1]) insert_at(y, at++);
    }
  }

  Configuration result() const { return {line1_, line2_}; }

 private:
  std::vector<VertexId>& line_of(VertexId v) { return cg_.bipartition.in_part1(v) ? line1_ : line2_; }
  std::vector<VertexId>& line_of_other(VertexId v) { return cg_.bipartition.in_part1(v) ? line2_ : line1_; }

  static std::size_t index_in(const std::vector<VertexId>& line, VertexId v) {
    return static_cast<std::size_t>(std::find(line.begin(), line.end(), v) - line.begin());
  }

  void insert_at(VertexId v, std::size_t at) {
    auto& line = line_of(v);
    line.insert(line.begin() + static_cast<long>(at), v);
    placed_[v] = true;
  }

  const ColouredGraph& cg_;
  std::vector<bool> placed_;
  std::vector<VertexId> line1_, line2_;
};

}  // namespace

Configuration configure_cactus(const ColouredGraph& cg) {
  const Graph& g = cg.graph;
  if (!is_cactus(g)) throw Error(ErrorKind::NotCactus, "configure_cactus needs a cactus");
  if (!verify_difference1(cg)) throw Error(ErrorKind::InvalidColouring, "colouring is not difference-1");
  Placement place(cg);
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    place.append(root);
    // Breadth-first from the root; a vertex is handled when dequeued.
    std::deque<VertexId> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      place.satisfy(x);
      for (VertexId y : g.neighbours(x))
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
    }
  }
  Configuration cfg = place.result();
  if (!is_configuration_valid(cg, cfg)) throw std::logic_error("cactus construction produced an invalid configuration");
  return cfg;
}

namespace {

// Finds an order of `line` under which every vertex of the other part sees
// alternating colours, extending a prefix one vertex at a time.
class OrderSearch {
 public:
  OrderSearch(const ColouredGraph& cg, std::vector<VertexId> line)
      : cg_(cg), line_(std::move(line)), used_(line_.size(), false), seen_(cg.graph.vertex_count(), 0) {}

  std::optional<std::vector<VertexId>> run() {
    if (extend()) return prefix_;
    return std::nullopt;
  }

 private:
  bool extend() {
    if (prefix_.size() == line_.size()) return true;
    const Graph& g = cg_.graph;
    for (std::size_t i = 0; i < line_.size(); ++i) {
      if (used_[i]) continue;
      VertexId y = line_[i];
      bool fits = true;
      for (std::size_t k = 0; k < g.degree(y) && fits; ++k) {
        VertexId u = g.neighbours(y)[k];
        Colour want = seen_[u] % 2 == 0 ? Colour::Blue : Colour::Red;
        fits = cg_.colouring[g.incident(y)[k]] == want;
      }
      if (!fits) continue;
      used_[i] = true;
      prefix_.push_back(y);
      for (VertexId u : g.neighbours(y)) ++seen_[u];
      if (extend()) return true;
      for (VertexId u : g.neighbours(y)) --seen_[u];
      prefix_.pop_back();
      used_[i] = false;
    }
    return false;
  }

  const ColouredGraph& cg_;
  std::vector<VertexId> line_;
  std::vector<bool> used_;
  std::vector<std::size_t> seen_;  // neighbours of u already in the prefix
  std::vector<VertexId> prefix_;
};

}  // namespace

std::optional<Configuration> brute_force_configuration(const ColouredGraph& cg) {
  const auto& bp = cg.bipartition;
  if (bp.part1.size() > kMaxBrutePart || bp.part2.size() > kMaxBrutePart)
    throw Error(ErrorKind::BudgetExceeded, "brute-force search limited to 8 vertices per part");
  // Alternation ends in blue only for odd degrees.
  for (VertexId v = 0; v < cg.graph.vertex_count(); ++v)
    if (cg.graph.degree(v) % 2 == 0 && cg.graph.degree(v) > 0) return std::nullopt;
  // Each order only constrains the vertices of the other part.
  auto order1 = OrderSearch(cg, bp.part1).run();
  if (!order1) return std::nullopt;
  auto order2 = OrderSearch(cg, bp.part2).run();
  if (!order2) return std::nullopt;
  return Configuration{std::move(*order1), std::move(*order2)};
}

namespace {

void check_alternating(const Graph& g, const Colouring& c, const AlternatingCycle& cyc) {
  const std::size_t n = cyc.edges.size();
  if (n < 4 || n % 2 != 0 || cyc.vertices.size() != n || cyc.colours.size() != n)
    throw Error(ErrorKind::NotAlternating, "alternating cycle needs even length at least 4");
  std::set<VertexId> distinct(cyc.vertices.begin(), cyc.vertices.end());
  if (distinct.size() != n) throw Error(ErrorKind::NotAlternating, "cycle repeats a vertex");
  for (std::size_t i = 0; i < n; ++i) {
    EdgeId e = cyc.edges[i];
    if (e >= g.edge_count() || !g.edge(e).has(cyc.vertices[i]) || !g.edge(e).has(cyc.vertices[(i + 1) % n]))
      throw Error(ErrorKind::NotAlternating, "cycle edge does not join consecutive vertices");
    if (c[e] != cyc.colours[i] || cyc.colours[i] == cyc.colours[(i + 1) % n])
      throw Error(ErrorKind::NotAlternating, "cycle colours do not alternate");
  }
}

}  // namespace

Colouring rotate(const Graph& g, const Colouring& c, const AlternatingCycle& cyc) {
  if (c.size() != g.edge_count()) throw Error(ErrorKind::InvalidColouring, "colouring size mismatch");
  check_alternating(g, c, cyc);
  Colouring out = c;
  for (EdgeId e : cyc.edges) out[e] = opposite(out[e]);
  return out;
}

std::vector<AlternatingCycle> rotation_decomposition(const Graph& g, const Colouring& c1, const Colouring& c2) {
  if (!verify_difference1(g, c1) || !verify_difference1(g, c2))
    throw Error(ErrorKind::InvalidColouring, "both colourings must be difference-1");
  std::vector<bool> left(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) left[e] = c1[e] != c2[e];

  std::vector<AlternatingCycle> out;
  while (true) {
    auto first = std::find(left.begin(), left.end(), true);
    if (first == left.end()) break;
    // Alternating trail through differing edges until a vertex repeats. At
    // every vertex the differing edges split evenly between the colours, so
    // the trail can always continue.
    EdgeId e0 = static_cast<EdgeId>(first - left.begin());
    std::vector<VertexId> walk{g.edge(e0).u};
    std::vector<EdgeId> via;
    std::vector<std::size_t> at(g.vertex_count(), SIZE_MAX);
    at[walk[0]] = 0;
    EdgeId e = e0;
    while (true) {
      VertexId next = g.edge(e).other(walk.back());
      via.push_back(e);
      if (at[next] != SIZE_MAX) {
        std::size_t from = at[next];
        AlternatingCycle cyc;
        cyc.vertices.assign(walk.begin() + static_cast<long>(from), walk.end());
        cyc.edges.assign(via.begin() + static_cast<long>(from), via.end());
        for (EdgeId f : cyc.edges) {
          cyc.colours.push_back(c1[f]);
          left[f] = false;
        }
        out.push_back(std::move(cyc));
        break;
      }
      at[next] = walk.size();
      walk.push_back(next);
      Colour want = opposite(c1[e]);
      std::optional<EdgeId> step;
      for (EdgeId f : g.incident(next))
        if (left[f] && f != e && c1[f] == want) {
          step = f;
          break;
        }
      if (!step) throw std::logic_error("alternating trail got stuck");
      e = *step;
    }
  }
  return out;
}

std::vector<AlternatingCycle> alternating_cycles(const Graph& g, const Colouring& c) {
  std::vector<AlternatingCycle> out;
  std::set<std::vector<bool>> found;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<VertexId> path;
  std::vector<EdgeId> edges;

  // Cycles are rooted at their least vertex and found once per direction.
  auto dfs = [&](auto&& self, VertexId root, VertexId x) -> void {
    for (std::size_t k = 0; k < g.degree(x); ++k) {
      VertexId y = g.neighbours(x)[k];
      EdgeId e = g.incident(x)[k];
      if (!edges.empty() && c[e] == c[edges.back()]) continue;
      if (y == root && edges.size() >= 3) {
        if (c[e] == c[edges.front()]) continue;
        std::vector<bool> key(g.edge_count(), false);
        for (EdgeId f : edges) key[f] = true;
        key[e] = true;
        if (!found.insert(key).second) continue;
        AlternatingCycle cyc{path, edges, {}};
        cyc.edges.push_back(e);
        for (EdgeId f : cyc.edges) cyc.colours.push_back(c[f]);
        out.push_back(std::move(cyc));
        continue;
      }
      if (y < root || on_path[y]) continue;
      on_path[y] = true;
      path.push_back(y);
      edges.push_back(e);
      self(self, root, y);
      edges.pop_back();
      path.pop_back();
      on_path[y] = false;
    }
  };
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    on_path[root] = true;
    path = {root};
    dfs(dfs, root, root);
    on_path[root] = false;
  }
  return out;
}

std::vector<Colouring> enumerate_colourings(const Graph& g) {
  if (g.edge_count() > kMaxEnumerateEdges)
    throw Error(ErrorKind::BudgetExceeded, "enumeration limited to 24 edges");
  Decision seed = decide_difference1(g);
  if (!seed.colourable()) throw Error(ErrorKind::NotColourable, "graph has no difference-1 colouring");
  std::set<Colouring> seen{*seed.colouring};
  std::deque<Colouring> queue{*seed.colouring};
  while (!queue.empty()) {
    Colouring c = std::move(queue.front());
    queue.pop_front();
    for (const AlternatingCycle& cyc : alternating_cycles(g, c)) {
      Colouring d = rotate(g, c, cyc);
      if (seen.insert(d).second) queue.push_back(std::move(d));
    }
  }
  return {seen.begin(), seen.end()};
}

Json configuration_to_json(const Graph& g, const Configuration& cfg) {
  Json doc;
  doc["order1"] = Json::array();
  doc["order2"] = Json::array();
  for (VertexId v : cfg.order1) doc["order1"].push_back(g.name(v));
  for (VertexId v : cfg.order2) doc["order2"].push_back(g.name(v));
  return doc;
}

Configuration configuration_from_json(const Graph& g, const Json& doc) {
  Configuration cfg;
  auto read = [&](const char* key, std::vector<VertexId>& into) {
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array())
      throw Error(ErrorKind::MalformedInput, std::string("configuration needs an array '") + key + "'");
    for (const auto& name : doc[key]) {
      if (!name.is_string()) throw Error(ErrorKind::MalformedInput, "vertex names must be strings");
      auto id = g.find(name.get<std::string>());
      if (!id) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + name.get<std::string>() + "'");
      into.push_back(*id);
    }
  };
  read("order1", cfg.order1);
  read("order2", cfg.order2);
  return cfg;
}

std::string to_dot(const ColouredGraph& cg, const std::optional<Configuration>& cfg) {
  const Graph& g = cg.graph;
  const auto& order1 = cfg ? cfg->order1 : cg.bipartition.part1;
  const auto& order2 = cfg ? cfg->order2 : cg.bipartition.part2;
  std::ostringstream out;
  auto quoted = [&](VertexId v) { return Json(g.name(v)).dump(); };
  out << "graph asbg {\n  rankdir=TB;\n  node [shape=circle];\n";
  for (const auto* order : {&order1, &order2}) {
    out << "  { rank=same;";
    for (VertexId v : *order) out << ' ' << quoted(v) << ';';
    out << " }\n";
    // Invisible chain pins the left-to-right order within the line.
    for (std::size_t i = 0; i + 1 < order->size(); ++i)
      out << "  " << quoted((*order)[i]) << " -- " << quoted((*order)[i + 1]) << " [style=invis];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    VertexId top = cg.bipartition.in_part1(ed.u) ? ed.u : ed.v;
    out << "  " << quoted(top) << " -- " << quoted(ed.other(top)) << " [color="
        << (cg.colouring[e] == Colour::Blue ? "blue" : "red") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace asbg
