#include "asbg/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace asbg {

std::string_view to_string(VertexType t) {
  switch (t) {
    case VertexType::LeafType: return "leaf-type";
    case VertexType::TwigType: return "twig-type";
    case VertexType::TripleType: return "triple-type";
    case VertexType::Junction: return "junction";
    case VertexType::Unclassifiable: return "unclassifiable";
  }
  return "unknown";
}

namespace {

// b is a twig base hanging off v: degree 3, its two other neighbours leaves.
bool is_twig_base_at(const Graph& g, VertexId b, VertexId v) {
  if (g.degree(b) != 3) return false;
  bool attached = false;
  for (VertexId w : g.neighbours(b)) {
    if (w == v) {
      attached = true;
    } else if (g.degree(w) != 1) {
      return false;
    }
  }
  return attached;
}

}  // namespace

std::optional<LeafTwig> find_leaf_twig(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::optional<VertexId> leaf, base;
    for (VertexId w : g.neighbours(v)) {
      if (!leaf && g.degree(w) == 1) leaf = w;
      if (!base && is_twig_base_at(g, w, v)) base = w;
    }
    if (!leaf || !base) continue;
    LeafTwig cfg{g.name(v), g.name(*leaf), g.name(*base), {}};
    std::size_t k = 0;
    for (VertexId w : g.neighbours(*base))
      if (w != v) cfg.twig_leaves[k++] = g.name(w);
    return cfg;
  }
  return std::nullopt;
}

Reduction reduce_with_trace(const Graph& g) {
  Reduction out{g, {}};
  while (auto cfg = find_leaf_twig(out.reduced)) {
    const Graph& cur = out.reduced;
    std::array<VertexId, 4> drop{cur.id(cfg->leaf), cur.id(cfg->twig_base),
                                 cur.id(cfg->twig_leaves[0]), cur.id(cfg->twig_leaves[1])};
    out.reduced = cur.without(drop);
    out.removed.push_back(std::move(*cfg));
  }
  return out;
}

Graph reduce(const Graph& g) { return reduce_with_trace(g).reduced; }

SkeletonMask skeleton_mask(const Graph& g) {
  const std::size_t n = g.vertex_count();
  SkeletonMask sk{std::vector<bool>(n, true), std::vector<bool>(g.edge_count(), true),
                  std::vector<int>(n, 0)};
  for (VertexId v = 0; v < n; ++v) sk.degree[v] = static_cast<int>(g.degree(v));
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v)
    if (sk.degree[v] <= 1) queue.push_back(v);
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    if (!sk.vertex[v]) continue;
    sk.vertex[v] = false;
    auto nbrs = g.neighbours(v);
    auto inc = g.incident(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (!sk.edge[inc[k]]) continue;
      sk.edge[inc[k]] = false;
      if (--sk.degree[nbrs[k]] <= 1 && sk.vertex[nbrs[k]]) queue.push_back(nbrs[k]);
    }
    sk.degree[v] = 0;
  }
  return sk;
}

Graph skeleton(const Graph& g) {
  if (is_forest(g)) throw Error(ErrorKind::AcyclicGraph, "the skeleton of a forest is undefined");
  SkeletonMask sk = skeleton_mask(g);
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (sk.edge[e]) edges.push_back(e);
  return g.edge_subgraph(edges);
}

namespace {

std::vector<VertexId> local_tree_vertices(const Graph& g, const SkeletonMask& sk, VertexId v) {
  std::vector<VertexId> members{v};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[v] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    VertexId x = members[i];
    auto nbrs = g.neighbours(x);
    auto inc = g.incident(x);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (sk.edge[inc[k]] || seen[nbrs[k]]) continue;
      seen[nbrs[k]] = true;
      members.push_back(nbrs[k]);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Graph local_tree(const Graph& g, VertexId v) {
  if (is_forest(g)) throw Error(ErrorKind::AcyclicGraph, "local trees need a cycle");
  SkeletonMask sk = skeleton_mask(g);
  if (v >= g.vertex_count() || !sk.vertex[v])
    throw Error(ErrorKind::NotInSkeleton, "vertex is not on the skeleton");
  auto members = local_tree_vertices(g, sk, v);
  // Skeleton edges never join two members (only v is on the skeleton).
  return g.induced(members);
}

std::map<VertexId, VertexType> classify_reduced(const Graph& h, const SkeletonMask& sk) {
  std::map<VertexId, VertexType> out;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (!sk.vertex[v]) continue;
    int leaves = 0, twigs = 0, other = 0;
    auto nbrs = h.neighbours(v);
    auto inc = h.incident(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (sk.edge[inc[k]]) continue;
      if (h.degree(nbrs[k]) == 1) {
        ++leaves;
      } else if (is_twig_base_at(h, nbrs[k], v)) {
        ++twigs;
      } else {
        ++other;
      }
    }
    VertexType t = VertexType::Unclassifiable;
    if (sk.degree[v] == 2) {
      if (other == 0 && twigs == 0 && leaves == 1) t = VertexType::LeafType;
      if (other == 0 && twigs == 1 && leaves == 0) t = VertexType::TwigType;
      if (other == 0 && twigs == 0 && leaves == 3) t = VertexType::TripleType;
    } else if (other == 0 && (leaves == 0 || twigs == 0)) {
      t = VertexType::Junction;
    }
    out.emplace(v, t);
  }
  return out;
}

std::map<std::string, VertexType> classify_vertices(const Graph& g) {
  if (is_forest(g)) throw Error(ErrorKind::AcyclicGraph, "classification needs a cycle");
  Graph h = reduce(g);
  SkeletonMask sk = skeleton_mask(h);
  std::map<std::string, VertexType> out;
  for (auto [v, t] : classify_reduced(h, sk)) out.emplace(h.name(v), t);
  return out;
}

std::vector<Limb> limbs_of(const Graph& h, const SkeletonMask& sk,
                           const std::map<VertexId, VertexType>& types) {
  auto is_leaf_type = [&](VertexId v) { return types.at(v) == VertexType::LeafType; };
  std::vector<bool> used(h.edge_count(), false);
  std::vector<Limb> out;
  for (auto [u, t] : types) {
    if (t == VertexType::LeafType) continue;
    auto nbrs = h.neighbours(u);
    auto inc = h.incident(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      EdgeId e = inc[k];
      if (!sk.edge[e] || used[e]) continue;
      Limb limb{{h.name(u)}};
      VertexId cur = nbrs[k];
      used[e] = true;
      limb.vertices.push_back(h.name(cur));
      while (is_leaf_type(cur)) {
        // The other skeleton edge of a skeleton-degree-2 vertex.
        auto cn = h.neighbours(cur);
        auto ci = h.incident(cur);
        std::size_t next = 0;
        while (!sk.edge[ci[next]] || used[ci[next]]) ++next;
        used[ci[next]] = true;
        cur = cn[next];
        limb.vertices.push_back(h.name(cur));
      }
      out.push_back(std::move(limb));
    }
  }
  return out;
}

std::vector<Limb> limbs(const Graph& g) {
  if (is_forest(g)) throw Error(ErrorKind::AcyclicGraph, "limbs need a cycle");
  Graph h = reduce(g);
  SkeletonMask sk = skeleton_mask(h);
  auto types = classify_reduced(h, sk);
  bool any = std::any_of(types.begin(), types.end(),
                         [](const auto& p) { return p.second != VertexType::LeafType; });
  if (!any) throw Error(ErrorKind::AllLeafType, "every skeleton vertex is leaf-type");
  return limbs_of(h, sk, types);
}

std::vector<std::vector<EdgeId>> common_cycle_classes(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> stack;
  std::vector<std::vector<EdgeId>> blocks;
  int timer = 0;
  std::function<void(VertexId, std::optional<EdgeId>)> dfs = [&](VertexId v,
                                                                 std::optional<EdgeId> via) {
    disc[v] = low[v] = timer++;
    auto nbrs = g.neighbours(v);
    auto inc = g.incident(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      VertexId w = nbrs[k];
      EdgeId e = inc[k];
      if (via && e == *via) continue;
      if (disc[w] == -1) {
        stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<EdgeId> block;
          EdgeId top;
          do {
            top = stack.back();
            stack.pop_back();
            block.push_back(top);
          } while (top != e);
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (VertexId v = 0; v < n; ++v)
    if (disc[v] == -1) dfs(v, std::nullopt);
  std::vector<std::vector<EdgeId>> classes;
  for (auto& b : blocks) {
    if (b.size() < 2) continue;  // bridge
    std::sort(b.begin(), b.end());
    classes.push_back(std::move(b));
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

bool is_cactus(const Graph& g) {
  for (const auto& cls : common_cycle_classes(g)) {
    std::vector<VertexId> vs;
    for (EdgeId e : cls) {
      vs.push_back(g.edge(e).u);
      vs.push_back(g.edge(e).v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() != cls.size()) return false;  // a block that is more than one cycle
  }
  return true;
}

std::vector<std::vector<VertexId>> bfs_layers(const Graph& g, VertexId v) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "bfs_layers needs a connected graph");
  if (v >= g.vertex_count()) throw Error(ErrorKind::UnknownVertex, "root not in graph");
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<std::vector<VertexId>> layers{{v}};
  dist[v] = 0;
  while (true) {
    std::vector<VertexId> next;
    for (VertexId x : layers.back())
      for (VertexId y : g.neighbours(x))
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          next.push_back(y);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

StructureReport analyze_structure(const Graph& g) {
  StructureReport report;
  report.reduced_form = reduce(g);
  report.is_cactus = is_cactus(g);
  for (const auto& cls : common_cycle_classes(g)) {
    std::vector<NamedEdge> named;
    for (EdgeId e : cls) named.push_back(g.named_edge(e));
    report.cycle_classes.push_back(std::move(named));
  }
  if (is_forest(g)) return report;
  const Graph& h = report.reduced_form;
  SkeletonMask sk = skeleton_mask(h);
  std::vector<EdgeId> sk_edges;
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    if (sk.edge[e]) sk_edges.push_back(e);
  report.skeleton = h.edge_subgraph(sk_edges);
  auto types = classify_reduced(h, sk);
  for (auto [v, t] : types) {
    report.classification.emplace(h.name(v), t);
    report.local_trees.emplace(h.name(v), h.induced(local_tree_vertices(h, sk, v)));
  }
  report.all_leaf_type = std::all_of(types.begin(), types.end(), [](const auto& p) {
    return p.second == VertexType::LeafType;
  });
  if (!report.all_leaf_type) report.limbs = limbs_of(h, sk, types);
  return report;
}

Json structure_to_json(const StructureReport& r) {
  Json doc;
  doc["reduced_form"] = graph_to_json(r.reduced_form);
  doc["skeleton"] = r.skeleton ? graph_to_json(*r.skeleton) : Json(nullptr);
  Json cls = Json::object();
  for (const auto& [name, t] : r.classification) cls[name] = std::string(to_string(t));
  doc["classification"] = std::move(cls);
  Json lt = Json::object();
  for (const auto& [name, tree] : r.local_trees) lt[name] = graph_to_json(tree);
  doc["local_trees"] = std::move(lt);
  Json limbs_json = Json::array();
  for (const auto& limb : r.limbs) limbs_json.push_back(limb.vertices);
  doc["limbs"] = std::move(limbs_json);
  doc["all_leaf_type"] = r.all_leaf_type;
  Json classes = Json::array();
  for (const auto& c : r.cycle_classes) {
    Json edges = Json::array();
    for (const auto& [a, b] : c) edges.push_back({a, b});
    classes.push_back(std::move(edges));
  }
  doc["cycle_classes"] = std::move(classes);
  doc["is_cactus"] = r.is_cactus;
  return doc;
}

}  // namespace asbg
