#include <doctest.h>

#include <algorithm>
#include <set>

#include "asbg/oracle.hpp"
#include "asbg/structure.hpp"
#include "support/graphs.hpp"
#include "support/reference.hpp"

using namespace asbg;
using namespace asbg::testkit;

namespace {

// C4 a-b-c-d with a twig at a, a leaf at b and d, three leaves at c.
Graph decorated_c4() {
  return make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "ta"}, {"ta", "ta1"}, {"ta", "ta2"},
                     {"b", "lb"}, {"c", "c1"}, {"c", "c2"}, {"c", "c3"}, {"d", "ld"}});
}

std::set<NamedEdge> edge_names(const Graph& g) {
  auto e = g.named_edges();
  return {e.begin(), e.end()};
}

// Leaf-twig stripping that picks a random configuration each round.
Graph reduce_randomly(Graph g, Rng& rng) {
  while (true) {
    std::vector<std::vector<VertexId>> found;  // {leaf, base, base leaf, base leaf}
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::vector<VertexId> leaves, bases;
      for (VertexId w : g.neighbours(v)) {
        if (g.degree(w) == 1) leaves.push_back(w);
        if (g.degree(w) != 3) continue;
        std::vector<VertexId> hanging;
        for (VertexId x : g.neighbours(w))
          if (x != v && g.degree(x) == 1) hanging.push_back(x);
        if (hanging.size() == 2) bases.push_back(w);
      }
      for (VertexId l : leaves)
        for (VertexId b : bases) {
          std::vector<VertexId> drop{l, b};
          for (VertexId x : g.neighbours(b))
            if (x != v) drop.push_back(x);
          found.push_back(drop);
        }
    }
    if (found.empty()) return g;
    auto& pick = found[rng() % found.size()];
    std::sort(pick.begin(), pick.end());
    g = g.without(pick);
  }
}

// Backtracking isomorphism test for small graphs.
bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> da, db;
  for (VertexId v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
  for (VertexId v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  const std::size_t n = a.vertex_count();
  std::vector<long> map(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (VertexId x : a.neighbours(v))
        if (x < v && !b.edge_between(w, static_cast<VertexId>(map[x]))) ok = false;
      if (!ok) continue;
      map[v] = static_cast<long>(w);
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

std::vector<Graph> small_graphs(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (int n = 1; n <= 9; ++n)
    for (const Graph& t : all_trees(n)) out.push_back(t);
  while (static_cast<int>(out.size()) < count) {
    Graph g = random_balanced_bipartite(rng, 12);
    if (g.vertex_count() <= 12) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("find_leaf_twig") {
  CHECK_FALSE(find_leaf_twig(p2()).has_value());

  Graph t = make_graph({{"v", "l"}, {"v", "b"}, {"b", "l1"}, {"b", "l2"}, {"u", "v"}});
  auto lt = find_leaf_twig(t);
  REQUIRE(lt.has_value());
  // v and b are both twig bases here; anchor b is the lexicographically least
  CHECK(lt->anchor == "b");
  CHECK(lt->leaf == "l1");
  CHECK(lt->twig_base == "v");
  CHECK(lt->twig_leaves == std::array<std::string, 2>{"l", "u"});

  Graph t2 = make_graph({{"v", "l"}, {"v", "b"}, {"b", "l1"}, {"b", "l2"}, {"u", "v"}, {"u", "w"}});
  auto lt2 = find_leaf_twig(t2);
  REQUIRE(lt2.has_value());
  CHECK(*lt2 == LeafTwig{"v", "l", "b", {"l1", "l2"}});

  std::vector<NamedEdge> edges;
  for (int i = 1; i <= 6; ++i) {
    edges.push_back({vname('c', i), vname('c', i % 6 + 1)});
    edges.push_back({vname('c', i), vname('l', i)});
  }
  CHECK_FALSE(find_leaf_twig(make_graph(edges)).has_value());
}

TEST_CASE("reduce") {
  CHECK(reduce(p2()) == p2());
  CHECK(reduce(double_star(2)).edge_count() == 1);
  CHECK(reduce(double_star(2)).vertex_count() == 2);
  auto trace = reduce_with_trace(double_star(2));
  REQUIRE(trace.removed.size() == 1);
  CHECK(trace.removed[0] == LeafTwig{"A", "a0", "B", {"b0", "b1"}});
  CHECK(reduce(double_star(4)).edge_count() > 1);
  CHECK(reduce(pinwheel()) == pinwheel());
  CHECK(reduce(bowtie()) == bowtie());
}

TEST_CASE("skeleton") {
  CHECK(edge_names(skeleton(pinwheel())) == std::set<NamedEdge>{{"a", "b"}, {"a", "d"}, {"b", "c"}, {"c", "d"}});
  CHECK(skeleton(c6()) == c6());
  try {
    skeleton(double_star(2));
    FAIL("expected AcyclicGraph");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AcyclicGraph);
  }
}

TEST_CASE("local_tree") {
  Graph pin = pinwheel();
  for (std::string v : {"a", "b", "c", "d"}) CHECK(edge_names(local_tree(pin, pin.id(v))) == std::set<NamedEdge>{{v, "l" + v}});

  Graph c = c6();
  Graph single = local_tree(c, c.id("c3"));
  CHECK(single.vertex_count() == 1);
  CHECK(single.name(0) == "c3");

  Graph d = decorated_c4();
  CHECK(edge_names(local_tree(d, d.id("a"))) == std::set<NamedEdge>{{"a", "ta"}, {"ta", "ta1"}, {"ta", "ta2"}});

  try {
    local_tree(pin, pin.id("la"));
    FAIL("expected NotInSkeleton");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInSkeleton);
  }
}

TEST_CASE("classify_vertices") {
  for (auto [v, t] : classify_vertices(pinwheel())) CHECK(t == VertexType::LeafType);

  auto types = classify_vertices(decorated_c4());
  CHECK(types.size() == 4);
  CHECK(types.at("a") == VertexType::TwigType);
  CHECK(types.at("b") == VertexType::LeafType);
  CHECK(types.at("c") == VertexType::TripleType);
  CHECK(types.at("d") == VertexType::LeafType);

  auto bow = classify_vertices(bowtie());
  CHECK(bow.at("j") == VertexType::Junction);
  for (auto [v, t] : bow)
    if (v != "j") CHECK(t == VertexType::LeafType);

  // two leaves on a cycle vertex fit none of the types
  Graph two = make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "x"}, {"a", "y"}});
  CHECK(classify_vertices(two).at("a") == VertexType::Unclassifiable);
}

TEST_CASE("limbs") {
  auto bow = limbs(bowtie());
  REQUIRE(bow.size() == 2);
  for (const Limb& l : bow) {
    CHECK(l.closed());
    CHECK(l.length() == 4);
    CHECK(l.vertices.front() == "j");
  }

  auto th = limbs(theta());
  REQUIRE(th.size() == 3);
  for (const Limb& l : th) CHECK(l.length() == 3);

  try {
    limbs(pinwheel());
    FAIL("expected AllLeafType");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AllLeafType);
  }
}

TEST_CASE("common_cycle_classes") {
  auto bow = common_cycle_classes(bowtie());
  REQUIRE(bow.size() == 2);
  CHECK(bow[0].size() == 4);
  CHECK(bow[1].size() == 4);

  auto th = common_cycle_classes(theta());
  REQUIRE(th.size() == 1);
  CHECK(th[0].size() == 9);

  CHECK(common_cycle_classes(double_star(3)).empty());
}

TEST_CASE("is_cactus") {
  CHECK(is_cactus(bowtie()));
  CHECK(is_cactus(pinwheel()));
  CHECK_FALSE(is_cactus(k33()));
  CHECK_FALSE(is_cactus(theta()));
  CHECK(is_cactus(double_star(3)));
}

TEST_CASE("bfs_layers") {
  Graph p = p2();
  auto l = bfs_layers(p, 0);
  CHECK(l == std::vector<std::vector<VertexId>>{{0}, {1}});

  std::vector<std::size_t> sizes;
  for (const auto& layer : bfs_layers(c6(), 2)) sizes.push_back(layer.size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 1});

  Graph bow = bowtie();
  sizes.clear();
  for (const auto& layer : bfs_layers(bow, bow.id("j"))) sizes.push_back(layer.size());
  CHECK(sizes == std::vector<std::size_t>{1, 5, 6, 2});

  CHECK_THROWS_AS(bfs_layers(make_graph({{"a", "b"}, {"c", "d"}}), 0), Error);
}

TEST_CASE("property: reduce is idempotent and order independent") {
  Rng rng(21);
  for (const Graph& g : small_graphs(22, 400)) {
    Graph h = reduce(g);
    CHECK(reduce(h) == h);
    CHECK_FALSE(find_leaf_twig(h).has_value());
    for (int round = 0; round < 3; ++round) CHECK(isomorphic(h, reduce_randomly(g, rng)));
  }
}

TEST_CASE("property: reduction keeps the skeleton") {
  for (const Graph& g : small_graphs(23, 400)) {
    if (is_forest(g)) continue;
    CHECK(edge_names(skeleton(reduce(g))) == edge_names(skeleton(g)));
  }
}

TEST_CASE("property: cycle classes match explicit cycle enumeration") {
  Rng rng(24);
  int compared = 0;
  for (int i = 0; i < 400; ++i) {
    Graph g = random_bipartite(rng, 5, 45);
    if (g.edge_count() > 12) continue;
    CHECK(common_cycle_classes(g) == oracle_cycle_relation(g));
    ++compared;
  }
  CHECK(compared > 100);
  CHECK(common_cycle_classes(bowtie()) == oracle_cycle_relation(bowtie(), {20, 64, 60.0}));
}

TEST_CASE("property: limbs cover the skeleton edges once") {
  Rng rng(25);
  int checked = 0;
  for (int i = 0; i < 600 && checked < 200; ++i) {
    Graph g = reduce(random_balanced_bipartite(rng, 18));
    if (is_forest(g)) continue;
    auto types = classify_vertices(g);
    bool all_leaf = std::all_of(types.begin(), types.end(),
                                [](const auto& p) { return p.second == VertexType::LeafType; });
    if (all_leaf) continue;
    std::multiset<NamedEdge> covered;
    for (const Limb& l : limbs(g)) {
      for (std::size_t k = 0; k + 1 < l.vertices.size(); ++k) {
        auto a = l.vertices[k], b = l.vertices[k + 1];
        covered.insert(a < b ? NamedEdge{a, b} : NamedEdge{b, a});
        if (k > 0) CHECK(types.at(a) == VertexType::LeafType);
      }
      CHECK(types.at(l.vertices.front()) != VertexType::LeafType);
      CHECK(types.at(l.vertices.back()) != VertexType::LeafType);
    }
    auto sk = edge_names(skeleton(g));
    // cycles made only of leaf-type vertices are not part of any limb
    for (const NamedEdge& e : covered) CHECK(covered.count(e) == 1);
    for (const NamedEdge& e : covered) CHECK(sk.count(e) == 1);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("property: bfs layers match all-pairs distances") {
  Rng rng(26);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_tree(rng, 1 + static_cast<int>(rng() % 12));
    if (i % 2) g = random_balanced_bipartite(rng, 12);
    if (g.vertex_count() > 12) continue;
    auto d = reference::all_pairs_distances(g);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      auto layers = bfs_layers(g, s);
      std::size_t seen = 0;
      for (std::size_t k = 0; k < layers.size(); ++k)
        for (VertexId v : layers[k]) {
          CHECK(d[s][v] == static_cast<int>(k));
          ++seen;
        }
      CHECK(seen == g.vertex_count());
    }
  }
}
