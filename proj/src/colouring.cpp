#include "asbg/colouring.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "asbg/flow.hpp"

namespace asbg {

namespace {
constexpr std::size_t kNoLimb = static_cast<std::size_t>(-1);

long sign_power(std::size_t exponent) { return exponent % 2 == 0 ? 1 : -1; }
}  // namespace

std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::NotBipartite: return "NotBipartite";
    case Certificate::Unbalanced: return "Unbalanced";
    case Certificate::EvenDegreeVertex: return "EvenDegreeVertex";
    case Certificate::ReducedFormNotP2: return "ReducedFormNotP2";
    case Certificate::UnclassifiableVertex: return "UnclassifiableVertex";
    case Certificate::LimbParityViolation: return "LimbParityViolation";
    case Certificate::JunctionSumViolation: return "JunctionSumViolation";
    case Certificate::RedistributionFailure: return "RedistributionFailure";
  }
  return "Unknown";
}

Json decision_to_json(const Graph& g, const Decision& d) {
  Json doc;
  doc["colourable"] = d.colourable();
  doc["colouring"] = d.colouring ? colouring_to_json(g, *d.colouring) : Json(nullptr);
  doc["certificate"] = d.certificate ? Json(std::string(to_string(*d.certificate))) : Json(nullptr);
  return doc;
}

bool verify_difference1(const Graph& g, const Colouring& c) {
  if (c.size() != g.edge_count()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (colour_balance(g, c, v) != 1) return false;
  return true;
}

bool verify_difference1(const ColouredGraph& cg) {
  return verify_difference1(cg.graph, cg.colouring);
}

Colouring replay_reduction(const Graph& original, const Reduction& reduction,
                           const Colouring& reduced_colouring) {
  const Graph& h = reduction.reduced;
  Colouring c{std::vector<Colour>(original.edge_count(), Colour::Blue)};
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto [a, b] = h.named_edge(e);
    c[*original.edge_between(original.id(a), original.id(b))] = reduced_colouring[e];
  }
  // Leaf edges and twig-leaf edges stay blue; only the base edge is red.
  for (const LeafTwig& cfg : reduction.removed) {
    c[*original.edge_between(original.id(cfg.anchor), original.id(cfg.twig_base))] = Colour::Red;
  }
  return c;
}

namespace {

bool is_single_edge(const Graph& h) { return h.vertex_count() == 2 && h.edge_count() == 1; }

}  // namespace

Decision decide_tree(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorKind::NotATree, "decide_tree needs a tree");
  Reduction red = reduce_with_trace(t);
  if (!is_single_edge(red.reduced))
    return Decision::no(Certificate::ReducedFormNotP2,
                        std::to_string(red.reduced.vertex_count()) + " vertices remain");
  Colouring base{{Colour::Blue}};
  return Decision::yes(replay_reduction(t, red, base));
}

ReducedAnalysis analyze_reduced(const Graph& reduced) {
  if (is_forest(reduced)) throw Error(ErrorKind::AcyclicGraph, "analysis needs a cycle");
  ReducedAnalysis a;
  a.graph = reduced;
  const Graph& h = a.graph;
  a.skeleton = skeleton_mask(h);
  a.types = classify_reduced(h, a.skeleton);
  a.limb_of_edge.assign(h.edge_count(), kNoLimb);
  for (const Limb& limb : limbs_of(h, a.skeleton, a.types)) {
    LimbPath path;
    for (const auto& name : limb.vertices) path.vertices.push_back(h.id(name));
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
      EdgeId e = *h.edge_between(path.vertices[i], path.vertices[i + 1]);
      path.edges.push_back(e);
      a.limb_of_edge[e] = a.limbs.size();
    }
    a.limbs.push_back(std::move(path));
  }
  a.cycle_classes = common_cycle_classes(h);
  for (auto [v, t] : a.types)
    if (t == VertexType::Junction) a.junctions.push_back(v);
  return a;
}

std::optional<VertexId> find_unclassifiable(const ReducedAnalysis& a) {
  for (auto [v, t] : a.types)
    if (t == VertexType::Unclassifiable) return v;
  return std::nullopt;
}

std::optional<std::size_t> find_parity_violation(const ReducedAnalysis& a) {
  auto forced = [](VertexType t) { return t == VertexType::TwigType || t == VertexType::TripleType; };
  for (std::size_t i = 0; i < a.limbs.size(); ++i) {
    const LimbPath& limb = a.limbs[i];
    VertexType s = a.types.at(limb.vertices.front());
    VertexType t = a.types.at(limb.vertices.back());
    if (!forced(s) || !forced(t)) continue;
    bool odd = limb.edges.size() % 2 == 1;
    if ((s == t) != odd) return i;
  }
  return std::nullopt;
}

bool WeightAssignment::total() const {
  return std::all_of(weight.begin(), weight.end(), [](const auto& w) { return w.has_value(); });
}

long WeightAssignment::vertex_sum(const Graph& g, VertexId v) const {
  long sum = 0;
  for (EdgeId e : g.incident(v)) sum += weight[e].value_or(0);
  return sum;
}

namespace {

class WeightAssigner {
 public:
  WeightAssigner(const ReducedAnalysis& a, WeightAssignment& wa, const WeightOrder& order)
      : a_(a), wa_(wa), opened_(a.graph.vertex_count(), false) {
    if (order.seed) rng_.emplace(*order.seed);
  }

  void run() {
    std::vector<VertexId> order = a_.junctions;
    shuffle(order);
    for (VertexId j : order) {
      if (opened_[j]) continue;
      opened_[j] = true;
      assign(j, std::nullopt);
    }
  }

 private:
  struct Reach {
    VertexId far;
    EdgeId far_edge;
    std::size_t length;
  };

  // The limb through e, read from its end at j.
  Reach along(VertexId j, EdgeId e) const {
    const LimbPath& limb = a_.limbs[a_.limb_of_edge[e]];
    bool forward = limb.edges.front() == e && limb.vertices.front() == j;
    if (forward) return {limb.vertices.back(), limb.edges.back(), limb.edges.size()};
    return {limb.vertices.front(), limb.edges.front(), limb.edges.size()};
  }

  void assign(VertexId j, std::optional<EdgeId> skip) {
    const Graph& h = a_.graph;
    std::vector<EdgeId> edges(h.incident(j).begin(), h.incident(j).end());
    shuffle(edges);
    for (EdgeId e : edges) {
      if (e == skip || wa_.weight[e]) continue;
      if (!a_.skeleton.edge[e]) {
        // Local tree of a junction: a leaf (blue) or the base of a twig (red).
        wa_.weight[e] = h.degree(h.edge(e).other(j)) == 1 ? 1 : -1;
        continue;
      }
      Reach r = along(j, e);
      switch (a_.types.at(r.far)) {
        case VertexType::TwigType:
          wa_.weight[e] = sign_power(r.length + 1);
          break;
        case VertexType::TripleType:
          wa_.weight[e] = sign_power(r.length);
          break;
        case VertexType::Junction: {
          if (opened_[r.far]) {
            wa_.weight[e] = 0;
            break;
          }
          opened_[r.far] = true;
          assign(r.far, r.far_edge);
          long rest = 0;
          for (EdgeId f : h.incident(r.far))
            if (f != r.far_edge) rest += *wa_.weight[f];
          wa_.weight[r.far_edge] = 1 - rest;
          wa_.weight[e] = sign_power(r.length - 1) * *wa_.weight[r.far_edge];
          break;
        }
        default:
          throw Error(ErrorKind::PreconditionViolated, "limb ends at an unclassifiable vertex");
      }
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    if (rng_) std::shuffle(xs.begin(), xs.end(), *rng_);
  }

  const ReducedAnalysis& a_;
  WeightAssignment& wa_;
  std::vector<bool> opened_;
  std::optional<std::mt19937_64> rng_;
};

// Weights for every edge not touching a junction, given correct junction
// weights: local trees are forced, limbs alternate from a known end, and
// skeleton cycles of leaf-type vertices carry 0.
void totalize(const ReducedAnalysis& a, WeightAssignment& wa) {
  const Graph& h = a.graph;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (wa.weight[e] || a.skeleton.edge[e]) continue;
    const Edge& ed = h.edge(e);
    wa.weight[e] = (h.degree(ed.u) == 1 || h.degree(ed.v) == 1) ? 1 : -1;
  }
  for (const LimbPath& limb : a.limbs) {
    const std::size_t len = limb.edges.size();
    auto fill_from = [&](bool from_front, long first) {
      for (std::size_t i = 0; i < len; ++i) {
        EdgeId e = from_front ? limb.edges[i] : limb.edges[len - 1 - i];
        if (!wa.weight[e]) wa.weight[e] = sign_power(i) * first;
      }
    };
    if (wa.weight[limb.edges.front()]) {
      fill_from(true, *wa.weight[limb.edges.front()]);
    } else if (wa.weight[limb.edges.back()]) {
      fill_from(false, *wa.weight[limb.edges.back()]);
    } else {
      VertexType s = a.types.at(limb.vertices.front());
      bool front_forced = s == VertexType::TwigType || s == VertexType::TripleType;
      VertexType anchor = front_forced ? s : a.types.at(limb.vertices.back());
      fill_from(front_forced, anchor == VertexType::TwigType ? 1 : -1);
    }
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    if (!wa.weight[e]) wa.weight[e] = 0;
}

}  // namespace

WeightResult assign_weights(const ReducedAnalysis& a, const WeightOrder& order) {
  if (find_unclassifiable(a))
    throw Error(ErrorKind::PreconditionViolated, "assign_weights needs every skeleton vertex typed");
  if (find_parity_violation(a))
    throw Error(ErrorKind::PreconditionViolated, "assign_weights needs limb parity to hold");
  WeightResult out;
  out.weights.weight.assign(a.graph.edge_count(), std::nullopt);
  WeightAssigner(a, out.weights, order).run();
  out.result = true;
  for (VertexId j : a.junctions) {
    long sum = out.weights.vertex_sum(a.graph, j);
    out.weights.junction_sums[j] = sum;
    if (sum != 1 && out.result) {
      out.result = false;
      out.failed_junction = j;
    }
  }
  if (out.result) totalize(a, out.weights);
  return out;
}

WeightResult assign_weights(const Graph& g, const StructureReport& report, const WeightOrder& order) {
  if (!(g == report.reduced_form) || find_leaf_twig(g))
    throw Error(ErrorKind::PreconditionViolated, "assign_weights expects the reduced form of the report");
  return assign_weights(analyze_reduced(g), order);
}

namespace {

std::vector<bool> class_membership(const ReducedAnalysis& a) {
  std::vector<bool> in_class(a.graph.edge_count(), false);
  for (const auto& cls : a.cycle_classes)
    for (EdgeId e : cls) in_class[e] = true;
  return in_class;
}

bool outside_classes_forced(const ReducedAnalysis& a, const WeightAssignment& wa,
                            const std::vector<bool>& in_class) {
  for (EdgeId e = 0; e < a.graph.edge_count(); ++e) {
    if (in_class[e]) continue;
    long w = wa.weight[e].value_or(0);
    if (w != 1 && w != -1) return false;
  }
  return true;
}

}  // namespace

std::optional<Colouring> redistribute(const ReducedAnalysis& a, const WeightAssignment& wa) {
  if (!wa.total()) throw Error(ErrorKind::PreconditionViolated, "redistribute needs total weights");
  const Graph& h = a.graph;
  auto in_class = class_membership(a);
  if (!outside_classes_forced(a, wa, in_class)) return std::nullopt;

  Colouring c{std::vector<Colour>(h.edge_count(), Colour::Blue)};
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    if (!in_class[e] && *wa.weight[e] == -1) c[e] = Colour::Red;

  for (const auto& cls : a.cycle_classes) {
    Graph sub = h.edge_subgraph(cls);
    DegreeDemand demand(sub.vertex_count(), 0);
    for (VertexId s = 0; s < sub.vertex_count(); ++s) {
      VertexId v = h.id(sub.name(s));
      switch (a.types.at(v)) {
        case VertexType::TwigType: demand[s] = 0; break;
        case VertexType::LeafType: demand[s] = 1; break;
        case VertexType::TripleType: demand[s] = 2; break;
        default: {
          long deg = static_cast<long>(sub.degree(s));
          long x = 0;
          for (EdgeId f : sub.incident(s)) {
            auto [p, q] = sub.named_edge(f);
            x += *wa.weight[*h.edge_between(h.id(p), h.id(q))];
          }
          long twice = deg - x;
          if (twice % 2 != 0 || twice < 0 || twice > 2 * deg) return std::nullopt;
          demand[s] = static_cast<int>(twice / 2);
        }
      }
      if (demand[s] > static_cast<int>(sub.degree(s))) return std::nullopt;
    }
    auto red = degree_constrained_subgraph(sub, bipartition(sub), demand, DemandMode::Exact);
    if (!red) return std::nullopt;
    for (EdgeId f : *red) {
      auto [p, q] = sub.named_edge(f);
      c[*h.edge_between(h.id(p), h.id(q))] = Colour::Red;
    }
  }
  return c;
}

bool redistribute_cactus_check(const ReducedAnalysis& a, const WeightAssignment& wa) {
  const Graph& h = a.graph;
  if (!is_cactus(h)) throw Error(ErrorKind::NotCactus, "redistribute_cactus_check needs a cactus");
  if (!wa.total()) throw Error(ErrorKind::PreconditionViolated, "weights must be total");
  auto in_class = class_membership(a);
  if (!outside_classes_forced(a, wa, in_class)) return false;

  for (const auto& cycle : a.cycle_classes) {
    std::vector<bool> on(h.edge_count(), false);
    for (EdgeId e : cycle) on[e] = true;
    // Walk the cycle once: order[i] is a vertex, w[i] the sum of its two
    // cycle-edge weights.
    std::vector<long> w;
    VertexId start = h.edge(cycle.front()).u, cur = start;
    EdgeId via = cycle.front();
    do {
      EdgeId next = via;
      for (EdgeId f : h.incident(cur))
        if (on[f] && f != via) next = f;
      w.push_back(*wa.weight[via] + *wa.weight[next]);
      cur = h.edge(next).other(cur);
      via = next;
    } while (cur != start);
    std::vector<std::size_t> marked;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != -2 && w[i] != 0 && w[i] != 2) return false;
      if (w[i] != 0) marked.push_back(i);
    }
    const std::size_t len = w.size();
    for (std::size_t k = 0; k < marked.size(); ++k) {
      std::size_t i = marked[k];
      std::size_t j = marked[(k + 1) % marked.size()];
      std::size_t gap = (j + len - i) % len;
      if (gap == 0) gap = len;
      bool same = w[i] == w[j];
      if (same != (gap % 2 == 1)) return false;
    }
  }
  return true;
}

namespace {

Decision decide_cyclic_reduced(const ReducedAnalysis& a) {
  const Graph& h = a.graph;
  if (auto v = find_unclassifiable(a)) return Decision::no(Certificate::UnclassifiableVertex, h.name(*v));
  if (auto i = find_parity_violation(a)) {
    const LimbPath& limb = a.limbs[*i];
    return Decision::no(Certificate::LimbParityViolation,
                        h.name(limb.vertices.front()) + ".." + h.name(limb.vertices.back()));
  }
  WeightResult wr = assign_weights(a);
  if (!wr.result) return Decision::no(Certificate::JunctionSumViolation, h.name(*wr.failed_junction));
  auto c = redistribute(a, wr.weights);
  if (!c) return Decision::no(Certificate::RedistributionFailure);
  return Decision::yes(std::move(*c));
}

Decision decide_connected(const Graph& g) {
  Reduction red = reduce_with_trace(g);
  if (is_forest(red.reduced)) return decide_tree(g);
  Decision d = decide_cyclic_reduced(analyze_reduced(red.reduced));
  if (!d.colourable()) return d;
  Colouring full = replay_reduction(g, red, *d.colouring);
  if (!verify_difference1(g, full))
    throw std::logic_error("difference-1 pipeline produced an invalid colouring");
  return Decision::yes(std::move(full));
}

// Shared front-end checks; nullopt when all pass.
std::optional<Decision> screen(const Graph& g) {
  Bipartition bp;
  try {
    bp = bipartition(g);
  } catch (const OddCycleError& err) {
    return Decision::no(Certificate::NotBipartite, g.name(err.witness().front()));
  }
  std::size_t count = 0;
  auto label = component_labels(g, &count);
  std::vector<long> diff(count, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) diff[label[v]] += bp.in_part1(v) ? 1 : -1;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (diff[label[v]] != 0) return Decision::no(Certificate::Unbalanced, g.name(v));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 == 0) return Decision::no(Certificate::EvenDegreeVertex, g.name(v));
  return std::nullopt;
}

}  // namespace

Decision decide_unicyclic(const Graph& g) {
  if (!is_connected(g) || g.edge_count() != g.vertex_count())
    throw Error(ErrorKind::NotUnicyclic, "decide_unicyclic needs a connected graph with one cycle");
  if (auto d = screen(g)) return *d;
  Reduction red = reduce_with_trace(g);
  ReducedAnalysis a = analyze_reduced(red.reduced);
  const Graph& h = a.graph;
  if (auto v = find_unclassifiable(a)) return Decision::no(Certificate::UnclassifiableVertex, h.name(*v));
  if (auto i = find_parity_violation(a)) {
    const LimbPath& limb = a.limbs[*i];
    return Decision::no(Certificate::LimbParityViolation,
                        h.name(limb.vertices.front()) + ".." + h.name(limb.vertices.back()));
  }

  Colouring c{std::vector<Colour>(h.edge_count(), Colour::Blue)};
  // Off the cycle: only twig-base edges are red.
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Edge& ed = h.edge(e);
    if (!a.skeleton.edge[e] && h.degree(ed.u) != 1 && h.degree(ed.v) != 1) c[e] = Colour::Red;
  }
  if (a.limbs.empty()) {
    // A cycle of leaf-type vertices: alternate, starting blue at the least edge.
    VertexId start = 0;
    while (!a.skeleton.vertex[start]) ++start;
    VertexId cur = start;
    std::optional<EdgeId> via;
    std::size_t i = 0;
    do {
      EdgeId next = 0;
      for (EdgeId f : h.incident(cur))
        if (a.skeleton.edge[f] && f != via) {
          next = f;
          break;
        }
      c[next] = i++ % 2 == 0 ? Colour::Blue : Colour::Red;
      via = next;
      cur = h.edge(next).other(cur);
    } while (cur != start);
  } else {
    for (const LimbPath& limb : a.limbs) {
      // The front end is twig- or triple-type: every limb of a unicyclic
      // graph starts at a non-leaf-type vertex.
      Colour first = a.types.at(limb.vertices.front()) == VertexType::TwigType ? Colour::Blue : Colour::Red;
      for (std::size_t k = 0; k < limb.edges.size(); ++k)
        c[limb.edges[k]] = k % 2 == 0 ? first : opposite(first);
    }
  }
  Colouring full = replay_reduction(g, red, c);
  if (!verify_difference1(g, full))
    throw std::logic_error("unicyclic construction produced an invalid colouring");
  return Decision::yes(std::move(full));
}

Decision decide_difference1(const Graph& g) {
  if (auto d = screen(g)) return *d;
  if (is_connected(g)) return g.empty() ? Decision::yes(Colouring{}) : decide_connected(g);
  Colouring full{std::vector<Colour>(g.edge_count(), Colour::Blue)};
  for (const Graph& comp : components(g)) {
    Decision d = decide_connected(comp);
    if (!d.colourable()) return d;
    for (EdgeId e = 0; e < comp.edge_count(); ++e) {
      auto [p, q] = comp.named_edge(e);
      full[*g.edge_between(g.id(p), g.id(q))] = (*d.colouring)[e];
    }
  }
  return Decision::yes(std::move(full));
}

}  // namespace asbg
