#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asbg/graph.hpp"
#include "asbg/io.hpp"
#include "asbg/structure.hpp"

namespace asbg {

/// Why a graph has no difference-1 colouring.
enum class Certificate {
  NotBipartite,
  Unbalanced,
  EvenDegreeVertex,
  ReducedFormNotP2,  // tree whose reduced form is not a single edge
  UnclassifiableVertex,
  LimbParityViolation,
  JunctionSumViolation,
  RedistributionFailure,
};
std::string_view to_string(Certificate c);

struct Decision {
  std::optional<Colouring> colouring;    // set iff colourable
  std::optional<Certificate> certificate;  // set iff not colourable
  std::string detail;                    // offending vertex/limb, if any

  bool colourable() const { return colouring.has_value(); }

  static Decision yes(Colouring c) { return {std::move(c), std::nullopt, {}}; }
  static Decision no(Certificate why, std::string detail = {}) {
    return {std::nullopt, why, std::move(detail)};
  }
};

/// {"colourable": bool, "colouring": {...} | null, "certificate": string | null}
Json decision_to_json(const Graph& g, const Decision& d);

/// deg^B(v) - deg^R(v) = 1 at every vertex.
bool verify_difference1(const Graph& g, const Colouring& c);
bool verify_difference1(const ColouredGraph& cg);

/// Colourable iff the reduced form is P2; the colouring is rebuilt by
/// replaying the removed configurations. Throws NotATree.
Decision decide_tree(const Graph& t);

/// Junction-free construction for unicyclic graphs: twig-type vertices get
/// blue skeleton edges, triple-type red, limbs alternate. Throws NotUnicyclic.
Decision decide_unicyclic(const Graph& g);

/// A limb of a reduced graph in vertex and edge ids.
struct LimbPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;  // edges[i] joins vertices[i] and vertices[i+1]
};

/// Everything the weight and redistribution stages read about a reduced,
/// cyclic graph.
struct ReducedAnalysis {
  Graph graph;
  SkeletonMask skeleton;
  std::map<VertexId, VertexType> types;
  std::vector<LimbPath> limbs;
  std::vector<std::size_t> limb_of_edge;  // npos off the skeleton / off every limb
  std::vector<std::vector<EdgeId>> cycle_classes;
  std::vector<VertexId> junctions;

  bool is_junction(VertexId v) const {
    auto it = types.find(v);
    return it != types.end() && it->second == VertexType::Junction;
  }
};

/// Throws AcyclicGraph for forests. `reduced` is taken as-is.
ReducedAnalysis analyze_reduced(const Graph& reduced);

/// First vertex that is not leaf/twig/triple-type or a junction.
std::optional<VertexId> find_unclassifiable(const ReducedAnalysis& a);

/// First limb between twig/triple-type endpoints of the wrong parity: odd
/// length for equal types, even for opposite types.
std::optional<std::size_t> find_parity_violation(const ReducedAnalysis& a);

/// Integer edge weights: +1 forces blue, -1 forces red, anything else is
/// undetermined (0) or surplus (|w| > 1).
struct WeightAssignment {
  std::vector<std::optional<long>> weight;  // per edge of the reduced graph
  std::map<VertexId, long> junction_sums;

  bool total() const;
  long vertex_sum(const Graph& g, VertexId v) const;
};

/// Order in which junctions are opened and their edges visited. The default
/// is lexicographic; a seed shuffles both.
struct WeightOrder {
  std::optional<std::uint64_t> seed;
};

struct WeightResult {
  bool result = false;
  WeightAssignment weights;
  std::optional<VertexId> failed_junction;
};

/// Junction weight assignment. Requires no unclassifiable vertex and
/// correct limb parity (PreconditionViolated otherwise). Returns false iff
/// some junction sum differs from 1; on true every edge carries a weight
/// and every vertex sums to 1.
WeightResult assign_weights(const ReducedAnalysis& a, const WeightOrder& order = {});

/// Same, for a reduced graph and its structure report.
WeightResult assign_weights(const Graph& g, const StructureReport& report,
                            const WeightOrder& order = {});

/// Resolves undetermined and surplus weights one common cycle class at a
/// time with an exact degree-constrained subgraph. Weights outside the
/// classes must already be +-1. Colouring is of the reduced graph.
std::optional<Colouring> redistribute(const ReducedAnalysis& a, const WeightAssignment& wa);

/// Direct per-cycle criterion for cactus graphs: every w_C(v) is in
/// {-2, 0, 2} and consecutive +-2 vertices around a cycle sit at odd
/// distance when equal, even when opposite. Throws NotCactus.
bool redistribute_cactus_check(const ReducedAnalysis& a, const WeightAssignment& wa);

/// The full decision procedure: validation, reduction, tree or
/// classification/weights/redistribution, then replay of the removed
/// configurations. Disconnected graphs are decided per component.
Decision decide_difference1(const Graph& g);

/// Extends a colouring of `reduction.reduced` to the original graph.
Colouring replay_reduction(const Graph& original, const Reduction& reduction,
                           const Colouring& reduced_colouring);

}  // namespace asbg
