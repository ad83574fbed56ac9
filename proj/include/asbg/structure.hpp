#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asbg/graph.hpp"
#include "asbg/io.hpp"

namespace asbg {

/// A leaf and a twig hanging off a common anchor. Names refer to the graph
/// the configuration was found in.
struct LeafTwig {
  std::string anchor;
  std::string leaf;
  std::string twig_base;
  std::array<std::string, 2> twig_leaves;

  friend bool operator==(const LeafTwig&, const LeafTwig&) = default;
};

/// Lexicographically least (anchor, leaf, twig base) configuration, if any.
std::optional<LeafTwig> find_leaf_twig(const Graph& g);

struct Reduction {
  Graph reduced;
  std::vector<LeafTwig> removed;  // in removal order
};

/// Strips leaf-twig configurations until none is left, always taking the
/// lexicographically least one.
Reduction reduce_with_trace(const Graph& g);
Graph reduce(const Graph& g);

/// Membership masks of the 2-core: what survives repeated leaf deletion.
struct SkeletonMask {
  std::vector<bool> vertex;
  std::vector<bool> edge;
  std::vector<int> degree;  // skeleton degree, 0 off the skeleton
};
SkeletonMask skeleton_mask(const Graph& g);

/// Throws AcyclicGraph when g is a forest.
Graph skeleton(const Graph& g);

/// Component of v once the skeleton edges are deleted. Throws NotInSkeleton.
Graph local_tree(const Graph& g, VertexId v);

enum class VertexType { LeafType, TwigType, TripleType, Junction, Unclassifiable };
std::string_view to_string(VertexType t);

/// Skeleton vertices classified on the reduced form of g, keyed by name.
/// Throws AcyclicGraph when g is a forest.
std::map<std::string, VertexType> classify_vertices(const Graph& g);

/// Classification of an already reduced graph, by vertex id of that graph;
/// vertices off the skeleton are absent.
std::map<VertexId, VertexType> classify_reduced(const Graph& reduced, const SkeletonMask& sk);

/// Skeleton trail whose interior vertices are all leaf-type.
struct Limb {
  std::vector<std::string> vertices;  // v1 ... vk, v1 == vk for closed limbs
  std::size_t length() const { return vertices.size() - 1; }
  bool closed() const { return vertices.front() == vertices.back(); }
  friend bool operator==(const Limb&, const Limb&) = default;
};

/// Limbs of g. Throws AcyclicGraph for forests and AllLeafType when no
/// skeleton vertex is non-leaf-type. Skeleton components that are cycles of
/// leaf-type vertices are not covered by any limb.
std::vector<Limb> limbs(const Graph& g);
std::vector<Limb> limbs_of(const Graph& reduced, const SkeletonMask& sk,
                           const std::map<VertexId, VertexType>& types);

/// Equivalence classes of "lie on a common cycle": the edge sets of the
/// non-bridge biconnected blocks. Each class sorted; classes ordered by
/// their first edge.
std::vector<std::vector<EdgeId>> common_cycle_classes(const Graph& g);

/// Every edge lies on at most one cycle (checked per component, so forests
/// qualify).
bool is_cactus(const Graph& g);

/// Distance layers from v. Throws Disconnected.
std::vector<std::vector<VertexId>> bfs_layers(const Graph& g, VertexId v);

struct StructureReport {
  Graph reduced_form;
  std::optional<Graph> skeleton;  // absent for forests
  std::map<std::string, Graph> local_trees;
  std::map<std::string, VertexType> classification;
  std::vector<Limb> limbs;
  bool all_leaf_type = false;
  std::vector<std::vector<NamedEdge>> cycle_classes;
  bool is_cactus = false;
};

StructureReport analyze_structure(const Graph& g);

Json structure_to_json(const StructureReport& report);

}  // namespace asbg
