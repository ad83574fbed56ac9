#pragma once

// Curated graphs and random generators shared by the unit, property and
// acceptance tests.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "asbg/graph.hpp"

namespace asbg::testkit {

using Rng = std::mt19937_64;

/// Graph from an edge list; vertices are the endpoints plus `isolated`.
Graph make_graph(const std::vector<NamedEdge>& edges, const std::vector<std::string>& isolated = {});

/// Colouring from the names of the red edges ("u--v" or "v--u").
Colouring colouring_with_red(const Graph& g, const std::vector<NamedEdge>& red);

Graph p2();
/// Centres A and B joined by an edge, each with `leaves` leaves.
Graph double_star(int leaves);
/// C4 a-b-c-d with one leaf per cycle vertex.
Graph pinwheel();
/// Two 4-cycles through j, a leaf at j and at every other cycle vertex.
Graph bowtie();
/// Three paths of length 3 between u and v, a leaf on each interior vertex.
Graph theta();
Graph k33();
Graph c6();
/// Double star with 4 leaves per centre: passes the necessary checks but
/// has no difference-1 colouring.
Graph unfeasible();
/// A and B share neighbours X, Y, Z; the colouring below makes A need Y
/// between X and Z and B need X between Y and Z.
Graph unconfigurable();
Colouring unconfigurable_colouring();

/// Junction j with a leaf, a leaf-decorated 4-cycle, and a 6-cycle
/// j-x-l-z-y-w where x is twig-type, z and y triple-type, l and w leaf-type.
/// The forced weights give w(j) = 3; the graph is unbalanced (25 edges).
Graph junction_surplus();
/// Edge u-v plus two u-v paths of length 3 whose interior vertices carry
/// three leaves each. Passes every check up to redistribution, which fails.
Graph triple_theta();
/// Balanced cactus of three 4-cycles (two through p00, one through q03)
/// with pendant decorations. Passes every check up to redistribution, which
/// fails on the q03 cycle; it has no difference-1 colouring.
Graph cactus_deficit();

struct Named {
  std::string name;
  Graph graph;
};
/// P2, double stars (1, 2, 3, 4 leaves per centre), pinwheel, bowtie,
/// theta, K33, C6, the unfeasible and unconfigurable graphs, and
/// triple_theta.
std::vector<Named> curated_suite();

/// Every rooted level sequence on n vertices (so every unlabelled tree
/// appears at least once), as graphs.
std::vector<Graph> all_trees(int n);

/// Uniform-ish random labelled tree (random attachment).
Graph random_tree(Rng& rng, int n);

/// Connected, balanced bipartite graph with at most `max_edges` edges. Half
/// of the draws repair even degrees with pendant leaves so that a fair share
/// is difference-1 colourable.
Graph random_balanced_bipartite(Rng& rng, int max_edges);

/// Connected cactus built from pendant edges and even cycles, even degrees
/// repaired with leaves. Not necessarily balanced.
Graph random_cactus(Rng& rng, int max_vertices);

/// Random bipartite graph with part sizes in [1, max_part] (part 1 vertices
/// named "p..", part 2 "q.."), possibly disconnected.
Graph random_bipartite(Rng& rng, int max_part, int density_percent);

std::string vname(char prefix, int i);

}  // namespace asbg::testkit
