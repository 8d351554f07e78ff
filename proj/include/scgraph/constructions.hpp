#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scgraph/graph.hpp"
#include "scgraph/permutation.hpp"

namespace scgraph {

/// Output of the P4-construction. Vertex layout is four blocks of |V(g)|
/// vertices: [G1 | G3 | G4 | G2], with G1, G2 copies of g and G3, G4 copies of
/// its complement; blocks G1-G3, G3-G4, G4-G2 are completely joined.
struct P4Construction {
  Graph graph;
  /// Block map G1 -> G3 -> G2 -> G4 -> G1 at the same offset.
  Permutation antimorphism;
};

P4Construction p4_construction(const Graph& g);

/// Layout [G1 | H1 | H2 | G2]: G1, G2 copies of g, H1, H2 copies of the
/// complement of h, with G1-H1, H1-H2, H2-G2 completely joined.
Graph j_construction(const Graph& g, const Graph& h);

/// All cycle types of a permutation of n points obeying the Sachs-Ringel law
/// (parts multiples of 4, plus one fixed point when n = 1 mod 4). Parts in
/// decreasing order. Empty when n = 2, 3 (mod 4).
std::vector<std::vector<int>> sachs_ringel_cycle_types(int n);

/// The fixed representative permutation of a cycle type: consecutive blocks.
Permutation representative_permutation(const std::vector<int>& cycle_type);

/// Orbits of a permutation acting on unordered pairs; each orbit lists
/// p, sigma(p), sigma^2(p), ... starting from its least pair.
std::vector<std::vector<std::pair<int, int>>> pair_orbits(const Permutation& sigma);

/// One graph from the alternation family of sigma: bit b of orbit i decides
/// whether the orbit's first pair is an edge; pairs alternate along the orbit.
struct OrbitChoice {
  Permutation sigma;
  std::vector<std::vector<std::pair<int, int>>> orbits;
  std::vector<bool> bits;

  Graph decode() const;
};

struct EnumerationOptions {
  int max_n = 13;
  int jobs = 1;
};

/// One representative (canonically labelled) per isomorphism class of
/// self-complementary graphs on n vertices, sorted by canonical graph6.
/// Throws GuardExceeded when n > options.max_n.
std::vector<Graph> enumerate_sc_graphs(int n, const EnumerationOptions& options = {});

}  // namespace scgraph
