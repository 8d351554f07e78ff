#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "scgraph/constructions.hpp"
#include "scgraph/graph.hpp"

namespace scgraph::testing {

inline Graph path_p4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph cycle_c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
inline Graph k1() { return Graph(1); }
inline Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Triangle 0-1-2 with a horn 3 on 0 and a horn 4 on 1.
inline Graph bull() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}); }

// The bull minus vertex 4: triangle 0-1-2 plus pendant 3 on 0.
inline Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Every labelled graph on n vertices, encoded by the bits of `code` over the
// pairs (u < v) in row order.
inline Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((code >> bit) & 1U) g.add_edge(u, v);
  return g;
}

// Self-complementarity through the plain isomorphism search only.
inline bool brute_is_sc(const Graph& g) {
  const int m = g.order() * (g.order() - 1) / 2;
  if (m % 2 != 0) return false;
  if (g.edge_count() * 2 != m) return false;
  return find_isomorphism(g, complement(g)).has_value();
}

// One representative per isomorphism class, deduplicated pairwise with
// find_isomorphism (no canonical labelling involved).
inline std::vector<Graph> brute_sc_classes(int n) {
  std::vector<Graph> reps;
  const int m = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    Graph g = graph_from_code(n, code);
    if (!brute_is_sc(g)) continue;
    bool seen = false;
    for (const Graph& r : reps)
      if (find_isomorphism(g, r)) { seen = true; break; }
    if (!seen) reps.push_back(g);
  }
  return reps;
}

// Naive 4-part assignment oracles: try every map V -> {0,1,2,3}.
struct NaiveAssignment {
  bool found = false;
  std::vector<int> part;
};

template <typename Accept>
NaiveAssignment naive_four_parts(const Graph& g, Accept accept) {
  const int n = g.order();
  NaiveAssignment out;
  if (n < 4) return out;
  std::vector<int> part(n, 0);
  std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::array<int, 4> sizes{};
    for (int v = 0; v < n; ++v) {
      part[v] = static_cast<int>((code >> (2 * v)) & 3U);
      ++sizes[part[v]];
    }
    if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) continue;
    if (accept(part)) {
      out.found = true;
      out.part = part;
      return out;
    }
  }
  return out;
}

// Parts 0..3 = A, B, C, D. No A-B edge, every C-D edge.
inline NaiveAssignment naive_skew(const Graph& g) {
  return naive_four_parts(g, [&](const std::vector<int>& part) {
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) {
        if (u == v) continue;
        if (part[u] == 0 && part[v] == 1 && g.has_edge(u, v)) return false;
        if (part[u] == 2 && part[v] == 3 && !g.has_edge(u, v)) return false;
      }
    return true;
  });
}

// A-B and C-D complete, A-D and B-C empty.
inline NaiveAssignment naive_symmetric(const Graph& g) {
  return naive_four_parts(g, [&](const std::vector<int>& part) {
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) {
        if (u == v) continue;
        const int pu = part[u], pv = part[v];
        const bool e = g.has_edge(u, v);
        if (((pu == 0 && pv == 1) || (pu == 2 && pv == 3)) && !e) return false;
        if (((pu == 0 && pv == 3) || (pu == 1 && pv == 2)) && e) return false;
      }
    return true;
  });
}

inline bool has_triangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v) && !(g.neighbors(u) & g.neighbors(v)).empty()) return true;
  return false;
}

}  // namespace scgraph::testing
