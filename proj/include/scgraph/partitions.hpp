#pragma once

#include "scgraph/graph.hpp"

namespace scgraph {

/// No edges a-b, every edge c-d, all parts nonempty, covering V(G).
struct SkewPartition {
  VertexSet a, b, c, d;
  bool operator==(const SkewPartition&) const = default;
};

/// a-b complete, c-d complete, a-d anticomplete, b-c anticomplete.
struct SymmetricPartition {
  VertexSet a, b, c, d;
  bool operator==(const SymmetricPartition&) const = default;
};

bool is_complete_between(const Graph& g, VertexSet x, VertexSet y);
bool is_anticomplete_between(const Graph& g, VertexSet x, VertexSet y);

bool verify_skew_partition(const Graph& g, const SkewPartition& w);
bool verify_symmetric_partition(const Graph& g, const SymmetricPartition& w);
/// Symmetric partition of G[target] rather than of G.
bool verify_symmetric_partition(const Graph& g, const SymmetricPartition& w, VertexSet target);

}  // namespace scgraph
