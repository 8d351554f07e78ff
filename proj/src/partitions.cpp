#include "scgraph/partitions.hpp"

namespace scgraph {

namespace {

bool parts_ok(VertexSet a, VertexSet b, VertexSet c, VertexSet d, VertexSet target) {
  if (a.empty() || b.empty() || c.empty() || d.empty()) return false;
  if (!a.disjoint(b) || !a.disjoint(c) || !a.disjoint(d) || !b.disjoint(c) || !b.disjoint(d) ||
      !c.disjoint(d)) {
    return false;
  }
  return (a | b | c | d) == target;
}

}  // namespace

bool is_complete_between(const Graph& g, VertexSet x, VertexSet y) {
  for (int v : x.members()) {
    if (!(y - VertexSet{v}).subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_anticomplete_between(const Graph& g, VertexSet x, VertexSet y) {
  for (int v : x.members()) {
    if (!g.neighbors(v).disjoint(y)) return false;
  }
  return true;
}

bool verify_skew_partition(const Graph& g, const SkewPartition& w) {
  return parts_ok(w.a, w.b, w.c, w.d, g.vertices()) && is_anticomplete_between(g, w.a, w.b) &&
         is_complete_between(g, w.c, w.d);
}

bool verify_symmetric_partition(const Graph& g, const SymmetricPartition& w) {
  return verify_symmetric_partition(g, w, g.vertices());
}

bool verify_symmetric_partition(const Graph& g, const SymmetricPartition& w, VertexSet target) {
  return target.subset_of(g.vertices()) && parts_ok(w.a, w.b, w.c, w.d, target) &&
         is_complete_between(g, w.a, w.b) && is_complete_between(g, w.c, w.d) &&
         is_anticomplete_between(g, w.a, w.d) && is_anticomplete_between(g, w.b, w.c);
}

}  // namespace scgraph
