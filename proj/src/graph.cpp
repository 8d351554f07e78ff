#include "scgraph/graph.hpp"

#include <algorithm>

#include "scgraph/errors.hpp"

namespace scgraph {

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::of(std::span<const int> members) {
  VertexSet s;
  for (int v : members) s.insert(v);
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("vertex out of range");
  }
  if (u == v) throw InputError("loops are not allowed");
}

void Graph::add_edge(int u, int v) { set_edge(u, v, true); }
void Graph::remove_edge(int u, int v) { set_edge(u, v, false); }

void Graph::set_edge(int u, int v, bool present) {
  check_pair(u, v);
  if (present) {
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  } else {
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : (neighbors(u) - VertexSet::range(u + 1)).members()) out.emplace_back(u, v);
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  const auto all = VertexSet::range(n);
  for (int v = 0; v < n; ++v) {
    for (int u : (all - g.neighbors(v) - VertexSet{v}).members()) {
      if (u > v) h.add_edge(v, u);
    }
  }
  return h;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw InputError("induced_subgraph: vertex out of range");
  const auto members = s.members();
  return induced_subgraph(g, std::span<const int>(members));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> order) {
  InducedSubgraph out{Graph(static_cast<int>(order.size())), {order.begin(), order.end()}};
  VertexSet seen;
  for (int v : order) {
    if (v < 0 || v >= g.order()) throw InputError("induced_subgraph: vertex out of range");
    if (seen.contains(v)) throw InputError("induced_subgraph: duplicate vertex");
    seen.insert(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (g.has_edge(order[i], order[j])) {
        out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const int> new_index) {
  const int n = g.order();
  if (static_cast<int>(new_index.size()) != n) throw InputError("relabel: size mismatch");
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(new_index[u], new_index[v]);
  return h;
}

namespace {

void check_quad(const Graph& g, std::span<const int, 4> quad) {
  VertexSet s;
  for (int v : quad) {
    if (v < 0 || v >= g.order()) throw InputError("quad vertex out of range");
    if (s.contains(v)) throw InputError("quad has duplicate vertices");
    s.insert(v);
  }
}

}  // namespace

bool is_induced_p4(const Graph& g, std::span<const int, 4> quad) {
  check_quad(g, quad);
  const auto [w, x, y, z] = std::array{quad[0], quad[1], quad[2], quad[3]};
  return g.has_edge(w, x) && g.has_edge(x, y) && g.has_edge(y, z) && !g.has_edge(w, y) &&
         !g.has_edge(w, z) && !g.has_edge(x, z);
}

std::optional<std::array<int, 4>> p4_path_order(const Graph& g, std::span<const int, 4> quad) {
  check_quad(g, quad);
  std::array<int, 4> order{quad[0], quad[1], quad[2], quad[3]};
  std::sort(order.begin(), order.end());
  do {
    if (order[0] < order[3] && is_induced_p4(g, order)) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

VertexSet component_of(const Graph& g, VertexSet within, int seed) {
  VertexSet seen{seed};
  VertexSet frontier{seed};
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier.members()) next |= g.neighbors(v) & within;
    frontier = next - seen;
    seen |= frontier;
  }
  return seen;
}

bool is_connected(const Graph& g, VertexSet within) {
  if (within.empty()) return true;
  return component_of(g, within, within.min()) == within;
}

}  // namespace scgraph
