#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scgraph {

/// Subset of {0..63} stored as a 64-bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static VertexSet of(std::span<const int> members);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  std::vector<int> members() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(VertexSet o) const { return (bits_ & o.bits_) == 0; }

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1, n <= 64, stored as bitset rows.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void set_edge(int u, int v, bool present);

  /// N(v); never contains v.
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  /// Non-neighbours of v, including v itself.
  VertexSet non_neighbors(int v) const { return vertices() - neighbors(v); }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  std::span<const std::uint64_t> rows() const { return rows_; }

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

Graph complement(const Graph& g);

/// Induced subgraph on `s`; `mapping[i]` is the original vertex relabelled i
/// (members of `s` in increasing order).
struct InducedSubgraph {
  Graph graph;
  std::vector<int> mapping;
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// Same as above but keeps the caller's vertex order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> order);

/// Relabels so that vertex v of `g` becomes `new_index[v]`.
Graph relabel(const Graph& g, std::span<const int> new_index);

/// True iff w-x-y-z is an induced path with exactly the edges wx, xy, yz.
bool is_induced_p4(const Graph& g, std::span<const int, 4> quad);

/// If `quad` induces a P4, returns it in path order starting from the
/// endpoint with the smaller index.
std::optional<std::array<int, 4>> p4_path_order(const Graph& g, std::span<const int, 4> quad);

bool is_connected(const Graph& g, VertexSet within);
/// Connected component of G[within] that contains `seed`.
VertexSet component_of(const Graph& g, VertexSet within, int seed);

// graph6 (one graph per line, n <= 62).
std::string write_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

struct CanonicalForm {
  /// labeling[v] = position of v in the canonical order.
  std::vector<int> labeling;
  /// graph6 of the canonically relabelled graph.
  std::string code;
};

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

/// Direct backtracking search for an isomorphism g -> h; result[v] is the
/// image of v. Independent of canonical_form.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

}  // namespace scgraph
