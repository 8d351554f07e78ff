#include "scgraph/structure.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include "scgraph/antimorphism.hpp"
#include "scgraph/errors.hpp"

namespace scgraph {

DetectorLimits DetectorLimits::from_environment() {
  DetectorLimits limits;
  if (const char* raw = std::getenv("SCGRAPH_MAX_N")) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
    if (ec == std::errc{} && *ptr == '\0' && value > 0) {
      limits.max_skew_n = value;
      limits.max_symmetric_n = value;
    }
  }
  return limits;
}

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kC5: return "c5";
    case OutcomeKind::kSkew: return "skew";
    case OutcomeKind::kSymmetric: return "symmetric";
  }
  return "?";
}

OutcomeKind kind_of(const Witness& w) {
  if (std::holds_alternative<C5Witness>(w)) return OutcomeKind::kC5;
  if (std::holds_alternative<SkewPartition>(w)) return OutcomeKind::kSkew;
  return OutcomeKind::kSymmetric;
}

bool verify_witness(const Graph& g, const Witness& w) {
  if (const auto* c5 = std::get_if<C5Witness>(&w)) {
    if (!is_induced_c5(g, *c5)) return false;
    for (int i = 0; i < 5; ++i)
      if (!g.has_edge((*c5)[i], (*c5)[(i + 1) % 5])) return false;
    return true;
  }
  if (const auto* skew = std::get_if<SkewPartition>(&w)) return verify_skew_partition(g, *skew);
  return verify_symmetric_partition(g, std::get<SymmetricPartition>(w));
}

bool is_induced_c5(const Graph& g, std::span<const int> five) {
  if (five.size() != 5) return false;
  VertexSet s;
  for (int v : five) {
    if (v < 0 || v >= g.order() || s.contains(v)) return false;
    s.insert(v);
  }
  // A 2-regular graph on five vertices is a 5-cycle.
  return std::all_of(five.begin(), five.end(), [&](int v) { return (g.neighbors(v) & s).size() == 2; });
}

namespace {

C5Witness cycle_order(const Graph& g, VertexSet s) {
  C5Witness out{};
  int prev = -1;
  int cur = s.min();
  for (int& slot : out) {
    slot = cur;
    const auto nbrs = (g.neighbors(cur) & s).members();
    const int next = (prev == -1) ? nbrs.front() : (nbrs.front() == prev ? nbrs.back() : nbrs.front());
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace

std::optional<C5Witness> find_induced_c5(const Graph& g) {
  const int n = g.order();
  std::array<int, 5> pick{};
  for (pick[0] = 0; pick[0] < n; ++pick[0])
    for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
      for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
        for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3])
          for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4]) {
            if (is_induced_c5(g, pick)) return cycle_order(g, VertexSet::of(pick));
          }
  return std::nullopt;
}

std::optional<SkewPartition> find_skew_partition(const Graph& g, const DetectorLimits& limits) {
  const int n = g.order();
  if (n > limits.max_skew_n) {
    throw GuardExceeded("find_skew_partition: n = " + std::to_string(n) + " exceeds the guard " +
                        std::to_string(limits.max_skew_n));
  }
  if (n < 4) return std::nullopt;
  const Graph co = complement(g);
  const std::uint64_t all = VertexSet::range(n).bits();
  for (std::uint64_t mask = 1; mask < all; ++mask) {
    const VertexSet s(mask);
    const VertexSet rest = VertexSet(all) - s;
    if (s.size() < 2 || rest.size() < 2) continue;
    const VertexSet a = component_of(g, s, s.min());
    if (a == s) continue;
    const VertexSet c = component_of(co, rest, rest.min());
    if (c == rest) continue;
    return SkewPartition{a, s - a, c, rest - c};
  }
  return std::nullopt;
}

namespace {

// Parts: 0 = A, 1 = B, 2 = C, 3 = D. forbid_nbr[p] / forbid_non[p] are the
// parts a neighbour / non-neighbour of a vertex in p may not take.
constexpr std::array<int, 4> kForbidNeighbor = {3, 2, 1, 0};
constexpr std::array<int, 4> kForbidNonNeighbor = {1, 0, 3, 2};

class SymmetricSearch {
 public:
  explicit SymmetricSearch(const Graph& g) : g_(g), n_(g.order()), domain_(n_, 0xF), part_(n_, -1) {}

  std::optional<SymmetricPartition> run() {
    if (n_ < 4 || !assign(0, domain_)) return std::nullopt;
    SymmetricPartition w;
    std::array<VertexSet*, 4> parts{&w.a, &w.b, &w.c, &w.d};
    for (int v = 0; v < n_; ++v) parts[part_[v]]->insert(v);
    return w;
  }

 private:
  bool assign(int v, const std::vector<std::uint8_t>& domain) {
    if (v == n_) return std::all_of(used_.begin(), used_.end(), [](int c) { return c > 0; });
    int missing = 0;
    for (int p = 0; p < 4; ++p) {
      if (used_[p] > 0) continue;
      ++missing;
      bool reachable = false;
      for (int u = v; u < n_ && !reachable; ++u) reachable = (domain[u] >> p) & 1U;
      if (!reachable) return false;
    }
    if (missing > n_ - v) return false;

    for (int p = 0; p < 4; ++p) {
      if (!((domain[v] >> p) & 1U)) continue;
      auto next = domain;
      next[v] = static_cast<std::uint8_t>(1U << p);
      bool ok = true;
      for (int u = 0; u < n_ && ok; ++u) {
        if (u == v) continue;
        const int banned = g_.has_edge(u, v) ? kForbidNeighbor[p] : kForbidNonNeighbor[p];
        next[u] &= static_cast<std::uint8_t>(~(1U << banned));
        ok = next[u] != 0;
      }
      if (!ok) continue;
      part_[v] = p;
      ++used_[p];
      if (assign(v + 1, next)) return true;
      --used_[p];
      part_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint8_t> domain_;
  std::vector<int> part_;
  std::array<int, 4> used_{};
};

}  // namespace

std::optional<SymmetricPartition> find_symmetric_partition(const Graph& g, const DetectorLimits& limits) {
  if (g.order() > limits.max_symmetric_n) {
    throw GuardExceeded("find_symmetric_partition: n = " + std::to_string(g.order()) + " exceeds the guard " +
                        std::to_string(limits.max_symmetric_n));
  }
  return SymmetricSearch(g).run();
}

std::optional<Permutation> find_theorem_m_antimorphism(const Graph& g) {
  const int n = g.order();
  if (n == 5) return find_antimorphism_with_cycle_type(g, {4, 1});
  if (n >= 8 && n % 4 == 0) return find_antimorphism_with_cycle_type(g, {4, n - 4});
  return std::nullopt;
}

StructureReport conjecture_check(const Graph& g, const DetectorLimits& limits) {
  if (!find_antimorphism(g)) throw InputError("conjecture_check: graph is not self-complementary");
  StructureReport report;
  report.graph = canonical_form(g).code;
  report.n = g.order();
  report.in_conjecture_scope = g.order() % 4 == 0;
  report.c5 = find_induced_c5(g);
  report.skew = find_skew_partition(g, limits);
  report.symmetric = find_symmetric_partition(g, limits);
  report.conjecture_holds = report.c5 || report.skew || report.symmetric;

  if (const auto t = find_theorem_m_antimorphism(g)) {
    const auto result = theorem_m_decompose(g, *t);
    bool found = false;
    switch (result.kind) {
      case OutcomeKind::kC5: found = report.c5.has_value(); break;
      case OutcomeKind::kSkew: found = report.skew.has_value(); break;
      case OutcomeKind::kSymmetric: found = report.symmetric.has_value(); break;
    }
    report.theorem_m = TheoremMEntry{result.case_number, result.kind, found};
  }
  return report;
}

namespace {

int component_count(const Graph& g, VertexSet within) {
  int count = 0;
  while (!within.empty()) {
    within = within - component_of(g, within, within.min());
    ++count;
  }
  return count;
}

}  // namespace

bool is_cut_vertex(const Graph& g, int v) {
  const VertexSet all = g.vertices();
  return component_count(g, all - VertexSet{v}) > component_count(g, all);
}

AkiyamaHararyResult akiyama_harary_check(const Graph& g) {
  AkiyamaHararyResult out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.end_vertices.push_back(v);
    if (is_cut_vertex(g, v)) out.cut_vertices.push_back(v);
  }
  if (out.end_vertices.empty()) throw InputError("akiyama_harary_check: graph has no end-vertex");
  if (out.end_vertices.size() != 2 || out.cut_vertices.size() != 2) return out;

  const int b = out.end_vertices[0], d = out.end_vertices[1];
  const int a = out.cut_vertices[0], c = out.cut_vertices[1];
  const VertexSet rest = g.vertices() - VertexSet{a, b, c, d};
  SkewPartition w{VertexSet{b}, VertexSet{d}, VertexSet{a, c}, rest};
  if (rest.empty()) {
    out.degenerate = true;
    w = SkewPartition{VertexSet{b}, VertexSet{d}, VertexSet{a}, VertexSet{c}};
  }
  if (verify_skew_partition(g, w)) out.skew = w;
  return out;
}

namespace {

bool requirement_components(const Graph& g, VertexSet x, VertexSet a, VertexSet b) {
  VertexSet left = x;
  while (!left.empty()) {
    const VertexSet comp = component_of(g, x, left.min());
    if (comp.disjoint(a) || comp.disjoint(b)) return false;
    left = left - comp;
  }
  return true;
}

// If |A| = |B| = 1 and G[X] is a path with those two vertices as ends, the
// path needs length at least 3.
bool requirement_path_length(const Graph& g, VertexSet x, VertexSet a, VertexSet b) {
  if (a.size() != 1 || b.size() != 1) return true;
  const auto sub = induced_subgraph(g, x);
  const Graph& h = sub.graph;
  const int m = h.order();
  if (!is_connected(h, h.vertices()) || h.edge_count() != m - 1) return true;
  std::vector<int> ends;
  for (int v = 0; v < m; ++v) {
    if (h.degree(v) > 2) return true;
    if (h.degree(v) <= 1) ends.push_back(sub.mapping[v]);
  }
  const VertexSet end_set = VertexSet::of(ends);
  if (end_set != (a | b)) return true;
  return m - 1 >= 3;
}

}  // namespace

TwoJoinShape symmetric_to_2join_shape(const Graph& g, const SymmetricPartition& w) {
  if (!verify_symmetric_partition(g, w)) throw InputError("symmetric_to_2join_shape: witness does not verify");
  const VertexSet x1 = w.a | w.c;
  const VertexSet x2 = w.b | w.d;
  TwoJoinShape shape;
  shape.complete_pairs = is_complete_between(g, w.a, w.b) && is_complete_between(g, w.c, w.d);
  shape.no_other_edges = is_anticomplete_between(g, w.a, w.d) && is_anticomplete_between(g, w.c, w.b);
  shape.components_meet_both =
      requirement_components(g, x1, w.a, w.c) && requirement_components(g, x2, w.b, w.d);
  shape.paths_long_enough =
      requirement_path_length(g, x1, w.a, w.c) && requirement_path_length(g, x2, w.b, w.d);
  return shape;
}

}  // namespace scgraph
