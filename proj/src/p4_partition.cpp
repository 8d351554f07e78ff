#include "scgraph/p4_partition.hpp"

#include <algorithm>

#include "scgraph/antimorphism.hpp"
#include "scgraph/errors.hpp"
#include "scgraph/partitions.hpp"

namespace scgraph {

QuadCycleView::QuadCycleView(Permutation tau, std::vector<int> cycle)
    : tau_(std::move(tau)), cycle_(std::move(cycle)) {
  if (cycle_.empty() || cycle_.size() % 4 != 0) {
    throw InputError("QuadCycleView: cycle length must be a positive multiple of 4");
  }
  for (std::size_t p = 0; p < cycle_.size(); ++p) {
    const int v = cycle_[p];
    if (v < 0 || v >= tau_.size() || tau_(v) != cycle_[(p + 1) % cycle_.size()]) {
      throw InputError("QuadCycleView: sequence is not a cycle of the antimorphism");
    }
  }
}

QuadCycleView QuadCycleView::through(const Permutation& tau, int start) {
  std::vector<int> cycle{start};
  for (int v = tau(start); v != start; v = tau(v)) cycle.push_back(v);
  return QuadCycleView(tau, std::move(cycle));
}

QuadCycleView QuadCycleView::rotated(int h) const { return shifted(4 * wrap(h)); }

QuadCycleView QuadCycleView::shifted(int s) const {
  const int len = static_cast<int>(cycle_.size());
  std::vector<int> out(cycle_.size());
  for (int p = 0; p < len; ++p) out[p] = cycle_[(((p + s) % len) + len) % len];
  return QuadCycleView(tau_, std::move(out));
}

VertexSet QuadCycleView::track(int offset) const {
  VertexSet s;
  for (std::size_t p = offset; p < cycle_.size(); p += 4) s.insert(cycle_[p]);
  return s;
}

bool is_quad_cycle_antimorphism(const Graph& g, const std::array<int, 4>& quad) {
  if (!p4_path_order(g, quad)) return false;
  const auto sub = induced_subgraph(g, std::span<const int>(quad));
  return is_antimorphism(sub.graph, Permutation({1, 2, 3, 0}));
}

namespace {

void require_antimorphism(const Graph& g, const QuadCycleView& cycle) {
  if (!is_antimorphism(g, cycle.antimorphism())) {
    throw InputError("cycle does not come from an antimorphism of the graph");
  }
}

std::array<int, 4> checked_path(const Graph& g, const std::array<int, 4>& quad, const char* who) {
  if (!is_quad_cycle_antimorphism(g, quad)) {
    throw InternalInconsistency(std::string(who) + ": quad failed P4/antimorphism verification");
  }
  return *p4_path_order(g, quad);
}

}  // namespace

GibbsWitness lemma_gibbs(const Graph& g, const QuadCycleView& cycle) {
  require_antimorphism(g, cycle);
  const int a1 = cycle.a(0);
  const int b1 = cycle.b(0);
  // WLOG a_1 misses b_1, otherwise replay in the complement.
  const bool in_complement = g.has_edge(a1, b1);
  auto sees = [&](int x, int y) { return g.has_edge(x, y) != in_complement; };

  // a_1 sees d_k, so the scan terminates.
  for (int i = 0; i < cycle.quarter(); ++i) {
    if (sees(a1, cycle.b(i))) {
      std::array<int, 4> quad{a1, b1, cycle.a(i), cycle.b(i)};
      return {GibbsWitness::Branch::kAB, i, in_complement, quad, checked_path(g, quad, "lemma_gibbs")};
    }
    if (sees(a1, cycle.d(i))) {
      std::array<int, 4> quad{a1, b1, cycle.c(i), cycle.d(i)};
      return {GibbsWitness::Branch::kCD, i, in_complement, quad, checked_path(g, quad, "lemma_gibbs")};
    }
  }
  throw InternalInconsistency("lemma_gibbs: a_1 sees no b_i or d_i");
}

LemmaBaseOutcome lemma_base(const Graph& g, const QuadCycleView& cycle) {
  require_antimorphism(g, cycle);
  const int k = cycle.quarter();
  const VertexSet tb = cycle.track_b();

  if (is_complete_between(g, cycle.track_a(), tb)) return SymmetricABCD{};
  if (is_anticomplete_between(g, cycle.track_a(), tb)) return SymmetricBCDA{};

  int h = 0;
  auto mixed = [&](int v) {
    const int seen = (g.neighbors(v) & tb).size();
    return seen > 0 && seen < k;
  };
  while (!mixed(cycle.a(h))) ++h;
  const QuadCycleView r = cycle.rotated(h);

  const int a1 = r.a(0);
  const int seen = (g.neighbors(a1) & tb).size();
  const bool in_complement = seen < k - seen;
  auto sees = [&](int x, int y) { return g.has_edge(x, y) != in_complement; };

  int i = 0;
  while (sees(a1, r.b(i))) ++i;
  for (int j = 1; j < k; ++j) {
    if (!sees(a1, r.b(i - j)) || !sees(a1, r.b(i + j))) continue;
    const std::array<int, 4> quad{a1, r.b(i), r.a(j), r.b(i + j)};
    const bool a_central = g.has_edge(a1, r.a(j));
    if (a_central == g.has_edge(r.b(i), r.b(i + j))) {
      throw InternalInconsistency("lemma_base: both or neither candidate central edge present");
    }
    return P4Witness{h,  i, j, in_complement, quad, a_central ? CentralEdge::kATrack : CentralEdge::kBTrack,
                     checked_path(g, quad, "lemma_base")};
  }
  throw InternalInconsistency("lemma_base: no shift j with a_1 seeing b_{i-j} and b_{i+j}");
}

PairPartition zmod_pair_partition(int alpha, int j) {
  if (alpha < 1 || alpha > 30) throw InputError("zmod_pair_partition: alpha must be in 1..30");
  const int size = 1 << alpha;
  j = ((j % size) + size) % size;
  if (j == 0) throw InputError("zmod_pair_partition: j must be nonzero modulo 2^alpha");

  PairPartition out{alpha, j, {}};
  if (alpha == 1) {
    out.pairs = {{0, 1}};
  } else if (j % 2 == 0) {
    const auto half = zmod_pair_partition(alpha - 1, j / 2);
    for (auto [l, partner] : half.pairs) {
      (void)partner;
      out.pairs.emplace_back(2 * l, (2 * l + j) % size);
      out.pairs.emplace_back(2 * l + 1, (2 * l + 1 + j) % size);
    }
  } else {
    // Odd j generates Z_{2^alpha}: walk 1, 1+j, 1+2j, ... and keep every second edge.
    int x = 1;
    for (int step = 0; step < size / 2; ++step) {
      out.pairs.emplace_back(x, (x + j) % size);
      x = (x + 2 * j) % size;
    }
  }
  return out;
}

namespace {

void add_quad(const Graph& g, std::array<int, 4> quad, P4Partition& out) {
  const auto path = p4_path_order(g, quad);
  if (!path) throw InternalInconsistency("p4_partition: transported quad does not induce a P4");
  out.quads.push_back(*path);
}

int log2_exact(int k) {
  int alpha = 0;
  while ((1 << alpha) < k) ++alpha;
  return alpha;
}

}  // namespace

P4Partition p4_partition(const Graph& g) { return p4_partition(g, find_power_of_two_antimorphism(g)); }

P4Partition p4_partition(const Graph& g, const Permutation& tau) {
  if (!is_antimorphism(g, tau)) throw InputError("p4_partition: permutation is not an antimorphism");
  P4Partition out;
  for (const auto& cyc : cycle_decomposition(tau).cycles) {
    const int len = static_cast<int>(cyc.size());
    if (len == 1) {
      out.leftover = cyc.front();
      continue;
    }
    if (!is_power_of_two(len)) throw InputError("p4_partition: antimorphism cycle length is not a power of two");
    const QuadCycleView view(tau, cyc);
    const int k = view.quarter();
    const auto outcome = lemma_base(g, view);
    if (std::holds_alternative<P4Witness>(outcome)) {
      const auto& w = std::get<P4Witness>(outcome);
      const QuadCycleView r = view.rotated(w.rotation);
      for (auto [l, lj] : zmod_pair_partition(log2_exact(k), w.j).pairs) {
        // P^l = tau^{4l}(witness quad); its tau^2-image covers the matching C/D vertices.
        add_quad(g, {r.a(l), r.b(l + w.i), r.a(lj), r.b(lj + w.i)}, out);
        add_quad(g, {r.c(l), r.d(l + w.i), r.c(lj), r.d(lj + w.i)}, out);
      }
    } else {
      for (int i = 0; i < k; ++i) add_quad(g, {view.a(i), view.b(i), view.c(i), view.d(i)}, out);
    }
  }
  if (!verify_p4_partition(g, out)) throw InternalInconsistency("p4_partition: result failed verification");
  return out;
}

bool verify_p4_partition(const Graph& g, const P4Partition& p) {
  VertexSet covered;
  for (const auto& quad : p.quads) {
    for (int v : quad) {
      if (v < 0 || v >= g.order() || covered.contains(v)) return false;
      covered.insert(v);
    }
    if (!is_induced_p4(g, quad)) return false;
  }
  if (p.leftover) {
    const int v = *p.leftover;
    if (v < 0 || v >= g.order() || covered.contains(v)) return false;
    covered.insert(v);
  }
  return covered == g.vertices() && static_cast<int>(p.quads.size()) == g.order() / 4;
}

}  // namespace scgraph
