#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "scgraph/graph.hpp"
#include "scgraph/permutation.hpp"

namespace scgraph {

/// One antimorphism cycle of length 4k read as (a_1 b_1 c_1 d_1 ... a_k b_k c_k d_k).
/// Indices are zero-based and taken modulo k, so a(0) is a_1 and a(k) == a(0).
class QuadCycleView {
 public:
  /// `cycle` lists one cycle of `tau` starting at a_1. Throws InputError if the
  /// length is not a positive multiple of 4 or the sequence is not a cycle of tau.
  QuadCycleView(Permutation tau, std::vector<int> cycle);

  /// View of the cycle of tau containing `start`, with a_1 = start.
  static QuadCycleView through(const Permutation& tau, int start);

  int quarter() const { return static_cast<int>(cycle_.size()) / 4; }
  int a(int i) const { return at(4 * wrap(i)); }
  int b(int i) const { return at(4 * wrap(i) + 1); }
  int c(int i) const { return at(4 * wrap(i) + 2); }
  int d(int i) const { return at(4 * wrap(i) + 3); }

  VertexSet track_a() const { return track(0); }
  VertexSet track_b() const { return track(1); }
  VertexSet track_c() const { return track(2); }
  VertexSet track_d() const { return track(3); }
  VertexSet support() const { return VertexSet::of(cycle_); }

  /// Same cycle re-indexed so that a'_i = a_{i+h} (i.e. starting at tau^{4h}(a_1)).
  QuadCycleView rotated(int h) const;
  /// Same cycle started `s` positions later; s = 1 gives tracks (B, C, D, A).
  QuadCycleView shifted(int s) const;

  const std::vector<int>& cycle() const { return cycle_; }
  const Permutation& antimorphism() const { return tau_; }

 private:
  int wrap(int i) const {
    const int k = quarter();
    return ((i % k) + k) % k;
  }
  int at(int pos) const { return cycle_[pos]; }
  VertexSet track(int offset) const;

  Permutation tau_;
  std::vector<int> cycle_;
};

/// True iff `quad` induces a P4 on which the 4-cycle (q0 q1 q2 q3) is an antimorphism.
bool is_quad_cycle_antimorphism(const Graph& g, const std::array<int, 4>& quad);

/// Gibbs' lemma: a quad {a_1, b_1, a_i, b_i} or {a_1, b_1, c_i, d_i} inducing a P4.
struct GibbsWitness {
  enum class Branch { kAB, kCD };
  Branch branch;
  /// Zero-based index of a_i/b_i or c_i/d_i.
  int i;
  /// True when a_1 sees b_1 and the scan ran in the complement.
  bool in_complement;
  /// (a_1 b_1 x_i y_i): this 4-cycle is an antimorphism of the induced P4.
  std::array<int, 4> cycle_quad;
  std::array<int, 4> path;
};

GibbsWitness lemma_gibbs(const Graph& g, const QuadCycleView& cycle);

enum class CentralEdge {
  kATrack,  // a_1 a_{1+j}
  kBTrack,  // b_i b_{i+j}
};

/// The P4 branch of the trichotomy: {a_1, b_i, a_{1+j}, b_{i+j}} after
/// rotating the view by `rotation` quarter steps.
struct P4Witness {
  int rotation;
  int i;
  int j;
  bool in_complement;
  /// (a_1 b_i a_{1+j} b_{i+j}) in the rotated view.
  std::array<int, 4> cycle_quad;
  /// Central edge as realized in g.
  CentralEdge central_edge;
  std::array<int, 4> path;
};

/// (A, B, C, D) is a symmetric partition of G[A u B u C u D].
struct SymmetricABCD {};
/// (B, C, D, A) is a symmetric partition of G[A u B u C u D].
struct SymmetricBCDA {};

using LemmaBaseOutcome = std::variant<P4Witness, SymmetricABCD, SymmetricBCDA>;

LemmaBaseOutcome lemma_base(const Graph& g, const QuadCycleView& cycle);

/// Partition of Z_{2^alpha} into pairs {l, l + shift}; each pair is stored as
/// (l, l + shift mod 2^alpha).
struct PairPartition {
  int alpha = 0;
  int shift = 0;
  std::vector<std::pair<int, int>> pairs;
};

PairPartition zmod_pair_partition(int alpha, int j);

struct P4Partition {
  /// Each quad in path order.
  std::vector<std::array<int, 4>> quads;
  std::optional<int> leftover;
};

/// Partition into floor(n/4) induced P4s (plus the fixed point when n = 1 mod 4)
/// driven by a power-of-two antimorphism. Throws InputError if g is not
/// self-complementary.
P4Partition p4_partition(const Graph& g);
/// Same, using the supplied antimorphism (all cycle lengths powers of two).
P4Partition p4_partition(const Graph& g, const Permutation& tau);

bool verify_p4_partition(const Graph& g, const P4Partition& p);

}  // namespace scgraph
