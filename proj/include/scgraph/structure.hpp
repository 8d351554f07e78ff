#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scgraph/graph.hpp"
#include "scgraph/partitions.hpp"
#include "scgraph/permutation.hpp"

namespace scgraph {

/// Vertex caps for the exhaustive detectors.
struct DetectorLimits {
  int max_skew_n = 24;
  int max_symmetric_n = 20;

  /// Defaults, overridden by SCGRAPH_MAX_N when it holds a positive integer.
  static DetectorLimits from_environment();
};

/// Five vertices in cycle order, starting at the smallest and continuing to
/// its smaller neighbour.
using C5Witness = std::array<int, 5>;

/// The five vertices, taken as a set, induce a chordless 5-cycle.
bool is_induced_c5(const Graph& g, std::span<const int> five);

/// First 5-subset (lexicographic scan) inducing a chordless 5-cycle.
std::optional<C5Witness> find_induced_c5(const Graph& g);

/// Searches bipartitions (S, V-S) with G[S] disconnected and the complement
/// of G[V-S] disconnected; S is scanned in increasing bitmask order.
std::optional<SkewPartition> find_skew_partition(const Graph& g, const DetectorLimits& limits = {});

/// Backtracking 4-colouring with propagation of the adjacency constraints.
std::optional<SymmetricPartition> find_symmetric_partition(const Graph& g, const DetectorLimits& limits = {});

enum class OutcomeKind { kC5, kSkew, kSymmetric };
const char* to_string(OutcomeKind kind);

using Witness = std::variant<C5Witness, SkewPartition, SymmetricPartition>;
OutcomeKind kind_of(const Witness& w);
/// C5 witnesses must also list the cycle in order.
bool verify_witness(const Graph& g, const Witness& w);

struct TheoremMResult {
  /// 1..16 by the neighbourhood of a in A, B, C, D; 0 for the five-vertex
  /// base case (the other cycle is a fixed point).
  int case_number = 0;
  OutcomeKind kind = OutcomeKind::kC5;
  Witness witness;
  /// The table's prescribed witness did not verify and a search produced it.
  bool used_fallback = false;
  std::string note;
};

/// Decomposition along an antimorphism made of one 4-cycle and one other
/// cycle. Throws InputError when t is not such an antimorphism of g.
TheoremMResult theorem_m_decompose(const Graph& g, const Permutation& t);

/// Antimorphism with exactly one 4-cycle and one other cycle, if any.
std::optional<Permutation> find_theorem_m_antimorphism(const Graph& g);

struct TheoremMEntry {
  int case_number;
  OutcomeKind kind;
  /// The predicted kind is among the independent detectors' findings.
  bool consistent;
};

struct StructureReport {
  std::string graph;  // canonical graph6
  int n = 0;
  std::optional<C5Witness> c5;
  std::optional<SkewPartition> skew;
  std::optional<SymmetricPartition> symmetric;
  bool conjecture_holds = false;
  /// n = 0 (mod 4); other orders are still reported.
  bool in_conjecture_scope = false;
  std::optional<TheoremMEntry> theorem_m;
};

/// Runs all three detectors (and the 16-case procedure when an applicable
/// antimorphism exists). Throws InputError if g is not self-complementary.
StructureReport conjecture_check(const Graph& g, const DetectorLimits& limits = {});

struct AkiyamaHararyResult {
  std::vector<int> end_vertices;
  std::vector<int> cut_vertices;
  /// ({b}, {d}, {a, c}, rest); when rest is empty (P4) the degenerate
  /// ({b}, {d}, {a}, {c}) is reported instead.
  std::optional<SkewPartition> skew;
  bool degenerate = false;

  bool consistent() const { return end_vertices.size() == 2 && cut_vertices.size() == 2 && skew.has_value(); }
};

/// Throws InputError when g has no vertex of degree one.
AkiyamaHararyResult akiyama_harary_check(const Graph& g);

bool is_cut_vertex(const Graph& g, int v);

/// A symmetric partition (a, b, c, d) read as a 2-join with
/// (A1, A2, B1, B2) = (a, b, c, d), X1 = a u c, X2 = b u d.
struct TwoJoinShape {
  bool complete_pairs = false;     // A1-A2 and B1-B2 complete
  bool no_other_edges = false;     // nothing else crosses X1-X2
  bool components_meet_both = false;
  bool paths_long_enough = false;

  bool conditions_hold() const { return complete_pairs && no_other_edges; }
  bool technical_requirements_hold() const { return components_meet_both && paths_long_enough; }
};

/// Throws InputError when w does not verify on g.
TwoJoinShape symmetric_to_2join_shape(const Graph& g, const SymmetricPartition& w);

}  // namespace scgraph
