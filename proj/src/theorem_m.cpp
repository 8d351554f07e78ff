// Decomposition of a self-complementary graph along an antimorphism
// (a b c d)(a_1 b_1 c_1 d_1 ... a_k b_k c_k d_k): dispatch on which of the
// classes A, B, C, D the vertex a sees.

#include <algorithm>
#include <array>

#include "scgraph/antimorphism.hpp"
#include "scgraph/errors.hpp"
#include "scgraph/p4_partition.hpp"
#include "scgraph/structure.hpp"

namespace scgraph {

namespace {

enum ClassBit : unsigned { kA = 1, kB = 2, kC = 4, kD = 8 };

// Case number indexed by the N_a mask.
constexpr std::array<int, 16> kCaseByMask = {
    7,   // {}
    9,   // A
    11,  // B
    1,   // A B
    13,  // C
    3,   // A C
    6,   // B C
    16,  // A B C
    15,  // D
    5,   // A D
    4,   // B D
    14,  // A B D
    2,   // C D
    12,  // A C D
    10,  // B C D
    8,   // A B C D
};

struct Corner {
  int a, b, c, d;
};

struct Classes {
  VertexSet a, b, c, d;

  static Classes of(const QuadCycleView& v) { return {v.track_a(), v.track_b(), v.track_c(), v.track_d()}; }
  VertexSet all() const { return a | b | c | d; }
};

// Rotates (a b c d) so that G[{a,b,c,d}] has exactly the edges ab, ac, cd.
// Two rotations always qualify; the first is kept.
std::optional<Corner> orient(const Graph& g, const Permutation& tau, int start) {
  std::array<int, 4> ring{start, tau(start), tau(tau(start)), tau(tau(tau(start)))};
  for (int r = 0; r < 4; ++r) {
    const int a = ring[r], b = ring[(r + 1) % 4], c = ring[(r + 2) % 4], d = ring[(r + 3) % 4];
    if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(c, d) && !g.has_edge(a, d) && !g.has_edge(b, c) &&
        !g.has_edge(b, d)) {
      return Corner{a, b, c, d};
    }
  }
  return std::nullopt;
}

unsigned neighbourhood_mask(const Graph& g, int v, const Classes& cls) {
  const std::array<std::pair<VertexSet, unsigned>, 4> parts{
      {{cls.a, kA}, {cls.b, kB}, {cls.c, kC}, {cls.d, kD}}};
  unsigned mask = 0;
  for (const auto& [set, bit] : parts) {
    const int seen = (g.neighbors(v) & set).size();
    if (seen == set.size()) {
      mask |= bit;
    } else if (seen != 0) {
      throw InternalInconsistency("theorem_m_decompose: vertex sees part of an antimorphism class");
    }
  }
  return mask;
}

std::optional<SkewPartition> table_skew(int case_number, const Corner& q, const Classes& cls) {
  const VertexSet bd{q.b, q.d}, ac{q.a, q.c};
  switch (case_number) {
    case 3: case 12: case 16: return SkewPartition{bd, cls.b | cls.d, ac, cls.a | cls.c};
    case 4: case 11: case 15: return SkewPartition{ac, cls.a | cls.c, bd, cls.b | cls.d};
    case 9: case 13: return SkewPartition{ac, cls.b | cls.d, bd, cls.a | cls.c};
    case 10: case 14: return SkewPartition{bd, cls.a | cls.c, ac, cls.b | cls.d};
    case 8: return SkewPartition{VertexSet{q.b}, VertexSet{q.d}, ac, cls.all()};
    default: return std::nullopt;
  }
}

std::optional<SymmetricPartition> table_symmetric(int case_number, const Corner& q, const Classes& cls) {
  auto plus = [](VertexSet s, int v) {
    s.insert(v);
    return s;
  };
  switch (case_number) {
    case 1: case 6:
      return SymmetricPartition{plus(cls.a, q.a), plus(cls.b, q.b), plus(cls.c, q.c), plus(cls.d, q.d)};
    case 2: case 5:
      return SymmetricPartition{plus(cls.a, q.c), plus(cls.b, q.d), plus(cls.c, q.a), plus(cls.d, q.b)};
    default: return std::nullopt;
  }
}

int c5_apex(int case_number, const Corner& q) {
  switch (case_number) {
    case 1: case 2: return q.b;
    case 5: return q.c;
    default: return q.a;
  }
}

TheoremMResult c5_result(const Graph& g, int case_number, VertexSet five) {
  TheoremMResult r;
  r.case_number = case_number;
  r.kind = OutcomeKind::kC5;
  // Re-run the scan on the five vertices to get cycle order.
  const auto sub = induced_subgraph(g, five);
  const auto local = find_induced_c5(sub.graph);
  C5Witness w{};
  for (int i = 0; i < 5; ++i) w[i] = sub.mapping[(*local)[i]];
  r.witness = w;
  return r;
}

}  // namespace

TheoremMResult theorem_m_decompose(const Graph& g, const Permutation& t) {
  if (!is_antimorphism(g, t)) throw InputError("theorem_m_decompose: not an antimorphism of the graph");
  const auto cycles = cycle_decomposition(t).cycles;
  if (cycles.size() != 2) throw InputError("theorem_m_decompose: antimorphism must have exactly two cycles");
  const std::size_t four = cycles[0].size() == 4 ? 0 : 1;
  if (cycles[four].size() != 4) throw InputError("theorem_m_decompose: antimorphism has no 4-cycle");
  const auto& other = cycles[1 - four];

  if (other.size() == 1) {
    // Five vertices: the C5 or the bull.
    TheoremMResult r;
    if (const auto c5 = find_induced_c5(g)) {
      r.kind = OutcomeKind::kC5;
      r.witness = *c5;
    } else if (const auto skew = find_skew_partition(g)) {
      r.kind = OutcomeKind::kSkew;
      r.witness = *skew;
    } else {
      throw InternalInconsistency("theorem_m_decompose: five-vertex graph is neither C5 nor the bull");
    }
    return r;
  }

  // Orient the 4-cycle; when neither rotation of tau fits, tau^{-1} does.
  Permutation tau = t;
  auto corner = orient(g, tau, cycles[four][0]);
  if (!corner) {
    tau = t.inverse();
    corner = orient(g, tau, cycles[four][0]);
  }
  if (!corner) throw InternalInconsistency("theorem_m_decompose: 4-cycle does not induce a P4");
  const Corner q = *corner;

  const QuadCycleView cycle = QuadCycleView::through(tau, other.front());
  const Classes cls = Classes::of(cycle);
  const int case_number = kCaseByMask[neighbourhood_mask(g, q.a, cls)];

  TheoremMResult result;
  result.case_number = case_number;

  if (case_number == 7) {
    VertexSet five{cycle.a(0), q.a, q.b, q.c, q.d};
    if (is_induced_c5(g, five.members())) return c5_result(g, 7, five);
    result.note = "case 7 quintuple {a_1, a, b, c, d} did not verify";
  } else if (auto skew = table_skew(case_number, q, cls)) {
    if (verify_skew_partition(g, *skew)) {
      result.kind = OutcomeKind::kSkew;
      result.witness = *skew;
      return result;
    }
    result.note = "table skew partition did not verify";
  } else {
    const auto outcome = lemma_base(g, cycle);
    if (const auto* w = std::get_if<P4Witness>(&outcome)) {
      const int apex_first = c5_apex(case_number, q);
      std::vector<int> apexes{apex_first};
      for (int v : {q.a, q.b, q.c, q.d}) {
        if (v != apex_first) apexes.push_back(v);
      }
      const int len = static_cast<int>(cycle.cycle().size());
      for (int apex : apexes) {
        std::array<int, 4> quad = w->cycle_quad;
        for (int s = 0; s < len; ++s) {
          VertexSet five = VertexSet::of(quad);
          five.insert(apex);
          if (is_induced_c5(g, five.members())) {
            auto r = c5_result(g, case_number, five);
            if (apex != apex_first || s != 0) r.note = "C5 found among shifted candidates";
            return r;
          }
          for (int& v : quad) v = tau(v);
        }
      }
      result.note = "no candidate quintuple induced a C5";
      if (const auto c5 = find_induced_c5(g)) {
        result.kind = OutcomeKind::kC5;
        result.witness = *c5;
        result.used_fallback = true;
        return result;
      }
      throw InternalInconsistency("theorem_m_decompose: P4 outcome but the graph has no induced C5");
    }
    // Symmetric outcome: the table partition holds for one of the four
    // starting points of the long cycle (A, B, C, D) -> (B, C, D, A) -> ...
    for (int s = 0; s < 4; ++s) {
      const Classes rotated = Classes::of(cycle.shifted(s));
      const int rotated_case = kCaseByMask[neighbourhood_mask(g, q.a, rotated)];
      if (auto sym = table_symmetric(rotated_case, q, rotated); sym && verify_symmetric_partition(g, *sym)) {
        result.kind = OutcomeKind::kSymmetric;
        result.witness = *sym;
        return result;
      }
    }
    result.note = "no rotation of the table symmetric partition verified";
    if (const auto sym = find_symmetric_partition(g)) {
      result.kind = OutcomeKind::kSymmetric;
      result.witness = *sym;
      result.used_fallback = true;
      return result;
    }
    throw InternalInconsistency("theorem_m_decompose: symmetric outcome but no symmetric partition exists");
  }

  // Table witness failed (cases 7 and skew cases): search for the same kind.
  if (case_number == 7) {
    if (const auto c5 = find_induced_c5(g)) {
      result.kind = OutcomeKind::kC5;
      result.witness = *c5;
      result.used_fallback = true;
      return result;
    }
  } else if (const auto skew = find_skew_partition(g)) {
    result.kind = OutcomeKind::kSkew;
    result.witness = *skew;
    result.used_fallback = true;
    return result;
  }
  throw InternalInconsistency("theorem_m_decompose: case " + std::to_string(case_number) + " has no witness");
}

}  // namespace scgraph
