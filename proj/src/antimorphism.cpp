#include "scgraph/antimorphism.hpp"

#include <algorithm>
#include <map>

#include "scgraph/errors.hpp"

namespace scgraph {

bool is_antimorphism(const Graph& g, const Permutation& t) {
  if (g.order() != t.size()) throw InputError("is_antimorphism: size mismatch");
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v) == g.has_edge(t(u), t(v))) return false;
    }
  }
  return true;
}

bool check_sachs_ringel(const CycleDecomposition& c) {
  int singles = 0;
  for (int len : c.lengths()) {
    if (len == 1) {
      ++singles;
    } else if (len % 4 != 0) {
      return false;
    }
  }
  return singles <= 1;
}

namespace {

// Which cycle lengths a search may close.
class CycleRule {
 public:
  static CycleRule any() { return CycleRule{}; }

  static CycleRule powers_of_two() {
    CycleRule r;
    r.pow2_ = true;
    return r;
  }

  static CycleRule exact(const std::vector<int>& type) {
    CycleRule r;
    r.exact_ = true;
    for (int len : type) ++r.remaining_[len];
    return r;
  }

  bool may_close(int len) const {
    if (pow2_) return is_power_of_two(len);
    if (exact_) {
      auto it = remaining_.find(len);
      return it != remaining_.end() && it->second > 0;
    }
    return true;
  }

  /// Upper bound on the length of any cycle still to be closed.
  int longest_open(int n) const {
    if (pow2_) {
      int p = 1;
      while (p * 2 <= n) p *= 2;
      return p;
    }
    if (exact_) {
      for (auto it = remaining_.rbegin(); it != remaining_.rend(); ++it) {
        if (it->second > 0) return it->first;
      }
      return 0;
    }
    return n;
  }

  void close(int len) {
    if (exact_) --remaining_[len];
  }
  void reopen(int len) {
    if (exact_) ++remaining_[len];
  }

 private:
  bool pow2_ = false;
  bool exact_ = false;
  std::map<int, int> remaining_;
};

// Builds an isomorphism G -> complement(G) vertex by vertex (0..n-1), trying
// images in increasing order, pruned by degree, by pairwise consistency with
// the already-mapped vertices, and by the cycle shapes allowed by `rule`.
class AntimorphismSearch {
 public:
  AntimorphismSearch(const Graph& g, CycleRule rule)
      : g_(g), n_(g.order()), rule_(std::move(rule)), image_(n_, -1), preimage_(n_, -1) {}

  std::optional<Permutation> run() {
    if (!degree_sequences_match()) return std::nullopt;
    if (extend(0)) return Permutation(image_);
    return std::nullopt;
  }

 private:
  bool degree_sequences_match() const {
    std::vector<int> deg(n_), co(n_);
    for (int v = 0; v < n_; ++v) {
      deg[v] = g_.degree(v);
      co[v] = n_ - 1 - g_.degree(v);
    }
    std::sort(deg.begin(), deg.end());
    std::sort(co.begin(), co.end());
    return deg == co;
  }

  // Length of the closed cycle through v after assigning image_[v], or the
  // negated length of the open chain through v.
  int chain_through(int v) const {
    int len = 1;
    int x = image_[v];
    while (x != v && image_[x] != -1) {
      x = image_[x];
      ++len;
    }
    if (x == v) return len;
    for (int y = preimage_[v]; y != -1; y = preimage_[y]) ++len;
    return -(len + 1);
  }

  bool extend(int v) {
    if (v == n_) return true;
    const VertexSet assigned = VertexSet::range(v);
    VertexSet required_non;
    for (int u : (g_.neighbors(v) & assigned).members()) required_non.insert(image_[u]);
    const VertexSet required = used_ - required_non;
    const int want_degree = n_ - 1 - g_.degree(v);

    for (int w = 0; w < n_; ++w) {
      if (used_.contains(w) || g_.degree(w) != want_degree) continue;
      if ((g_.neighbors(w) & used_) != required) continue;
      image_[v] = w;
      preimage_[w] = v;
      used_.insert(w);
      const int chain = chain_through(v);
      bool ok;
      if (chain > 0) {
        ok = rule_.may_close(chain);
        if (ok) rule_.close(chain);
      } else {
        ok = -chain <= rule_.longest_open(n_);
      }
      if (ok) {
        if (extend(v + 1)) return true;
        if (chain > 0) rule_.reopen(chain);
      }
      used_.erase(w);
      preimage_[w] = -1;
      image_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  CycleRule rule_;
  std::vector<int> image_;
  std::vector<int> preimage_;
  VertexSet used_;
};

}  // namespace

std::optional<Permutation> find_antimorphism(const Graph& g) {
  return AntimorphismSearch(g, CycleRule::any()).run();
}

Permutation find_power_of_two_antimorphism(const Graph& g) {
  if (!find_antimorphism(g)) throw InputError("graph is not self-complementary");
  auto t = AntimorphismSearch(g, CycleRule::powers_of_two()).run();
  if (!t) {
    throw InternalInconsistency("self-complementary graph " + write_graph6(g) +
                                " has no power-of-two antimorphism");
  }
  return *t;
}

std::optional<Permutation> find_antimorphism_with_cycle_type(const Graph& g, std::vector<int> cycle_type) {
  int total = 0;
  for (int len : cycle_type) total += len;
  if (total != g.order()) throw InputError("cycle type does not sum to the vertex count");
  return AntimorphismSearch(g, CycleRule::exact(cycle_type)).run();
}

}  // namespace scgraph
