// Canonical labelling by individualization-refinement.
//
// Equitable refinement splits every cell by the vector of neighbour counts
// into the current cells; split pieces are ordered by that vector, so the
// procedure commutes with relabelling. The search individualizes vertices of
// the first non-singleton cell in increasing index order and keeps the leaf
// with the smallest relabelled adjacency matrix. Automorphisms found between
// equal leaves prune children lying in one orbit of the pointwise stabilizer
// of the current prefix.

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

#include "scgraph/errors.hpp"
#include "scgraph/graph.hpp"

namespace scgraph {

namespace {

using Row = std::uint64_t;
constexpr int kMax = Graph::kMaxVertices;

struct Partition {
  int count = 0;
  std::array<Row, kMax> cells{};

  void push(Row cell) { cells[count++] = cell; }
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(g.order()), rows_(g.rows()) {}

  std::vector<int> run() {
    Partition root;
    if (n_ > 0) root.push(VertexSet::range(n_).bits());
    search(root);
    return best_lab_;
  }

 private:
  void refine(Partition& p) const {
    std::array<std::array<std::uint8_t, kMax>, kMax> sig;
    std::array<int, kMax> verts;
    for (;;) {
      Partition next;
      const std::size_t width = p.count;
      auto same = [&](int a, int b) { return std::memcmp(sig[a].data(), sig[b].data(), width) == 0; };
      for (int c = 0; c < p.count; ++c) {
        const Row cell = p.cells[c];
        if (std::popcount(cell) == 1) {
          next.push(cell);
          continue;
        }
        int m = 0;
        for (Row b = cell; b != 0; b &= b - 1) {
          const int v = std::countr_zero(b);
          verts[m++] = v;
          for (int t = 0; t < p.count; ++t) sig[v][t] = std::popcount(rows_[v] & p.cells[t]);
        }
        std::sort(verts.begin(), verts.begin() + m, [&](int a, int b) {
          const int cmp = std::memcmp(sig[a].data(), sig[b].data(), width);
          return cmp < 0 || (cmp == 0 && a < b);
        });
        Row piece = 0;
        for (int i = 0; i < m; ++i) {
          if (i > 0 && !same(verts[i], verts[i - 1])) {
            next.push(piece);
            piece = 0;
          }
          piece |= Row{1} << verts[i];
        }
        next.push(piece);
      }
      const bool stable = next.count == p.count;
      p = next;
      if (stable) return;
    }
  }

  void leaf(const Partition& p) {
    std::array<int, kMax> pos{};
    std::vector<int> lab(n_);
    for (int i = 0; i < n_; ++i) {
      lab[i] = std::countr_zero(p.cells[i]);
      pos[lab[i]] = i;
    }
    std::array<Row, kMax> cert{};
    for (int i = 0; i < n_; ++i) {
      for (Row b = rows_[lab[i]]; b != 0; b &= b - 1) cert[i] |= Row{1} << pos[std::countr_zero(b)];
    }
    const int cmp = best_lab_.empty() ? -1 : std::memcmp(cert.data(), best_cert_.data(), n_ * sizeof(Row));
    if (cmp < 0) {
      best_cert_ = cert;
      best_lab_ = std::move(lab);
    } else if (cmp == 0) {
      // gamma(best_lab[i]) = lab[i]
      std::vector<int> gamma(n_);
      for (int i = 0; i < n_; ++i) gamma[best_lab_[i]] = lab[i];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  static int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  std::vector<int> stabilizer_orbits() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(prefix_.begin(), prefix_.end(), [&](int v) { return gamma[v] == v; })) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(parent, v);
        const int b = find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  void search(Partition p) {
    refine(p);
    if (p.count == n_) {
      leaf(p);
      return;
    }
    int target = 0;
    while (std::popcount(p.cells[target]) == 1) ++target;
    const Row cell = p.cells[target];

    std::vector<int> explored;
    for (Row b = cell; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (!explored.empty() && !automorphisms_.empty()) {
        const auto orbit = stabilizer_orbits();
        if (std::any_of(explored.begin(), explored.end(), [&](int u) { return orbit[u] == orbit[v]; })) {
          continue;
        }
      }
      Partition child;
      for (int c = 0; c < p.count; ++c) {
        if (c == target) {
          child.push(Row{1} << v);
          child.push(cell & ~(Row{1} << v));
        } else {
          child.push(p.cells[c]);
        }
      }
      prefix_.push_back(v);
      search(child);
      prefix_.pop_back();
      explored.push_back(v);
    }
  }

  int n_;
  std::span<const Row> rows_;
  std::vector<int> prefix_;
  std::vector<int> best_lab_;
  std::array<Row, kMax> best_cert_{};
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const auto lab = Canonicalizer(g).run();
  std::vector<int> labeling(lab.size());
  for (std::size_t i = 0; i < lab.size(); ++i) labeling[lab[i]] = static_cast<int>(i);
  auto code = write_graph6(relabel(g, labeling));
  return {std::move(labeling), std::move(code)};
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).labeling); }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g).code == canonical_form(h).code;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.order()), image_(n_, -1) {}

  std::optional<std::vector<int>> run() {
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(int v) {
    if (v == n_) return true;
    VertexSet mapped_nbrs;
    for (int u : (g_.neighbors(v) & VertexSet::range(v)).members()) mapped_nbrs.insert(image_[u]);
    for (int w = 0; w < n_; ++w) {
      if (used_.contains(w) || h_.degree(w) != g_.degree(v)) continue;
      if ((h_.neighbors(w) & used_) != mapped_nbrs) continue;
      image_[v] = w;
      used_.insert(w);
      if (extend(v + 1)) return true;
      used_.erase(w);
      image_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<int> image_;
  VertexSet used_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  return IsomorphismSearch(g, h).run();
}

}  // namespace scgraph
