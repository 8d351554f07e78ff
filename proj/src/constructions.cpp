#include "scgraph/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

#include "scgraph/antimorphism.hpp"
#include "scgraph/errors.hpp"

namespace scgraph {

namespace {

// Copies the edges of `inner` onto vertices offset..offset+|inner|-1 of `out`.
void copy_block(Graph& out, const Graph& inner, int offset) {
  for (auto [u, v] : inner.edges()) out.add_edge(offset + u, offset + v);
}

void join_blocks(Graph& out, int first, int first_size, int second, int second_size) {
  for (int u = 0; u < first_size; ++u) {
    for (int v = 0; v < second_size; ++v) out.add_edge(first + u, second + v);
  }
}

}  // namespace

P4Construction p4_construction(const Graph& g) {
  const int m = g.order();
  if (4 * m > Graph::kMaxVertices) throw InputError("p4_construction: result exceeds 64 vertices");
  const Graph co = complement(g);
  Graph out(4 * m);
  // blocks: 0 = G1, 1 = G3, 2 = G4, 3 = G2
  copy_block(out, g, 0);
  copy_block(out, co, m);
  copy_block(out, co, 2 * m);
  copy_block(out, g, 3 * m);
  join_blocks(out, 0, m, m, m);
  join_blocks(out, m, m, 2 * m, m);
  join_blocks(out, 2 * m, m, 3 * m, m);

  // Block permutation is the P4 antimorphism (0 1 3 2) on block indices.
  constexpr int next_block[4] = {1, 3, 0, 2};
  std::vector<int> images(4 * m);
  for (int b = 0; b < 4; ++b) {
    for (int v = 0; v < m; ++v) images[b * m + v] = next_block[b] * m + v;
  }
  P4Construction result{std::move(out), Permutation(std::move(images))};
  if (!is_antimorphism(result.graph, result.antimorphism)) {
    throw InternalInconsistency("p4_construction: block antimorphism failed to verify");
  }
  return result;
}

Graph j_construction(const Graph& g, const Graph& h) {
  const int m = g.order();
  const int p = h.order();
  if (2 * (m + p) > Graph::kMaxVertices) throw InputError("j_construction: result exceeds 64 vertices");
  const Graph co = complement(h);
  Graph out(2 * (m + p));
  const int g1 = 0, h1 = m, h2 = m + p, g2 = m + 2 * p;
  copy_block(out, g, g1);
  copy_block(out, co, h1);
  copy_block(out, co, h2);
  copy_block(out, g, g2);
  join_blocks(out, g1, m, h1, p);
  join_blocks(out, h1, p, h2, p);
  join_blocks(out, h2, p, g2, m);
  return out;
}

std::vector<std::vector<int>> sachs_ringel_cycle_types(int n) {
  std::vector<std::vector<int>> out;
  if (n % 4 == 2 || n % 4 == 3 || n < 0) return out;
  const bool fixed_point = n % 4 == 1;
  const int quarters = n / 4;
  // Partitions of `quarters` into parts, largest first; each part scaled by 4.
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      auto type = current;
      for (int& part : type) part *= 4;
      if (fixed_point) type.push_back(1);
      out.push_back(std::move(type));
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(left - part, part);
      current.pop_back();
    }
  };
  rec(quarters, quarters);
  return out;
}

Permutation representative_permutation(const std::vector<int>& cycle_type) {
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int len : cycle_type) {
    auto& cycle = cycles.emplace_back();
    for (int i = 0; i < len; ++i) cycle.push_back(next++);
  }
  return Permutation::from_cycles(next, cycles);
}

std::vector<std::vector<std::pair<int, int>>> pair_orbits(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (seen[u][v]) continue;
      auto& orbit = out.emplace_back();
      int a = u, b = v;
      while (!seen[a][b]) {
        seen[a][b] = seen[b][a] = true;
        orbit.emplace_back(std::min(a, b), std::max(a, b));
        a = sigma(a);
        b = sigma(b);
      }
    }
  }
  return out;
}

Graph OrbitChoice::decode() const {
  Graph g(sigma.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& orbit = orbits[i];
    if (orbit.size() % 2 != 0) throw InputError("OrbitChoice: odd pair orbit cannot alternate");
    for (std::size_t t = 0; t < orbit.size(); ++t) {
      if (bits[i] != (t % 2 == 1)) g.add_edge(orbit[t].first, orbit[t].second);
    }
  }
  return g;
}

namespace {

using ClassMap = std::map<std::string, Graph>;

// Decodes bit patterns [begin, end) of one alternation family into `found`.
void sweep_family(const std::vector<std::vector<std::pair<int, int>>>& orbits, int n, std::uint64_t begin,
                  std::uint64_t end, ClassMap& found) {
  const std::size_t m = orbits.size();
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < m; ++i) {
      const bool first_is_edge = (mask >> i) & 1U;
      const auto& orbit = orbits[i];
      for (std::size_t t = first_is_edge ? 0 : 1; t < orbit.size(); t += 2) {
        g.add_edge(orbit[t].first, orbit[t].second);
      }
    }
    auto form = canonical_form(g);
    if (found.find(form.code) == found.end()) {
      found.emplace(std::move(form.code), relabel(g, form.labeling));
    }
  }
}

}  // namespace

std::vector<Graph> enumerate_sc_graphs(int n, const EnumerationOptions& options) {
  if (n < 0) throw InputError("enumerate_sc_graphs: negative vertex count");
  if (n > options.max_n) {
    throw GuardExceeded("enumerate_sc_graphs: n = " + std::to_string(n) + " exceeds the guard " +
                        std::to_string(options.max_n));
  }
  const int jobs = std::max(1, options.jobs);
  ClassMap classes;
  if (n == 0 || n == 1) {
    // The empty graph and K1 are trivially self-complementary.
    Graph g(n);
    classes.emplace(write_graph6(g), g);
  }
  for (const auto& type : sachs_ringel_cycle_types(n)) {
    if (n <= 1) break;
    const auto orbits = pair_orbits(representative_permutation(type));
    for (const auto& orbit : orbits) {
      if (orbit.size() % 2 != 0) throw InternalInconsistency("odd pair orbit for a Sachs-Ringel type");
    }
    const std::uint64_t total = std::uint64_t{1} << orbits.size();
    std::vector<ClassMap> partial(jobs);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const std::uint64_t begin = std::min(total, chunk * j);
      const std::uint64_t end = std::min(total, begin + chunk);
      if (jobs == 1) {
        sweep_family(orbits, n, begin, end, partial[j]);
      } else {
        workers.emplace_back([&, j, begin, end] { sweep_family(orbits, n, begin, end, partial[j]); });
      }
    }
    for (auto& w : workers) w.join();
    for (auto& part : partial) classes.merge(part);
  }

  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) {
    if (!find_antimorphism(g)) {
      throw InternalInconsistency("enumerated graph " + code + " is not self-complementary");
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace scgraph
