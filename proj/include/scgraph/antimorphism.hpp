#pragma once

#include <optional>
#include <vector>

#include "scgraph/graph.hpp"
#include "scgraph/permutation.hpp"

namespace scgraph {

/// True iff every pair {u,v} is an edge exactly when {t(u),t(v)} is not.
/// Throws InputError on a size mismatch.
bool is_antimorphism(const Graph& g, const Permutation& t);

/// Every cycle length is a multiple of 4, except at most one cycle of length 1.
bool check_sachs_ringel(const CycleDecomposition& c);

constexpr bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

/// Lexicographically least antimorphism (images in increasing order at each
/// vertex), or nullopt when g is not self-complementary.
std::optional<Permutation> find_antimorphism(const Graph& g);

/// Antimorphism whose cycle lengths are all powers of 2. Throws InputError if
/// g is not self-complementary and InternalInconsistency if no such
/// antimorphism turns up for a self-complementary g.
Permutation find_power_of_two_antimorphism(const Graph& g);

/// First antimorphism in search order whose cycle type (multiset of cycle
/// lengths) equals `cycle_type`.
std::optional<Permutation> find_antimorphism_with_cycle_type(const Graph& g, std::vector<int> cycle_type);

}  // namespace scgraph
