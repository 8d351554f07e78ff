#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace scgraph {

/// Bijection on {0..n-1}; images()[v] is the image of v.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `images` is a bijection on {0..size-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Builds from disjoint cycles; vertices not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// v -> (*this)^k (v); k may be negative.
  Permutation power(int k) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Disjoint cycles, each starting with its smallest element, ordered by that
/// element. Fixed points appear as length-1 cycles.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  std::vector<int> lengths() const;
  /// Lengths in increasing order.
  std::vector<int> cycle_type() const;
  Permutation to_permutation() const;
};

CycleDecomposition cycle_decomposition(const Permutation& t);

/// "(0 1 3 2)(4)": normalized cycles, fixed points written explicitly.
std::string format_cycles(const Permutation& t);

/// Inverse of format_cycles. Every vertex 0..n-1 must appear exactly once, so
/// n is the number of listed vertices. Cycles may come in any order and any
/// rotation.
Permutation parse_cycles(std::string_view text);

}  // namespace scgraph
