#include "scgraph/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "scgraph/errors.hpp"

namespace scgraph {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int w : images_) {
    if (w < 0 || w >= size() || hit[w]) throw InputError("permutation: images are not a bijection");
    hit[w] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> seen(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int v = cycle[i];
      if (v < 0 || v >= n || seen[v]) throw InputError("permutation: cycles are not disjoint");
      seen[v] = true;
      images[v] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int v = 0; v < size(); ++v) inv[images_[v]] = v;
  return Permutation(std::move(inv));
}

Permutation Permutation::power(int k) const {
  const Permutation base = k < 0 ? inverse() : *this;
  std::vector<int> out(images_.size());
  for (int v = 0; v < size(); ++v) {
    int w = v;
    for (int i = 0; i < std::abs(k); ++i) w = base(w);
    out[v] = w;
  }
  return Permutation(std::move(out));
}

std::vector<int> CycleDecomposition::lengths() const {
  std::vector<int> out;
  for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
  return out;
}

std::vector<int> CycleDecomposition::cycle_type() const {
  auto out = lengths();
  std::sort(out.begin(), out.end());
  return out;
}

Permutation CycleDecomposition::to_permutation() const {
  int n = 0;
  for (const auto& c : cycles) n += static_cast<int>(c.size());
  return Permutation::from_cycles(n, cycles);
}

CycleDecomposition cycle_decomposition(const Permutation& t) {
  CycleDecomposition out;
  std::vector<bool> seen(t.size(), false);
  for (int start = 0; start < t.size(); ++start) {
    if (seen[start]) continue;
    auto& cycle = out.cycles.emplace_back();
    for (int v = start; !seen[v]; v = t(v)) {
      seen[v] = true;
      cycle.push_back(v);
    }
  }
  return out;
}

std::string format_cycles(const Permutation& t) {
  std::string out;
  for (const auto& cycle : cycle_decomposition(t).cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

Permutation parse_cycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto fail = [&](const char* why) {
    throw InputError(std::string("cycle notation: ") + why + " in \"" + std::string(text) + "\"");
  };
  int listed = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    auto& cycle = cycles.emplace_back();
    for (;;) {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc{} || v < 0) fail("expected a vertex");
      pos = static_cast<std::size_t>(ptr - text.data());
      cycle.push_back(v);
      ++listed;
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] != ' ') fail("expected ' ' or ')'");
      ++pos;
    }
  }
  if (cycles.empty()) fail("no cycles");
  for (const auto& cycle : cycles) {
    for (int v : cycle) {
      if (v >= listed) fail("vertex missing; fixed points must be written explicitly");
    }
  }
  return Permutation::from_cycles(listed, cycles);
}

}  // namespace scgraph
