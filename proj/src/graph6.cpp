#include <string>

#include "scgraph/errors.hpp"
#include "scgraph/graph.hpp"

namespace scgraph {

namespace {

constexpr int kBias = 63;
constexpr int kMaxGraph6Order = 62;

}  // namespace

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw InputError("graph6: n > 62 is not supported");
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty input");
  for (char ch : text) {
    const int c = static_cast<unsigned char>(ch);
    if (c < 63 || c > 126) throw InputError("graph6: character out of range 63..126");
  }
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n > kMaxGraph6Order) throw InputError("graph6: malformed length byte (n > 62)");
  const int bits = n * (n - 1) / 2;
  const std::size_t groups = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != groups + 1) {
    throw InputError("graph6: expected " + std::to_string(groups + 1) + " bytes, got " +
                     std::to_string(text.size()));
  }
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - kBias;
    const int pad = 6 - bits % 6;
    if ((last & ((1 << pad) - 1)) != 0) throw InputError("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace scgraph
