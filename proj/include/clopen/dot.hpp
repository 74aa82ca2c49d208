#ifndef CLOPEN_DOT_HPP
#define CLOPEN_DOT_HPP

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "clopen/topo.hpp"

namespace clopen {

struct DotGraph {
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // generic -> special
  std::vector<std::pair<std::size_t, std::size_t>> equivalences;
  Partition clusters;
};

/// Hasse diagram of the specialization preorder on class representatives
/// (least index of each topologically indistinguishable class).
inline DotGraph specialization_graph(const FiniteSpace& x) {
  DotGraph g;
  const std::size_t n = x.size();
  auto below = [&](std::size_t a, std::size_t b) { return x.specializes(a, b) && !x.specializes(b, a); };
  std::vector<std::size_t> rep(n);
  for (std::size_t a = 0; a < n; ++a) {
    rep[a] = a;
    for (std::size_t b = 0; b < a; ++b)
      if (x.specializes(a, b) && x.specializes(b, a)) {
        rep[a] = rep[b];
        break;
      }
    if (rep[a] != a) g.equivalences.emplace_back(rep[a], a);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (rep[a] != a) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (rep[b] != b || !below(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (rep[c] == c && below(a, c) && below(c, b)) covered = false;
      if (covered) g.edges.emplace_back(b, a);
    }
  }
  g.clusters = connected_components(x);
  return g;
}

/// DOT digraph: an edge y -> x when x lies in the closure of y, reduced
/// transitively; one cluster per connected component.
inline std::string emit_dot(const FiniteSpace& x, const std::vector<std::string>& labels = {}) {
  const auto g = specialization_graph(x);
  auto name = [&](std::size_t p) { return p < labels.size() ? labels[p] : std::to_string(p); };
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph space {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < g.clusters.size(); ++k) {
    out << "  subgraph cluster_" << k << " {\n    label=" << quote("component " + std::to_string(k)) << ";\n";
    for (auto p : members(g.clusters.blocks[k])) out << "    n" << p << " [label=" << quote(name(p)) << "];\n";
    out << "  }\n";
  }
  for (const auto& [a, b] : g.edges) out << "  n" << a << " -> n" << b << ";\n";
  for (const auto& [a, b] : g.equivalences) out << "  n" << a << " -> n" << b << " [dir=none, style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace clopen

#endif  // CLOPEN_DOT_HPP
