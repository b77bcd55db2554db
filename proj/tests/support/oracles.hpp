#pragma once

// Test-only reference implementations. They deliberately share no code with
// the library paths they check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tecol/multigraph.hpp"

namespace tecol::testing {

/// Pairwise check: two edges sharing an endpoint with the same color.
inline bool naive_is_proper(const Multigraph& g, const EdgeColoring& c) {
  for (EdgeId a = 0; a < g.edge_count(); ++a)
    for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
      if (c[a] != c[b]) continue;
      const auto ea = g.endpoints(a), eb = g.endpoints(b);
      if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v) return false;
    }
  return true;
}

/// Chromatic index by trying every assignment in {1..k}^E for k = 1, 2, ...
/// Only usable for a handful of edges.
inline std::size_t enumerate_chromatic_index(const Multigraph& g) {
  const std::size_t m = g.edge_count();
  if (m == 0) return 0;
  for (std::size_t k = 1;; ++k) {
    EdgeColoring c(std::vector<Color>(m, 1));
    for (;;) {
      if (naive_is_proper(g, c)) return k;
      std::size_t i = 0;
      while (i < m && c.colors[i] == k) c.colors[i++] = 1;
      if (i == m) break;
      ++c.colors[i];
    }
  }
}

inline std::size_t naive_max_degree(const Multigraph& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

inline std::size_t distinct_colors(const EdgeColoring& c) {
  return std::set<Color>(c.colors.begin(), c.colors.end()).size();
}

/// Random simple graph with at most `max_edges` edges.
inline Multigraph random_simple_graph(std::mt19937& rng, std::size_t max_vertices, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nv(2, max_vertices);
  const std::size_t n = nv(rng);
  std::vector<Endpoints> all;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> ne(0, std::min(max_edges, all.size()));
  all.resize(ne(rng));
  return Multigraph(n, all);
}

/// Random loop-free multigraph.
inline Multigraph random_multigraph(std::mt19937& rng, std::size_t max_vertices, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nv(2, max_vertices);
  const std::size_t n = nv(rng);
  std::uniform_int_distribution<std::size_t> ne(0, max_edges);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::vector<Endpoints> edges;
  const std::size_t m = ne(rng);
  while (edges.size() < m) {
    const VertexId u = pick(rng), v = pick(rng);
    if (u != v) edges.push_back({u, v});
  }
  return Multigraph(n, edges);
}

inline EdgeColoring random_coloring(std::mt19937& rng, std::size_t edges, Color colors) {
  std::uniform_int_distribution<Color> pick(1, colors);
  EdgeColoring c(edges);
  for (auto& x : c.colors) x = pick(rng);
  return c;
}

}  // namespace tecol::testing
