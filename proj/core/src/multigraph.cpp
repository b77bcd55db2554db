#include "tecol/multigraph.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "tecol/error.hpp"

namespace tecol {

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Endpoints> edges, std::vector<std::uint32_t> labels)
    : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != edges_.size())
    throw Error(Errc::InvalidGraph, "label count does not match edge count");
  offsets_.assign(vertex_count_ + 1, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u >= vertex_count_ || v >= vertex_count_)
      throw Error(Errc::InvalidGraph, "edge " + std::to_string(e) + " has an endpoint out of range",
                  {static_cast<std::int64_t>(e)});
    if (u == v)
      throw Error(Errc::InvalidGraph, "edge " + std::to_string(e) + " is a loop", {static_cast<std::int64_t>(e)});
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] += offsets_[v];
  incidence_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    incidence_[fill[edges_[e].u]++] = static_cast<EdgeId>(e);
    incidence_[fill[edges_[e].v]++] = static_cast<EdgeId>(e);
  }
}

bool Multigraph::is_simple() const {
  std::vector<VertexId> seen(vertex_count_, static_cast<VertexId>(-1));
  for (VertexId v = 0; v < vertex_count_; ++v) {
    for (EdgeId e : incident(v)) {
      const VertexId w = edges_[e].other(v);
      if (seen[w] == v) return false;
      seen[w] = v;
    }
  }
  return true;
}

bool EdgeColoring::is_total() const {
  return std::none_of(colors.begin(), colors.end(), [](Color c) { return c == kUncolored; });
}

namespace {

ProperCheck check_proper(const Multigraph& g, const EdgeColoring& c, bool allow_partial) {
  if (c.size() != g.edge_count())
    throw Error(Errc::PartialColoring, "coloring has " + std::to_string(c.size()) + " entries for " +
                                           std::to_string(g.edge_count()) + " edges");
  Color top = 0;
  for (EdgeId e = 0; e < c.size(); ++e) {
    if (c[e] == kUncolored && !allow_partial)
      throw Error(Errc::PartialColoring, "edge " + std::to_string(e) + " is uncolored",
                  {static_cast<std::int64_t>(e)});
    top = std::max(top, c[e]);
  }
  // stamp[color] = vertex + 1 that last saw it; owner[color] = that edge
  std::vector<VertexId> stamp(static_cast<std::size_t>(top) + 1, 0);
  std::vector<EdgeId> owner(static_cast<std::size_t>(top) + 1, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId e : g.incident(v)) {
      const Color col = c[e];
      if (col == kUncolored) continue;
      if (stamp[col] == v + 1) return {false, Violation{v, owner[col], e}};
      stamp[col] = v + 1;
      owner[col] = e;
    }
  }
  return {};
}

struct OracleSearch {
  std::vector<Endpoints> order;
  std::vector<std::uint64_t> used;  // per-vertex color bitmask
  std::size_t colors = 0;

  bool place(std::size_t i, std::size_t highest) {
    if (i == order.size()) return true;
    const auto [u, v] = order[i];
    const std::uint64_t blocked = used[u] | used[v];
    // colors above highest+1 are interchangeable, so only one fresh color is tried
    const std::size_t limit = std::min(colors, highest + 1);
    for (std::size_t col = 0; col < limit; ++col) {
      const std::uint64_t bit = std::uint64_t{1} << col;
      if (blocked & bit) continue;
      used[u] |= bit;
      used[v] |= bit;
      if (place(i + 1, std::max(highest, col + 1))) return true;
      used[u] &= ~bit;
      used[v] &= ~bit;
    }
    return false;
  }
};

}  // namespace

ProperCheck is_proper(const Multigraph& g, const EdgeColoring& c) { return check_proper(g, c, false); }

ProperCheck is_partial_proper(const Multigraph& g, const EdgeColoring& c) { return check_proper(g, c, true); }

std::size_t max_degree(const Multigraph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::size_t color_count(const EdgeColoring& c) {
  std::vector<Color> sorted;
  sorted.reserve(c.size());
  for (Color col : c.colors)
    if (col != kUncolored) sorted.push_back(col);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::size_t brute_force_chromatic_index(const Multigraph& g, std::size_t edge_budget) {
  const std::size_t m = g.edge_count();
  if (m > edge_budget)
    throw Error(Errc::TooLarge, std::to_string(m) + " edges exceed the oracle budget of " + std::to_string(edge_budget),
                {static_cast<std::int64_t>(m)});
  if (m == 0) return 0;
  if (m > 64) throw Error(Errc::TooLarge, "oracle supports at most 64 edges");

  // Greedy static order: start at the highest-degree endpoints, then always
  // take the edge touching the most already-placed edges.
  std::vector<bool> placed(m, false);
  std::vector<std::size_t> touched(g.vertex_count(), 0);
  OracleSearch search;
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t best = m;
    std::pair<std::size_t, std::size_t> best_key{0, 0};
    for (EdgeId e = 0; e < m; ++e) {
      if (placed[e]) continue;
      const auto [u, v] = g.endpoints(e);
      const std::pair<std::size_t, std::size_t> key{touched[u] + touched[v], g.degree(u) + g.degree(v)};
      if (best == m || key > best_key) {
        best = e;
        best_key = key;
      }
    }
    placed[best] = true;
    ++touched[g.endpoints(best).u];
    ++touched[g.endpoints(best).v];
    search.order.push_back(g.endpoints(best));
  }

  for (std::size_t k = std::max<std::size_t>(1, max_degree(g));; ++k) {
    search.colors = k;
    search.used.assign(g.vertex_count(), 0);
    if (search.place(0, 0)) return k;
  }
}

Format parse_format(std::string_view name) {
  if (name == "dot") return Format::Dot;
  if (name == "json") return Format::Json;
  throw Error(Errc::UnknownFormat, "unknown format '" + std::string(name) + "'");
}

std::string serialize(const Multigraph& g, const EdgeColoring& c, Format format) {
  if (c.size() != g.edge_count()) throw Error(Errc::PartialColoring, "coloring size does not match graph");
  std::ostringstream os;
  if (format == Format::Dot) {
    os << "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) == 0) os << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      os << "  " << g.endpoints(e).u << " -- " << g.endpoints(e).v << " [color=" << c[e] << "];\n";
    os << "}\n";
  } else {
    os << "{\"vertices\":" << g.vertex_count() << ",\"edges\":[";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (e) os << ',';
      os << '[' << g.endpoints(e).u << ',' << g.endpoints(e).v << ',' << c[e] << ']';
    }
    os << "]}\n";
  }
  return os.str();
}

GraphDocument parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  try {
    const std::size_t n = doc.at("vertices").get<std::size_t>();
    const auto& rows = doc.at("edges");
    if (!rows.is_array()) throw Error(Errc::ParseError, "'edges' must be an array");
    std::vector<Endpoints> edges;
    std::vector<Color> colors;
    bool all_colored = true;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() < 2 || row.size() > 3)
        throw Error(Errc::ParseError, "edge rows must be [u, v] or [u, v, color]");
      edges.push_back({row[0].get<VertexId>(), row[1].get<VertexId>()});
      if (row.size() == 3)
        colors.push_back(row[2].get<Color>());
      else
        all_colored = false;
    }
    GraphDocument out{Multigraph(n, std::move(edges)), std::nullopt};
    if (all_colored && !colors.empty()) out.coloring = EdgeColoring(std::move(colors));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

EdgeColoring parse_coloring_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    if (doc.is_object() && doc.contains("colors")) return EdgeColoring(doc.at("colors").get<std::vector<Color>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  auto parsed = parse_graph_json(text);
  if (!parsed.coloring) throw Error(Errc::ParseError, "document carries no colors");
  return std::move(*parsed.coloring);
}

}  // namespace tecol
