#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tecol {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Color = std::uint32_t;

/// Color value of an edge that has not been assigned yet.
inline constexpr Color kUncolored = 0;

struct Endpoints {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// Undirected loop-free multigraph with stable edge ids 0..edge_count()-1.
///
/// Parallel edges are allowed. The incidence lists are built once at
/// construction; each list is ordered by ascending edge id.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws InvalidGraph on out-of-range endpoints, loops, or a label vector
  /// whose length differs from the edge list.
  Multigraph(std::size_t vertex_count, std::vector<Endpoints> edges, std::vector<std::uint32_t> labels = {});

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Endpoints& endpoints(EdgeId e) const { return edges_[e]; }
  const std::vector<Endpoints>& edges() const noexcept { return edges_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::uint32_t label(EdgeId e) const { return labels_[e]; }

  std::span<const EdgeId> incident(VertexId v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  /// True iff there are no parallel edges.
  bool is_simple() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Endpoints> edges_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> incidence_;
};

/// Total or partial map edge id -> color. Colors are 1-based; kUncolored
/// marks a missing entry.
struct EdgeColoring {
  std::vector<Color> colors;

  EdgeColoring() = default;
  explicit EdgeColoring(std::size_t edge_count) : colors(edge_count, kUncolored) {}
  explicit EdgeColoring(std::vector<Color> c) : colors(std::move(c)) {}

  std::size_t size() const noexcept { return colors.size(); }
  Color operator[](EdgeId e) const { return colors[e]; }
  Color& operator[](EdgeId e) { return colors[e]; }
  bool is_total() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

struct Violation {
  VertexId vertex = 0;
  EdgeId first = 0;
  EdgeId second = 0;
};

struct ProperCheck {
  bool proper = true;
  std::optional<Violation> violation;

  explicit operator bool() const noexcept { return proper; }
};

/// Throws PartialColoring when `c` is not total on `g`. The witness is the
/// first vertex (ascending) carrying two equally-colored edges, with the two
/// smallest such edge ids.
ProperCheck is_proper(const Multigraph& g, const EdgeColoring& c);

/// Same check but tolerates uncolored edges (used on intermediate colorings).
ProperCheck is_partial_proper(const Multigraph& g, const EdgeColoring& c);

inline constexpr std::size_t kDefaultOracleBudget = 16;

/// Exact chromatic index by backtracking. Throws TooLarge when the graph
/// has more than `edge_budget` edges.
std::size_t brute_force_chromatic_index(const Multigraph& g, std::size_t edge_budget = kDefaultOracleBudget);

std::size_t max_degree(const Multigraph& g);

/// Number of distinct colors, ignoring kUncolored.
std::size_t color_count(const EdgeColoring& c);

enum class Format { Dot, Json };

/// Throws UnknownFormat.
Format parse_format(std::string_view name);

/// DOT: `graph G {` with one `u -- v [color=N];` line per edge.
/// JSON: {"vertices": n, "edges": [[u,v,color], ...]}.
/// Both are ordered by edge id and contain no whitespace variation.
std::string serialize(const Multigraph& g, const EdgeColoring& c, Format format);

struct GraphDocument {
  Multigraph graph;
  std::optional<EdgeColoring> coloring;  // present when every edge row has a third column
};

/// Reads the JSON format above; the color column is optional. Throws ParseError.
GraphDocument parse_graph_json(std::string_view text);

/// Accepts either {"colors": [...]} or a full graph document with colors.
EdgeColoring parse_coloring_json(std::string_view text);

}  // namespace tecol
