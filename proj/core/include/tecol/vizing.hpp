#pragma once

#include <cstddef>
#include <vector>

#include "tecol/multigraph.hpp"

namespace tecol {

/// Working state of the fan/Kempe-chain edge coloring on a simple graph.
///
/// Keeps, for every vertex and every palette color, the incident edge with
/// that color, so freeness and chain walks are O(1) per step. The partial
/// coloring is proper after every public mutation.
class FanState {
 public:
  /// Palette {1..palette}. `initial` may be partial; throws ParallelEdges on
  /// a non-simple graph and PartialColoring when `initial` is not proper or
  /// uses colors outside the palette.
  FanState(const Multigraph& g, Color palette, const EdgeColoring& initial);
  FanState(const Multigraph& g, Color palette);
  // The graph is referenced, not copied.
  FanState(Multigraph&&, Color, const EdgeColoring&) = delete;
  FanState(Multigraph&&, Color) = delete;

  Color palette() const noexcept { return palette_; }
  Color color(EdgeId e) const { return coloring_[e]; }
  bool is_free(VertexId v, Color c) const { return at(v, c) == kNone; }
  /// Smallest free color at v.
  Color first_free(VertexId v) const;

  /// Swaps a and b along the maximal a/b alternating path or cycle through v.
  /// No-op when v sees neither color.
  void kempe_flip(VertexId v, Color a, Color b);

  /// Colors the uncolored edge e without exceeding the palette (fan
  /// construction, Kempe flip at the fan center, fan rotation).
  void insert(EdgeId e);

  const EdgeColoring& coloring() const noexcept { return coloring_; }

 private:
  static constexpr EdgeId kNone = static_cast<EdgeId>(-1);

  EdgeId& at(VertexId v, Color c) { return by_color_[static_cast<std::size_t>(v) * (palette_ + 1) + c]; }
  EdgeId at(VertexId v, Color c) const { return by_color_[static_cast<std::size_t>(v) * (palette_ + 1) + c]; }
  void assign(EdgeId e, Color c);
  void clear(EdgeId e);

  const Multigraph* graph_;
  Color palette_;
  EdgeColoring coloring_;
  std::vector<EdgeId> by_color_;
};

/// Proper coloring with at most max_degree(g) + 1 colors; edges are inserted
/// in ascending id order. Throws ParallelEdges.
EdgeColoring vizing_color(const Multigraph& g);

}  // namespace tecol
