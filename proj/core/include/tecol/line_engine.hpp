#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tecol/multigraph.hpp"

namespace tecol {

/// Cyclic quotient model: Z/N with positive generators n_1 <= ... <= n_k
/// (multiplicity allowed). Its multigraph joins y and y + n_i for every slot
/// i and every y; edge id i*N + y.
struct CycleModel {
  std::size_t N = 0;
  std::vector<std::uint32_t> generators;  // sorted ascending

  /// Sorts the generators. Throws InvalidModel when k = 0, some n_i = 0, or
  /// N <= 2 * n_k.
  static CycleModel make(std::size_t N, std::vector<std::uint32_t> generators);

  std::size_t k() const noexcept { return generators.size(); }
  std::uint32_t largest() const { return generators.back(); }
  /// Discreteness parameter and minimal run length, both 2 * n_k.
  std::size_t run_floor() const { return 2 * static_cast<std::size_t>(largest()); }
  std::size_t edge_count() const { return k() * N; }
  /// N >= 4 k n_k, enough for round-robin marker classes.
  bool has_marker_supply() const { return N >= 4 * k() * largest(); }
};

Multigraph cycle_multigraph(const CycleModel& model);

struct MarkerSet {
  std::size_t N = 0;
  std::vector<std::uint32_t> points;  // ascending
};

/// Greedy maximal D-discrete subset of Z/N: scan 0, 1, ... and keep x when it
/// is at distance >= D from the last kept point and from 0 across the wrap.
MarkerSet greedy_discrete_markers(std::size_t N, std::size_t D);

/// k classes covering Z/N. Marker of rank r goes to class r mod k and class
/// i owns the half-open gaps [x, next(x)) of its markers.
struct RecurrentPartition {
  std::size_t N = 0;
  std::size_t k = 0;
  std::vector<std::uint32_t> owner;  // class in 0..k-1 for every position

  bool contains(std::size_t i, std::size_t y) const { return owner[y] == i; }
  /// 0/1 membership mask of class i.
  std::vector<std::uint8_t> mask(std::size_t i) const;
};

/// Throws TooFewMarkers when |B| < k, and InvalidModel when a marker gap is
/// shorter than run_floor.
RecurrentPartition recurrent_partition(const MarkerSet& markers, std::size_t k, std::size_t N, std::size_t run_floor);

struct Palette {
  Color first = 1;
  Color second = 2;
  Color sparse = 3;
};

/// Proper 3-edge-coloring of a cycle v_0 v_1 ... v_{L-1}; edge j joins
/// v_j and v_{j+1 mod L}. `in_set[j]` says whether v_j lies in A.
///
/// Anchors are the starts of the maximal runs of A (position 0 when A covers
/// the cycle). Each gap between consecutive anchors alternates first/second
/// from its anchor; an odd gap puts `sparse` on its first edge, which lies
/// inside the anchor's run. Throws InvalidModel (L < 3), NoAnchor (A misses
/// the cycle) or RunTooShort (a run of length 1).
std::vector<Color> three_color_with_sparse(std::span<const std::uint8_t> in_set, const Palette& palette);

/// Same, with the cycle given as vertex ids and A as a membership mask over
/// vertex ids.
std::vector<Color> three_color_with_sparse(std::span<const std::uint32_t> cycle,
                                           std::span<const std::uint8_t> membership, const Palette& palette);

/// Colors slot i (edges y -> y + n_i, indexed by y) with `palette`, running
/// along each of the gcd(n_i, N) cycles of that slot from its smallest vertex.
std::vector<Color> color_H_i(const CycleModel& model, std::size_t i, const RecurrentPartition& partition,
                             const Palette& palette);

struct CyclicColoring {
  EdgeColoring coloring;  // over cycle_multigraph(model)
  MarkerSet markers;
  RecurrentPartition partition;
  std::size_t sparse_edges = 0;
  Color sparse_color = 0;
};

/// (2k+1)-edge-coloring of the full cyclic multigraph. Slot i (0-based) uses
/// colors 2i+1, 2i+2 and the shared sparse color 2k+1.
CyclicColoring color_cyclic_H(const CycleModel& model);

}  // namespace tecol
