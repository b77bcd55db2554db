#pragma once

#include <cstddef>
#include <vector>

#include "tecol/marked_group.hpp"
#include "tecol/multigraph.hpp"

namespace tecol {

/// Color slots of the final coloring.
///   crossing edges           : 1 .. crossing_max (= deg_H + 1)
///   interior, before recolor : interior_first (= deg_H + 2) .. interior_last (<= d + 2)
///   replacement[y]           : color that replaced d + 2 on orbit y, 0 if none
struct PaletteLayout {
  Color crossing_max = 0;
  Color interior_first = 0;
  Color interior_last = 0;
  Color top_slot = 0;  // d + 2
  std::vector<Color> replacement;
};

struct VerificationSummary {
  bool proper = false;
  std::size_t colors_used = 0;
  std::size_t d = 0;
  std::size_t d0 = 0;
  std::size_t k = 0;
  std::size_t deg_H = 0;
  std::size_t N = 0;
  std::size_t sparse_edges = 0;
  std::size_t recolored_orbits = 0;
  /// Every replacement color was found absent on the orbit's crossing edges
  /// by a direct scan.
  bool recolor_audit = true;

  bool within_bound() const { return colors_used <= d + 1; }
};

struct FinalColoring {
  EdgeColoring coloring;  // on model.graph()
  PaletteLayout layout;
  VerificationSummary summary;
};

struct QuotientColoring {
  EdgeColoring coloring;  // on the QuotientMultigraph layout
  std::size_t sparse_edges = 0;
};

/// Colors H with the engine matching the quotient kind and checks that the
/// engine's edge layout matches `h` (SlotMismatch otherwise).
QuotientColoring color_quotient(const FiniteModel& model, const QuotientMultigraph& h);

/// Crossing edges get the color of their H-edge; interior edges stay
/// uncolored. Throws SlotMismatch when `h`/`cH` do not come from `model`.
EdgeColoring lift_H_coloring(const FiniteModel& model, const QuotientMultigraph& h, const EdgeColoring& cH);

/// Vizing pattern of the Cayley graph (Delta, S_0) with colors shifted to
/// deg_H + 2 ..., copied to every orbit through (delta, q) <-> delta.
/// Crossing edges stay uncolored.
EdgeColoring color_orbit_interiors(const FiniteModel& model);

/// Interior pattern on Delta itself (before the shift), as used by
/// color_orbit_interiors. Edge ids follow cayley_interior_graph().
Multigraph cayley_interior_graph(const FiniteModel& model);

/// Replaces the top slot d + 2 on each orbit where it occurs with the
/// smallest color of 1..deg_H+1 missing at that orbit in cH.
/// Throws NoFreeColor if none exists.
FinalColoring free_color_recolor(const FiniteModel& model, const QuotientMultigraph& h, const EdgeColoring& cH,
                                 EdgeColoring merged);

/// Full construction for one finite model. Errors carry the failing stage.
FinalColoring run(const MarkedGroupSpec& spec, std::size_t N);

/// Same as run() but on an already built model.
FinalColoring run(const FiniteModel& model);

}  // namespace tecol
