#include "tecol/pipeline.hpp"

#include <algorithm>

#include "tecol/dihedral_engine.hpp"
#include "tecol/error.hpp"
#include "tecol/line_engine.hpp"
#include "tecol/vizing.hpp"

namespace tecol {

namespace {

void require_same_layout(const Multigraph& engine, const Multigraph& h) {
  if (engine.vertex_count() != h.vertex_count() || engine.edges() != h.edges())
    throw Error(Errc::SlotMismatch, "engine edge layout differs from the quotient multigraph");
}

template <typename Fn>
auto staged(const char* stage, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (!e.stage().empty()) throw;
    throw e.with_stage(stage);
  }
}

}  // namespace

QuotientColoring color_quotient(const FiniteModel& model, const QuotientMultigraph& h) {
  QuotientColoring out;
  if (h.graph.edge_count() == 0) return out;

  if (model.spec().kind() == QuotientKind::Z) {
    std::vector<std::uint32_t> gens;
    for (const auto& [n, members] : model.partition().translations)
      if (n > 0) gens.insert(gens.end(), members.size(), static_cast<std::uint32_t>(n));
    const auto cycle = CycleModel::make(model.N(), std::move(gens));
    require_same_layout(cycle_multigraph(cycle), h.graph);
    auto colored = color_cyclic_H(cycle);
    out.coloring = std::move(colored.coloring);
    out.sparse_edges = colored.sparse_edges;
  } else {
    const auto dihedral = DihedralModel::make(model.N(), quotient_generators(model.spec()));
    require_same_layout(dihedral_multigraph(dihedral), h.graph);
    auto colored = color_dihedral_H(dihedral);
    out.coloring = std::move(colored.coloring);
    out.sparse_edges = colored.sparse_edges;
  }
  return out;
}

EdgeColoring lift_H_coloring(const FiniteModel& model, const QuotientMultigraph& h, const EdgeColoring& cH) {
  const Multigraph& g = model.graph();
  if (cH.size() != h.graph.edge_count() || h.generator.size() != h.graph.edge_count() ||
      h.graph.vertex_count() != model.orbit_count())
    throw Error(Errc::SlotMismatch, "quotient coloring does not belong to this model");

  EdgeColoring lifted(g.edge_count());
  const std::size_t fiber = model.fiber_size();
  for (EdgeId e = 0; e < h.graph.edge_count(); ++e) {
    const auto [source, target] = h.graph.endpoints(e);
    const std::size_t generator = h.generator[e];
    if (generator >= model.spec().d())
      throw Error(Errc::SlotMismatch, "quotient edge names an unknown generator", {static_cast<std::int64_t>(e)});
    for (GroupElement delta = 0; delta < fiber; ++delta) {
      const VertexId x = model.vertex(delta, source);
      const EdgeId lift = model.edge_at(x, generator);
      if (model.orbit_of(g.endpoints(lift).other(x)) != target || model.is_interior(lift) ||
          lifted[lift] != kUncolored)
        throw Error(Errc::SlotMismatch, "quotient edge does not lift to a fresh crossing edge",
                    {static_cast<std::int64_t>(e), static_cast<std::int64_t>(lift)});
      lifted[lift] = cH[e];
    }
  }
  return lifted;
}

namespace {

struct InteriorCayley {
  Multigraph graph;
  std::vector<EdgeId> slot;  // (delta * d + i) -> edge {delta, s_i delta}
};

InteriorCayley build_interior_cayley(const FiniteModel& model) {
  const auto& spec = model.spec();
  const std::size_t m = model.fiber_size();
  const std::size_t d = spec.d();
  constexpr EdgeId kUnset = static_cast<EdgeId>(-1);
  InteriorCayley out;
  out.slot.assign(m * d, kUnset);
  std::vector<Endpoints> edges;
  std::vector<std::uint32_t> labels;
  for (GroupElement x = 0; x < m; ++x)
    for (std::size_t i : model.partition().interior) {
      if (out.slot[x * d + i] != kUnset) continue;
      const GroupElement y = spec.delta().mul(spec.generators()[i].delta, x);
      const std::size_t j = spec.inverse_index(i);
      const auto id = static_cast<EdgeId>(edges.size());
      out.slot[x * d + i] = id;
      out.slot[y * d + j] = id;
      edges.push_back({x, y});
      labels.push_back(static_cast<std::uint32_t>(std::min(i, j)));
    }
  out.graph = Multigraph(m, std::move(edges), std::move(labels));
  return out;
}

}  // namespace

Multigraph cayley_interior_graph(const FiniteModel& model) { return build_interior_cayley(model).graph; }

EdgeColoring color_orbit_interiors(const FiniteModel& model) {
  const Multigraph& g = model.graph();
  EdgeColoring out(g.edge_count());
  const auto& interior = model.partition().interior;
  if (interior.empty()) return out;

  const InteriorCayley cayley = build_interior_cayley(model);
  const EdgeColoring pattern = vizing_color(cayley.graph);
  const auto shift = static_cast<Color>(model.partition().quotient_degree() + 1);
  const std::size_t d = model.spec().d();

  for (std::size_t orbit = 0; orbit < model.orbit_count(); ++orbit)
    for (GroupElement delta = 0; delta < model.fiber_size(); ++delta)
      for (std::size_t i : interior)
        out[model.edge_at(model.vertex(delta, orbit), i)] = pattern[cayley.slot[delta * d + i]] + shift;
  return out;
}

FinalColoring free_color_recolor(const FiniteModel& model, const QuotientMultigraph& h, const EdgeColoring& cH,
                                 EdgeColoring merged) {
  const auto& part = model.partition();
  const std::size_t deg_H = part.quotient_degree();
  const auto top = static_cast<Color>(part.d + 2);
  const auto crossing_max = static_cast<Color>(deg_H + 1);
  const std::size_t fiber = model.fiber_size();

  FinalColoring out;
  out.layout.crossing_max = crossing_max;
  out.layout.interior_first = static_cast<Color>(deg_H + 2);
  out.layout.top_slot = top;
  out.layout.replacement.assign(model.orbit_count(), kUncolored);
  for (EdgeId e = 0; e < merged.size(); ++e)
    if (model.is_interior(e)) out.layout.interior_last = std::max(out.layout.interior_last, merged[e]);

  std::vector<std::uint8_t> used(static_cast<std::size_t>(crossing_max) + 1);
  for (std::size_t orbit = 0; orbit < model.orbit_count(); ++orbit) {
    bool uses_top = false;
    for (GroupElement delta = 0; delta < fiber && !uses_top; ++delta)
      for (std::size_t i : part.interior)
        if (merged[model.edge_at(model.vertex(delta, orbit), i)] == top) uses_top = true;
    if (!uses_top) continue;

    std::fill(used.begin(), used.end(), 0);
    for (EdgeId e : h.graph.incident(static_cast<VertexId>(orbit)))
      if (cH[e] <= crossing_max) used[cH[e]] = 1;
    Color free = kUncolored;
    for (Color c = 1; c <= crossing_max && free == kUncolored; ++c)
      if (!used[c]) free = c;
    if (free == kUncolored)
      throw Error(Errc::NoFreeColor, "orbit " + std::to_string(orbit) + " sees every crossing color",
                  {static_cast<std::int64_t>(orbit)});

    for (GroupElement delta = 0; delta < fiber; ++delta) {
      const VertexId x = model.vertex(delta, orbit);
      for (std::size_t i = 0; i < part.d; ++i) {
        const EdgeId e = model.edge_at(x, i);
        if (model.is_interior(e)) {
          if (merged[e] == top) merged[e] = free;
        } else if (merged[e] == free) {
          out.summary.recolor_audit = false;
        }
      }
    }
    out.layout.replacement[orbit] = free;
    ++out.summary.recolored_orbits;
  }

  out.coloring = std::move(merged);
  out.summary.d = part.d;
  out.summary.d0 = part.d0;
  out.summary.k = part.k;
  out.summary.deg_H = deg_H;
  out.summary.N = model.N();
  out.summary.proper = is_proper(model.graph(), out.coloring).proper;
  out.summary.colors_used = color_count(out.coloring);
  return out;
}

FinalColoring run(const FiniteModel& model) {
  const QuotientMultigraph h = staged("quotient", [&] { return build_quotient_multigraph(model); });
  QuotientColoring cH = staged("engine", [&] { return color_quotient(model, h); });
  if (cH.coloring.size() == 0) cH.coloring = EdgeColoring(h.graph.edge_count());

  EdgeColoring merged = staged("lift", [&] { return lift_H_coloring(model, h, cH.coloring); });
  const EdgeColoring interior = staged("interior", [&] { return color_orbit_interiors(model); });
  for (EdgeId e = 0; e < merged.size(); ++e)
    if (interior[e] != kUncolored) merged[e] = interior[e];

  FinalColoring out =
      staged("recolor", [&] { return free_color_recolor(model, h, cH.coloring, std::move(merged)); });
  out.summary.sparse_edges = cH.sparse_edges;
  return out;
}

FinalColoring run(const MarkedGroupSpec& spec, std::size_t N) {
  const FiniteModel model = staged("model", [&] { return finite_model(spec, N); });
  return run(model);
}

}  // namespace tecol
