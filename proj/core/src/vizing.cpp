#include "tecol/vizing.hpp"

#include <algorithm>
#include <cassert>

#include "tecol/error.hpp"

namespace tecol {

FanState::FanState(const Multigraph& g, Color palette) : FanState(g, palette, EdgeColoring(g.edge_count())) {}

FanState::FanState(const Multigraph& g, Color palette, const EdgeColoring& initial)
    : graph_(&g), palette_(palette), coloring_(g.edge_count()) {
  if (!g.is_simple()) throw Error(Errc::ParallelEdges, "the fan procedure needs a simple graph");
  if (initial.size() != g.edge_count()) throw Error(Errc::PartialColoring, "initial coloring has the wrong size");
  by_color_.assign(g.vertex_count() * (static_cast<std::size_t>(palette_) + 1), kNone);
  for (EdgeId e = 0; e < initial.size(); ++e) {
    const Color c = initial[e];
    if (c == kUncolored) continue;
    const auto [u, v] = g.endpoints(e);
    if (c > palette_ || !is_free(u, c) || !is_free(v, c))
      throw Error(Errc::PartialColoring, "initial coloring is not proper within the palette",
                  {static_cast<std::int64_t>(e)});
    assign(e, c);
  }
}

Color FanState::first_free(VertexId v) const {
  for (Color c = 1; c <= palette_; ++c)
    if (is_free(v, c)) return c;
  return kUncolored;
}

void FanState::assign(EdgeId e, Color c) {
  const auto [u, v] = graph_->endpoints(e);
  assert(coloring_[e] == kUncolored && is_free(u, c) && is_free(v, c));
  coloring_[e] = c;
  at(u, c) = e;
  at(v, c) = e;
}

void FanState::clear(EdgeId e) {
  const Color c = coloring_[e];
  if (c == kUncolored) return;
  const auto [u, v] = graph_->endpoints(e);
  at(u, c) = kNone;
  at(v, c) = kNone;
  coloring_[e] = kUncolored;
}

void FanState::kempe_flip(VertexId v, Color a, Color b) {
  if (a == b) return;
  std::vector<EdgeId> chain;
  bool closed = false;
  // walk away from v starting with color a, then with color b
  for (Color start : {a, b}) {
    if (closed) break;
    VertexId x = v;
    Color want = start;
    for (;;) {
      const EdgeId e = at(x, want);
      if (e == kNone) break;
      if (!chain.empty() && e == chain.front()) {
        closed = true;
        break;
      }
      chain.push_back(e);
      x = graph_->endpoints(e).other(x);
      want = want == a ? b : a;
    }
  }
  std::vector<Color> swapped(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) swapped[i] = coloring_[chain[i]] == a ? b : a;
  for (EdgeId e : chain) clear(e);
  for (std::size_t i = 0; i < chain.size(); ++i) assign(chain[i], swapped[i]);
}

void FanState::insert(EdgeId e) {
  if (coloring_[e] != kUncolored) return;
  const VertexId u = graph_->endpoints(e).u;

  // Maximal fan at u: fan[j+1] is joined to u by an edge whose color is free
  // at fan[j].
  std::vector<VertexId> fan{graph_->endpoints(e).v};
  std::vector<EdgeId> spokes{e};
  std::vector<VertexId> members{fan.front()};
  for (bool grown = true; grown;) {
    grown = false;
    const VertexId last = fan.back();
    for (Color c = 1; c <= palette_ && !grown; ++c) {
      if (!is_free(last, c)) continue;
      const EdgeId spoke = at(u, c);
      if (spoke == kNone) continue;
      const VertexId w = graph_->endpoints(spoke).other(u);
      if (std::find(members.begin(), members.end(), w) != members.end()) continue;
      fan.push_back(w);
      spokes.push_back(spoke);
      members.push_back(w);
      grown = true;
    }
  }

  const Color c = first_free(u);
  const Color d = first_free(fan.back());
  if (c == kUncolored || d == kUncolored)
    throw Error(Errc::PartialColoring, "palette exhausted; the graph degree exceeds palette - 1");
  kempe_flip(u, d, c);

  // Shortest prefix of the fan that is still a fan and ends at a vertex
  // missing d.
  std::size_t end = fan.size();
  for (std::size_t j = 0; j < fan.size(); ++j) {
    if (j > 0 && (coloring_[spokes[j]] == kUncolored || !is_free(fan[j - 1], coloring_[spokes[j]]))) break;
    if (is_free(fan[j], d)) {
      end = j;
      break;
    }
  }
  if (end == fan.size()) throw Error(Errc::PartialColoring, "fan rotation invariant violated");

  std::vector<Color> rotated(end + 1);
  for (std::size_t j = 0; j < end; ++j) rotated[j] = coloring_[spokes[j + 1]];
  rotated[end] = d;
  for (std::size_t j = 0; j <= end; ++j) clear(spokes[j]);
  for (std::size_t j = 0; j <= end; ++j) {
    const auto [x, y] = graph_->endpoints(spokes[j]);
    if (!is_free(x, rotated[j]) || !is_free(y, rotated[j]))
      throw Error(Errc::PartialColoring, "fan rotation produced a conflict", {static_cast<std::int64_t>(spokes[j])});
    assign(spokes[j], rotated[j]);
  }
}

EdgeColoring vizing_color(const Multigraph& g) {
  const auto palette = static_cast<Color>(max_degree(g) + 1);
  FanState state(g, palette);
  for (EdgeId e = 0; e < g.edge_count(); ++e) state.insert(e);
  return state.coloring();
}

}  // namespace tecol
