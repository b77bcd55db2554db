#include "tecol/dihedral_engine.hpp"

#include <algorithm>
#include <map>

#include "tecol/error.hpp"

namespace tecol {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

DihedralModel DihedralModel::make(std::size_t M, const std::vector<QuotientElement>& generators) {
  if (generators.empty()) throw Error(Errc::InvalidModel, "dihedral model needs at least one generator");
  if (M == 0) throw Error(Errc::InvalidModel, "dihedral model needs M >= 1");
  DihedralModel model;
  model.M = M;
  std::map<std::int64_t, std::size_t> counts;
  for (const auto& q : generators) {
    if (q.is_identity()) throw Error(Errc::InvalidModel, "the identity is not a generator");
    if (q.eps != 0 && q.eps != 1) throw Error(Errc::InvalidModel, "epsilon must be 0 or 1");
    if (q.is_reflection()) {
      model.reflections.push_back({mod(q.n, static_cast<std::int64_t>(M)), 1});
      continue;
    }
    if (2 * static_cast<std::size_t>(std::abs(q.n)) >= M)
      throw Error(Errc::InvalidModel, "translation " + std::to_string(q.n) + " needs M > 2|n|", {q.n});
    ++counts[q.n];
  }
  for (const auto& [n, c] : counts) {
    const auto mirror = counts.find(-n);
    if (mirror == counts.end() || mirror->second != c)
      throw Error(Errc::InvalidModel, "generator multiset is not inverse-closed", {n});
    if (n > 0)
      for (std::size_t i = 0; i < c; ++i) model.translations.push_back(static_cast<std::uint32_t>(n));
  }
  return model;
}

std::size_t DihedralModel::index(const QuotientElement& q) const {
  return static_cast<std::size_t>(q.eps) * M + static_cast<std::size_t>(mod(q.n, static_cast<std::int64_t>(M)));
}

QuotientElement DihedralModel::element(std::size_t index) const {
  return {static_cast<std::int64_t>(index % M), static_cast<int>(index / M)};
}

Multigraph dihedral_multigraph(const DihedralModel& model) {
  std::vector<Endpoints> edges;
  edges.reserve(model.edge_count());
  for (const auto& r : model.reflections)
    for (std::size_t n = 0; n < model.M; ++n) {
      const QuotientElement y{static_cast<std::int64_t>(n), 0};
      edges.push_back({static_cast<VertexId>(model.index(y)), static_cast<VertexId>(model.index(r * y))});
    }
  for (std::uint32_t t : model.translations)
    for (std::size_t y = 0; y < model.vertex_count(); ++y) {
      const QuotientElement target = QuotientElement{t, 0} * model.element(y);
      edges.push_back({static_cast<VertexId>(y), static_cast<VertexId>(model.index(target))});
    }
  return Multigraph(model.vertex_count(), std::move(edges));
}

EdgeColoring color_reflections(const DihedralModel& model) {
  EdgeColoring c(model.edge_count());
  for (std::size_t j = 0; j < model.reflections.size(); ++j)
    std::fill_n(c.colors.begin() + static_cast<std::ptrdiff_t>(j * model.M), model.M, static_cast<Color>(j + 1));
  return c;
}

TranslationColoring color_translation_pairs(const DihedralModel& model) {
  TranslationColoring out;
  out.coloring = EdgeColoring(model.edge_count());
  if (model.translations.empty()) return out;

  const std::size_t R = model.reflections.size();
  const std::size_t t = model.translations.size();
  const std::size_t M = model.M;
  const auto cycle = CycleModel::make(M, model.translations);
  out.sparse_color = static_cast<Color>(R + 2 * t + 1);

  // Left translation keeps eps, so each coset is a copy of the cyclic model
  // traversed in ascending translation power: identity coset first.
  for (std::size_t coset = 0; coset < 2; ++coset) {
    const CyclicColoring line = color_cyclic_H(cycle);
    if (coset == 0) out.partition = line.partition;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t p = 0; p < M; ++p) {
        const Color c = line.coloring[static_cast<EdgeId>(i * M + p)];
        const Color mapped = c == line.sparse_color ? out.sparse_color : static_cast<Color>(R + c);
        out.coloring[static_cast<EdgeId>(R * M + i * 2 * M + coset * M + p)] = mapped;
      }
    out.sparse_edges += line.sparse_edges;
  }
  return out;
}

DihedralColoring color_dihedral_H(const DihedralModel& model) {
  const EdgeColoring reflections = color_reflections(model);
  TranslationColoring translations = color_translation_pairs(model);

  DihedralColoring out;
  out.coloring = EdgeColoring(model.edge_count());
  for (EdgeId e = 0; e < model.edge_count(); ++e) {
    const Color a = reflections[e], b = translations.coloring[e];
    if ((a == kUncolored) == (b == kUncolored))
      throw Error(Errc::InvalidModel, "partial colorings are not a disjoint cover", {static_cast<std::int64_t>(e)});
    out.coloring[e] = a != kUncolored ? a : b;
  }
  out.sparse_edges = translations.sparse_edges;
  out.sparse_color = translations.sparse_color;
  out.partition = std::move(translations.partition);
  return out;
}

}  // namespace tecol
