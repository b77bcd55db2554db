#include "tecol/line_engine.hpp"

#include <algorithm>
#include <numeric>

#include "tecol/error.hpp"

namespace tecol {

CycleModel CycleModel::make(std::size_t N, std::vector<std::uint32_t> generators) {
  if (generators.empty()) throw Error(Errc::InvalidModel, "cycle model needs at least one generator");
  std::sort(generators.begin(), generators.end());
  if (generators.front() == 0) throw Error(Errc::InvalidModel, "generators must be positive");
  if (N <= 2 * static_cast<std::size_t>(generators.back()))
    throw Error(Errc::InvalidModel,
                "N = " + std::to_string(N) + " must exceed 2 * n_k = " + std::to_string(2 * generators.back()),
                {static_cast<std::int64_t>(N), static_cast<std::int64_t>(generators.back())});
  return CycleModel{N, std::move(generators)};
}

Multigraph cycle_multigraph(const CycleModel& model) {
  std::vector<Endpoints> edges;
  edges.reserve(model.edge_count());
  for (std::uint32_t n : model.generators)
    for (std::size_t y = 0; y < model.N; ++y)
      edges.push_back({static_cast<VertexId>(y), static_cast<VertexId>((y + n) % model.N)});
  return Multigraph(model.N, std::move(edges));
}

MarkerSet greedy_discrete_markers(std::size_t N, std::size_t D) {
  if (N == 0 || D == 0) throw Error(Errc::InvalidModel, "markers need N >= 1 and D >= 1");
  MarkerSet b{N, {0}};
  for (std::size_t x = D; x + D <= N; x += D) b.points.push_back(static_cast<std::uint32_t>(x));
  return b;
}

std::vector<std::uint8_t> RecurrentPartition::mask(std::size_t i) const {
  std::vector<std::uint8_t> m(N);
  for (std::size_t y = 0; y < N; ++y) m[y] = owner[y] == i;
  return m;
}

RecurrentPartition recurrent_partition(const MarkerSet& markers, std::size_t k, std::size_t N,
                                       std::size_t run_floor) {
  const auto& b = markers.points;
  if (k == 0) throw Error(Errc::InvalidModel, "partition needs k >= 1");
  if (b.size() < k)
    throw Error(Errc::TooFewMarkers,
                std::to_string(b.size()) + " markers for " + std::to_string(k) + " classes; raise N",
                {static_cast<std::int64_t>(b.size()), static_cast<std::int64_t>(k)});
  if (markers.N != N) throw Error(Errc::InvalidModel, "marker set belongs to a different cycle");

  RecurrentPartition p{N, k, std::vector<std::uint32_t>(N, 0)};
  for (std::size_t r = 0; r < b.size(); ++r) {
    const std::size_t start = b[r];
    const std::size_t end = r + 1 < b.size() ? b[r + 1] : b[0] + N;
    if (b.size() > 1 && end - start < run_floor)
      throw Error(Errc::InvalidModel, "marker gap shorter than the run floor",
                  {static_cast<std::int64_t>(start), static_cast<std::int64_t>(end - start)});
    for (std::size_t y = start; y < end; ++y) p.owner[y % N] = static_cast<std::uint32_t>(r % k);
  }
  return p;
}

std::vector<Color> three_color_with_sparse(std::span<const std::uint8_t> in_set, const Palette& palette) {
  const std::size_t L = in_set.size();
  if (L < 3) throw Error(Errc::InvalidModel, "cycle length must be at least 3", {static_cast<std::int64_t>(L)});

  std::vector<std::size_t> anchors;
  std::size_t members = 0;
  for (std::size_t j = 0; j < L; ++j) {
    if (!in_set[j]) continue;
    ++members;
    if (!in_set[(j + L - 1) % L]) {
      if (!in_set[(j + 1) % L])
        throw Error(Errc::RunTooShort, "run of length 1 at position " + std::to_string(j),
                    {static_cast<std::int64_t>(j)});
      anchors.push_back(j);
    }
  }
  if (members == 0) throw Error(Errc::NoAnchor, "the set does not meet the cycle");
  if (anchors.empty()) anchors.push_back(0);

  std::vector<Color> colors(L, kUncolored);
  for (std::size_t a = 0; a < anchors.size(); ++a) {
    const std::size_t start = anchors[a];
    const std::size_t gap = anchors.size() == 1 ? L : (anchors[(a + 1) % anchors.size()] + L - start) % L;
    const bool odd = gap % 2 == 1;
    for (std::size_t m = 0; m < gap; ++m) {
      Color c;
      if (!odd)
        c = m % 2 == 0 ? palette.first : palette.second;
      else if (m == 0)
        c = palette.sparse;
      else
        c = m % 2 == 1 ? palette.first : palette.second;
      colors[(start + m) % L] = c;
    }
  }
  return colors;
}

std::vector<Color> three_color_with_sparse(std::span<const std::uint32_t> cycle,
                                           std::span<const std::uint8_t> membership, const Palette& palette) {
  std::vector<std::uint8_t> in_set(cycle.size());
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    if (cycle[j] >= membership.size()) throw Error(Errc::InvalidModel, "cycle vertex outside the membership mask");
    in_set[j] = membership[cycle[j]];
  }
  return three_color_with_sparse(in_set, palette);
}

std::vector<Color> color_H_i(const CycleModel& model, std::size_t i, const RecurrentPartition& partition,
                             const Palette& palette) {
  const std::size_t N = model.N;
  const std::size_t n = model.generators.at(i);
  if (partition.N != N || i >= partition.k)
    throw Error(Errc::InvalidModel, "partition does not match the cycle model");
  const std::size_t cycles = std::gcd(n, N);
  const std::size_t length = N / cycles;

  std::vector<Color> out(N, kUncolored);
  std::vector<std::uint8_t> in_set(length);
  for (std::size_t r = 0; r < cycles; ++r) {
    for (std::size_t j = 0, y = r; j < length; ++j, y = (y + n) % N) in_set[j] = partition.owner[y] == i;
    const auto colors = three_color_with_sparse(in_set, palette);
    for (std::size_t j = 0, y = r; j < length; ++j, y = (y + n) % N) out[y] = colors[j];
  }
  return out;
}

CyclicColoring color_cyclic_H(const CycleModel& model) {
  const std::size_t k = model.k();
  CyclicColoring result;
  result.markers = greedy_discrete_markers(model.N, model.run_floor());
  result.partition = recurrent_partition(result.markers, k, model.N, model.run_floor());
  result.sparse_color = static_cast<Color>(2 * k + 1);
  result.coloring = EdgeColoring(model.edge_count());

  // Slots are edge-disjoint and only share the sparse color.
  for (std::size_t i = 0; i < k; ++i) {
    const Palette palette{static_cast<Color>(2 * i + 1), static_cast<Color>(2 * i + 2), result.sparse_color};
    const auto slot = color_H_i(model, i, result.partition, palette);
    std::copy(slot.begin(), slot.end(), result.coloring.colors.begin() + static_cast<std::ptrdiff_t>(i * model.N));
  }
  result.sparse_edges = static_cast<std::size_t>(
      std::count(result.coloring.colors.begin(), result.coloring.colors.end(), result.sparse_color));
  return result;
}

}  // namespace tecol
