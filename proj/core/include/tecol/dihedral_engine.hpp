#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tecol/line_engine.hpp"
#include "tecol/marked_group.hpp"
#include "tecol/multigraph.hpp"

namespace tecol {

/// Quotient model over the dihedral group of order 2M.
///
/// Vertex (n, eps) has index eps * M + n. Edge layout:
///   reflection slot j (in input order): edge j*M + n joins (n, 0) and r_j (n, 0);
///   translation slot i (sorted by n):   edge R*M + 2M*i + y joins y and t^{n_i} y.
struct DihedralModel {
  std::size_t M = 0;
  std::vector<QuotientElement> reflections;  // with multiplicity, input order
  std::vector<std::uint32_t> translations;   // positive n of each pair, ascending

  /// Throws InvalidModel for an empty or non-inverse-closed multiset, the
  /// identity, or a translation with |n| = 0 or 2|n| >= M.
  static DihedralModel make(std::size_t M, const std::vector<QuotientElement>& generators);

  std::size_t vertex_count() const { return 2 * M; }
  std::size_t edge_count() const { return reflections.size() * M + translations.size() * 2 * M; }
  std::size_t degree() const { return reflections.size() + 2 * translations.size(); }
  std::size_t index(const QuotientElement& q) const;
  QuotientElement element(std::size_t index) const;
};

Multigraph dihedral_multigraph(const DihedralModel& model);

/// Reflection slot j gets color j+1 on its whole matching; other entries
/// stay uncolored.
EdgeColoring color_reflections(const DihedralModel& model);

struct TranslationColoring {
  EdgeColoring coloring;  // partial; reflection slots uncolored
  RecurrentPartition partition;
  std::size_t sparse_edges = 0;
  Color sparse_color = 0;
};

/// Pair i (1-based) gets colors R + 2i - 1, R + 2i and the shared sparse
/// color R + 2t + 1, placed with the line engine on each translation coset.
TranslationColoring color_translation_pairs(const DihedralModel& model);

struct DihedralColoring {
  EdgeColoring coloring;
  std::size_t sparse_edges = 0;
  Color sparse_color = 0;        // 0 when there are no translation pairs
  RecurrentPartition partition;  // shared by both cosets; empty without translations
};

/// Proper coloring with at most degree() + 1 colors.
DihedralColoring color_dihedral_H(const DihedralModel& model);

}  // namespace tecol
