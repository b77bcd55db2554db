#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tecol/finite_group.hpp"
#include "tecol/marked_group.hpp"

namespace tecol {

/// One run request read from a config document:
///
///   {
///     "name": "optional label",
///     "delta": "cyclic:2" | {"order": m, "table": [[...]]},
///     "quotient": "Z" | "Dinf",
///     "alpha": [perm...],          // optional, identity by default
///     "rho": [perm...],            // Dinf only, identity by default
///     "generators": [[delta, n, eps], ...],
///     "multiset": false,           // optional
///     "N": 120                     // optional
///   }
///
/// A top-level array, or {"runs": [...]}, is a batch.
struct RunConfig {
  std::string name;
  MarkedGroupSpec spec;
  std::optional<std::size_t> N;
};

/// Throws ParseError for malformed documents and the spec errors for
/// inconsistent ones.
std::vector<RunConfig> parse_config(std::string_view text);

/// {"order": m, "table": [[...]]}
FiniteGroup parse_group_table(std::string_view text);

}  // namespace tecol
