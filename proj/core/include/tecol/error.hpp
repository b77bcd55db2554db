#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tecol {

enum class Errc {
  // finite-group
  MalformedTable,
  NotAssociative,
  NoIdentity,
  NoInverse,
  UnsupportedKind,
  NotHomomorphism,
  NotBijection,
  // marked-group
  InvalidSpec,
  SymmetryViolation,
  IdentityGenerator,
  DuplicateGenerator,
  TwistNotClosed,
  ModelTooSmall,
  // multigraph
  InvalidGraph,
  PartialColoring,
  TooLarge,
  UnknownFormat,
  // engines
  InvalidModel,
  TooFewMarkers,
  RunTooShort,
  NoAnchor,
  // vizing
  ParallelEdges,
  // pipeline
  SlotMismatch,
  NoFreeColor,
  // io
  ParseError,
};

std::string_view to_string(Errc code);

/// Library error. `witness()` carries the indices that exhibit the failure
/// (e.g. the non-associative triple), `stage()` is set by the pipeline.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<std::int64_t> witness = {});

  Errc code() const noexcept { return code_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }
  const std::string& stage() const noexcept { return stage_; }

  const std::string& message() const noexcept { return message_; }

  Error with_stage(std::string stage) const;

 private:
  Errc code_;
  std::string message_;
  std::vector<std::int64_t> witness_;
  std::string stage_;
};

}  // namespace tecol
