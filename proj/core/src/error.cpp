#include "tecol/error.hpp"

namespace tecol {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::UnsupportedKind: return "UnsupportedKind";
    case Errc::NotHomomorphism: return "NotHomomorphism";
    case Errc::NotBijection: return "NotBijection";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::SymmetryViolation: return "SymmetryViolation";
    case Errc::IdentityGenerator: return "IdentityGenerator";
    case Errc::DuplicateGenerator: return "DuplicateGenerator";
    case Errc::TwistNotClosed: return "TwistNotClosed";
    case Errc::ModelTooSmall: return "ModelTooSmall";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::PartialColoring: return "PartialColoring";
    case Errc::TooLarge: return "TooLarge";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::InvalidModel: return "InvalidModel";
    case Errc::TooFewMarkers: return "TooFewMarkers";
    case Errc::RunTooShort: return "RunTooShort";
    case Errc::NoAnchor: return "NoAnchor";
    case Errc::ParallelEdges: return "ParallelEdges";
    case Errc::SlotMismatch: return "SlotMismatch";
    case Errc::NoFreeColor: return "NoFreeColor";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what, std::vector<std::int64_t> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      message_(what),
      witness_(std::move(witness)) {}

Error Error::with_stage(std::string stage) const {
  Error e(code_, "[" + stage + "] " + message_, witness_);
  e.stage_ = std::move(stage);
  return e;
}

}  // namespace tecol
