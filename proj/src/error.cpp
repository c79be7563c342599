#include "lspec/error.hpp"

namespace lspec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::DiscriminantMismatch: return "DiscriminantMismatch";
    case ErrorKind::DiscriminantRequired: return "DiscriminantRequired";
    case ErrorKind::ExcludedPrime: return "ExcludedPrime";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::DenominatorNotCoprime: return "DenominatorNotCoprime";
    case ErrorKind::IndeterminateSign: return "IndeterminateSign";
    case ErrorKind::PossiblyTrivialExtension: return "PossiblyTrivialExtension";
    case ErrorKind::CompositumDegenerate: return "CompositumDegenerate";
    case ErrorKind::OddCardinality: return "OddCardinality";
    case ErrorKind::DuplicatePlace: return "DuplicatePlace";
    case ErrorKind::AlreadyRamified: return "AlreadyRamified";
    case ErrorKind::SamePrime: return "SamePrime";
    case ErrorKind::UncheckablePlace: return "UncheckablePlace";
    case ErrorKind::RamFEmpty: return "RamFEmpty";
    case ErrorKind::UnknownNorm: return "UnknownNorm";
    case ErrorKind::NotLoxodromic: return "NotLoxodromic";
    case ErrorKind::NotKleinian: return "NotKleinian";
    case ErrorKind::RealPlaceUnramified: return "RealPlaceUnramified";
    case ErrorKind::EmbeddingFails: return "EmbeddingFails";
    case ErrorKind::NoneBelowHeight: return "NoneBelowHeight";
    case ErrorKind::NoTuplesFound: return "NoTuplesFound";
  }
  return "Unknown";
}

bool is_hypothesis_failure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Reducible:
    case ErrorKind::PossiblyTrivialExtension:
    case ErrorKind::CompositumDegenerate:
    case ErrorKind::NotLoxodromic:
    case ErrorKind::NotKleinian:
    case ErrorKind::RealPlaceUnramified:
    case ErrorKind::EmbeddingFails:
    case ErrorKind::NoneBelowHeight:
      return true;
    default:
      return false;
  }
}

}  // namespace lspec
