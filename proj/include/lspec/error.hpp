#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lspec {

enum class ErrorKind {
  InvalidInput,
  NotSquarefree,
  PrecisionExhausted,
  Reducible,
  DiscriminantMismatch,
  DiscriminantRequired,
  ExcludedPrime,
  NotCoprime,
  DenominatorNotCoprime,
  IndeterminateSign,
  PossiblyTrivialExtension,
  CompositumDegenerate,
  OddCardinality,
  DuplicatePlace,
  AlreadyRamified,
  SamePrime,
  UncheckablePlace,
  RamFEmpty,
  UnknownNorm,
  NotLoxodromic,
  NotKleinian,
  RealPlaceUnramified,
  EmbeddingFails,
  NoneBelowHeight,
  NoTuplesFound,
};

std::string_view to_string(ErrorKind kind);

/// True for failures of a mathematical hypothesis on the input (as opposed
/// to malformed input or numerical trouble). The CLI maps these to exit code 2.
bool is_hypothesis_failure(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lspec
