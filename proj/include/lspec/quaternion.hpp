#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lspec/splitting.hpp"

namespace lspec {

/// A ramified prime the library cannot compute with (e.g. above 2), kept so
/// the parity bookkeeping stays right. The norm is needed only for volumes.
struct OpaquePrime {
  std::string label;
  std::optional<Integer> norm;

  /// "label" or "label@norm".
  static OpaquePrime parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const OpaquePrime& a, const OpaquePrime& b) { return a.label == b.label; }
};

class RamificationSet {
 public:
  /// Throws InvalidInput (bad real index, prime of another field),
  /// DuplicatePlace, OddCardinality.
  RamificationSet(NumberField field, std::vector<int> real, std::vector<PrimeIdeal> finite,
                  std::vector<OpaquePrime> opaque = {});

  /// Tokens "real:0", "5:0" (prime label) and "opaque:name[@norm]".
  static RamificationSet parse(const NumberField& field, const std::vector<std::string>& tokens);

  const NumberField& field() const { return field_; }
  const std::vector<int>& real() const { return real_; }
  const std::vector<PrimeIdeal>& finite() const { return finite_; }
  const std::vector<OpaquePrime>& opaque() const { return opaque_; }

  std::size_t size() const { return real_.size() + finite_.size() + opaque_.size(); }
  bool empty() const { return size() == 0; }
  /// Computed finite primes plus opaque ones.
  bool finite_empty() const { return finite_.empty() && opaque_.empty(); }
  bool contains(const PrimeIdeal& P) const;
  bool contains_real(int index) const;
  std::vector<std::string> tokens() const;

  friend bool operator==(const RamificationSet& a, const RamificationSet& b);

 private:
  NumberField field_;
  std::vector<int> real_;
  std::vector<PrimeIdeal> finite_;
  std::vector<OpaquePrime> opaque_;
};

/// A quaternion algebra over K, determined up to isomorphism by Ram(B).
class QuaternionAlgebra {
 public:
  explicit QuaternionAlgebra(RamificationSet ram) : ram_(std::move(ram)) {}
  const RamificationSet& ramification() const { return ram_; }
  const NumberField& field() const { return ram_.field(); }
  /// Isomorphism.
  friend bool operator==(const QuaternionAlgebra& a, const QuaternionAlgebra& b) { return a.ram_ == b.ram_; }

 private:
  RamificationSet ram_;
};

struct Verdict {
  bool ok = true;
  std::vector<std::string> reasons;
};

/// One complex place and every real place ramified.
Verdict is_kleinian_admissible(const QuaternionAlgebra& B);
bool is_division(const QuaternionAlgebra& B);

struct PlaceSymbol {
  std::string place;  ///< "real:0" or a prime label
  SplitSymbol symbol;
};

struct EmbeddingCertificate {
  bool admits = true;
  std::vector<PlaceSymbol> places;  ///< real places first, then finite primes in order
};

/// L embeds in B iff no place of Ram(B) splits in L. Throws UncheckablePlace
/// when Ram(B) has opaque primes, plus split-symbol errors.
EmbeddingCertificate admits_embedding(const QuaternionAlgebra& B, const QuadraticExtension& L);

/// Ram(B) with P0 and Pi added. Throws SamePrime, AlreadyRamified.
QuaternionAlgebra extend_ramification(const QuaternionAlgebra& B, const PrimeIdeal& P0, const PrimeIdeal& Pi);

struct CommensurabilityClass {
  NumberField field;
  RamificationSet ram;
};

struct CommensurabilityComparison {
  bool same = false;
  std::optional<std::string> warning;
};

/// Fields are compared by defining polynomial. A warning is attached when the
/// polynomials differ but degree and discriminant agree.
CommensurabilityComparison same_commensurability_class(const CommensurabilityClass& a, const CommensurabilityClass& b);

struct TorsionRow {
  int n = 0;
  std::optional<PrimeIdeal> witness;  ///< a finite P in Ram(B) with N(P) = 1 mod n
};

struct TorsionCheck {
  bool torsion_free = true;
  std::vector<TorsionRow> rows;
  CyclotomicScan scan;
};

/// For each n with [K(zeta_n):K] = 2 (see cyclotomic_quadratic_degrees),
/// look for a computed finite prime of Ram(B) splitting in K(zeta_n).
/// Throws RamFEmpty.
TorsionCheck torsion_free_check(const QuaternionAlgebra& B, int n_max, u64 height = 10'000);
/// Same, against a precomputed scan of the field of B.
TorsionCheck torsion_free_check(const QuaternionAlgebra& B, const CyclotomicScan& scan);

}  // namespace lspec
