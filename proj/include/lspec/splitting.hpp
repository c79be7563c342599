#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lspec/number_field.hpp"

namespace lspec {

enum class SplitSymbol { Split, Inert, Ramified };
std::string_view to_string(SplitSymbol s);

/// Norm bound for the prime search that certifies a radicand is not a square.
constexpr u64 kNonSquareSearchBound = 10'000;

/// L = K(sqrt(d)) for a non-square d.
class QuadraticExtension {
 public:
  /// Throws InvalidInput for d = 0 and PossiblyTrivialExtension when no prime
  /// of norm <= 10^4 is inert (d is then almost certainly a square).
  static QuadraticExtension from_radicand(FieldElement d, std::string label = {});
  /// Radicand t^2 - 4, the discriminant of z^2 - t z + 1.
  static QuadraticExtension from_trace(FieldElement t, std::string label = {});

  const FieldElement& radicand() const { return d_; }
  const std::optional<FieldElement>& trace() const { return trace_; }
  const std::string& label() const { return label_; }
  const NumberField& field() const { return d_.field(); }
  /// The inert prime found while certifying non-squareness.
  const PrimeIdeal& nonsquare_witness() const { return witness_; }

 private:
  QuadraticExtension(FieldElement d, std::optional<FieldElement> t, std::string label);
  FieldElement d_;
  std::optional<FieldElement> trace_;
  std::string label_;
  PrimeIdeal witness_;
};

/// Split/Inert/Ramified behaviour of P in L, by Euler's criterion in O/P.
/// Throws ExcludedPrime, DenominatorNotCoprime.
SplitSymbol split_symbol(const PrimeIdeal& prime, const QuadraticExtension& ext);

/// Behaviour of a real place: Split if d > 0 there, Inert if d < 0.
/// Throws IndeterminateSign, InvalidInput for a non-real place.
SplitSymbol split_symbol_real(const Place& place, const QuadraticExtension& ext);

/// Inert/split bits (1 = inert) aligned with an ordered list of extensions.
class FrobeniusVector {
 public:
  FrobeniusVector() = default;
  explicit FrobeniusVector(std::vector<std::uint8_t> bits);
  static FrobeniusVector all_ones(std::size_t r) { return FrobeniusVector(std::vector<std::uint8_t>(r, 1)); }
  static FrobeniusVector from_mask(std::uint64_t mask, std::size_t r);
  /// "1,0,1"
  static FrobeniusVector parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::uint64_t mask() const;
  std::string to_string() const;

  friend bool operator==(const FrobeniusVector&, const FrobeniusVector&) = default;
  friend auto operator<=>(const FrobeniusVector&, const FrobeniusVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Coordinates at which the prime ramifies (so no Frobenius vector exists).
struct RamifiedReport {
  std::vector<std::size_t> coordinates;
};

using FrobeniusResult = std::variant<FrobeniusVector, RamifiedReport>;

FrobeniusResult frobenius_vector(const PrimeIdeal& prime, const std::vector<QuadraticExtension>& exts);

struct CompositumCheck {
  std::size_t r = 0;
  std::size_t rank = 0;                   ///< log2 of the observed subgroup order
  std::vector<FrobeniusVector> basis;     ///< echelon basis of the observed subgroup
  std::vector<FrobeniusVector> elements;  ///< listed when rank <= 12, sorted
  bool full = false;
  u64 primes_sampled = 0;
};

/// Subgroup of (Z/2)^r spanned by the Frobenius vectors of the unramified,
/// non-excluded primes of norm <= height.
CompositumCheck compositum_degree_check(const std::vector<QuadraticExtension>& exts, u64 height);

/// For each n in 3..n_max with n != 2 mod 4: the subgroup of (Z/n)^*
/// generated by the norms (mod n) of the prime ideals of norm <= height
/// coprime to n. Non-excluded primes only.
std::map<int, std::vector<u64>> cyclotomic_norm_subgroups(const NumberField& field, int n_max, u64 height);

struct CyclotomicScan {
  std::vector<int> degrees;  ///< n with |H_n| = 2, i.e. [K(zeta_n):K] = 2
  u64 height = 0;            ///< sample height of the reported list
  bool stable = false;       ///< the list did not change when the height doubled
};

/// The n in 3..n_max (n != 2 mod 4) with [K(zeta_n):K] = 2, estimated from
/// norms up to `height`. One-sided: may over-report when the height is too
/// small. The height is doubled until two consecutive lists agree (at most
/// four doublings).
CyclotomicScan cyclotomic_quadratic_degrees(const NumberField& field, int n_max, u64 height = 10'000);

}  // namespace lspec
