#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "lspec/splitting.hpp"

namespace lspec {

enum class OverlapPolicy { Disjoint, Sliding };
std::string_view to_string(OverlapPolicy p);
OverlapPolicy parse_overlap_policy(std::string_view text);

struct SearchSpec {
  NumberField field;
  std::vector<QuadraticExtension> extensions;
  FrobeniusVector target;
  u64 height = 0;
  std::vector<PrimeIdeal> avoid;
  int k = 1;
  u64 window = 0;
  OverlapPolicy policy = OverlapPolicy::Sliding;
  /// Worker threads per sieve segment. Output does not depend on it.
  unsigned threads = 1;
  u64 segment_size = u64{1} << 20;
};

/// Throws InvalidInput when k < 1, height < 3, the target length differs
/// from the number of extensions, or an extension lives over another field.
void validate(const SearchSpec& spec);

/// One degree-1 prime per qualifying rational p <= height: the first of the
/// degree-1 primes above p (canonical index order) that is not in the avoid
/// set, is unramified in every extension and has Frobenius vector equal to
/// the target. Excluded p and p dividing a radicand denominator are skipped.
/// Throws CompositumDegenerate when the compositum check at
/// max(height, 10^4) is not full.
std::vector<PrimeIdeal> enumerate_target_primes(const SearchSpec& spec);

struct TargetScan {
  std::vector<PrimeIdeal> stream;
  u64 eligible = 0;  ///< rational p with an unramified degree-1 prime outside the avoid set
};
/// enumerate_target_primes plus the eligible-prime count used by gap_statistics.
TargetScan scan_target_primes(const SearchSpec& spec);

struct PrimeTuple {
  std::vector<PrimeIdeal> primes;  ///< sorted by norm
  std::vector<FrobeniusVector> witnesses;
  u64 span = 0;
};

/// Windows of k consecutive stream primes with norm span <= window.
std::vector<PrimeTuple> find_bounded_gap_tuples(const SearchSpec& spec, const std::vector<PrimeIdeal>& stream);
std::vector<PrimeTuple> find_bounded_gap_tuples(const SearchSpec& spec);

struct GapStatistics {
  u64 count = 0;
  u64 prime_count = 0;     ///< pi(height)
  u64 eligible = 0;        ///< rational p <= height with an admissible degree-1 prime
  double empirical_density = 0;  ///< count / eligible
  double predicted_density = 0;  ///< 2^-r
  double z_score = 0;            ///< binomial z of count against eligible * 2^-r
  std::map<u64, u64> gap_histogram;
  std::vector<u64> min_span;     ///< min_span[j-1] for j = 1..k; absent when fewer than j primes
  bool low_confidence = false;   ///< fewer than kLowConfidenceCount stream primes
};

constexpr u64 kLowConfidenceCount = 30;

GapStatistics gap_statistics(const SearchSpec& spec, const TargetScan& scan);
GapStatistics gap_statistics(const SearchSpec& spec);

struct FrobeniusCensus {
  std::map<FrobeniusVector, u64> counts;  ///< over unramified degree-1 primes
  u64 ramified = 0;
  u64 total = 0;
};

/// Frobenius vectors of every degree-1 prime of norm <= height (excluded p
/// and p dividing a radicand denominator skipped).
FrobeniusCensus frobenius_census(const NumberField& field, const std::vector<QuadraticExtension>& exts, u64 height,
                                 unsigned threads = 1, u64 segment_size = u64{1} << 20);

}  // namespace lspec
