#pragma once

#include <map>
#include <vector>

#include "lspec/quaternion.hpp"

namespace lspec {

constexpr u64 kDefaultZetaCutoff = 1'000'000;
constexpr int kDefaultPrecision = 128;

/// zeta_K(2) from the Euler product over p <= cutoff.
struct ZetaValue {
  Interval enclosure;     ///< certified to contain zeta_K(2)
  Float value;            ///< midpoint of the partial product
  Float epsilon;          ///< max distance from value to the enclosure ends
  Float tail_bound;       ///< bound on the log of the omitted factors, n_K/(cutoff-1)
  u64 cutoff = 0;
  /// Excluded primes <= cutoff whose local factor was bracketed between the
  /// inert and totally split shapes (no declared or derivable shape).
  std::vector<u64> bracketed;
};

/// Local shapes at excluded primes come from the field options, else from
/// Dedekind-Kummer when Z[theta] is p-maximal, else a bracket.
/// Throws InvalidInput when cutoff < 100.
ZetaValue dedekind_zeta_2(const NumberField& field, u64 cutoff = kDefaultZetaCutoff, int precision = kDefaultPrecision);

/// Covolume |Delta_K|^{3/2} zeta_K(2) / (4 pi^2)^{n-1} * prod (N(P) - 1),
/// kept as a field factor and an exact integer product.
struct BorelVolume {
  Interval field_factor;
  Integer norm_product = 1;
  Interval value() const;
};

/// Throws UnknownNorm for an opaque prime without a declared norm.
BorelVolume borel_volume(const RamificationSet& ram, const ZetaValue& zeta);
/// Exact a / b. Throws InvalidInput when the field factors differ.
Rational volume_ratio(const BorelVolume& a, const BorelVolume& b);

struct GeodesicDatum {
  FieldElement trace;
  FieldElement radicand;
  ComplexInterval trace_image;
  ComplexInterval lambda;  ///< root of z^2 - t z + 1 with |lambda| > 1
  Interval length;         ///< 2 log |lambda|
  /// arg(lambda^2) in (-pi, pi]; when lambda^2 is near the negative real
  /// axis the interval may reach past pi and is then read modulo 2 pi.
  Interval holonomy;
};

/// Throws InvalidInput unless K has exactly one complex place, NotLoxodromic
/// when the image of t meets [-2, 2], PrecisionExhausted.
GeodesicDatum trace_to_geodesic(const FieldElement& t, int precision = kDefaultPrecision);

}  // namespace lspec
