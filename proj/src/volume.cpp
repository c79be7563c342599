#include "lspec/volume.hpp"

#include <algorithm>
#include <numeric>

#include "lspec/error.hpp"

namespace lspec {

namespace {

// (1 - q^-2)^-1 = q^2 / (q^2 - 1).
Interval local_factor(const Integer& q, mpfr_prec_t prec) {
  const Integer q2 = q * q;
  return Interval::from_integer(q2, prec) / Interval::from_integer(q2 - 1, prec);
}

Interval shape_factor(u64 p, const std::vector<int>& degrees, mpfr_prec_t prec) {
  Interval out = Interval::point(1, prec);
  for (int f : degrees) out = out * local_factor(boost::multiprecision::pow(Integer(p), f), prec);
  return out;
}

// Residue degrees of the primes above p, when they can be read off f mod p.
std::optional<std::vector<int>> known_shape(const NumberField& K, u64 p) {
  const auto& declared = K.local_shapes();
  if (auto it = declared.find(p); it != declared.end()) return it->second;
  if (!is_p_maximal(K.polynomial(), p)) return std::nullopt;
  std::vector<int> degrees;
  for (const auto& fac : factor_mod_p(K.polynomial(), p).factors) degrees.push_back(fac.factor.degree());
  return degrees;
}

Float atan2_rounded(const Float& y, const Float& x, mpfr_rnd_t rnd) {
  Float out(x.precision());
  mpfr_atan2(out.get(), y.get(), x.get(), rnd);
  return out;
}

}  // namespace

ZetaValue dedekind_zeta_2(const NumberField& field, u64 cutoff, int precision) {
  if (cutoff < 100) throw Error(ErrorKind::InvalidInput, "zeta cutoff must be at least 100");
  if (precision < 32) throw Error(ErrorKind::InvalidInput, "precision must be at least 32 bits");
  const mpfr_prec_t prec = precision;
  const int n = field.degree();
  ZetaValue z{Interval(prec), Float(prec), Float(prec), Float(prec), cutoff, {}};
  Interval product = Interval::point(1, prec);
  for (u64 p : primes_up_to(cutoff)) {
    if (!field.is_excluded(p)) {
      product = product * shape_factor(p, squarefree_factor_degrees(ModPoly::from_int(field.polynomial(), p)), prec);
      continue;
    }
    if (auto shape = known_shape(field, p)) {
      int total = std::accumulate(shape->begin(), shape->end(), 0);
      if (shape->empty() || total > n || std::any_of(shape->begin(), shape->end(), [](int f) { return f < 1; }))
        throw Error(ErrorKind::InvalidInput, "declared shape at " + std::to_string(p) + " is impossible for degree " +
                                                 std::to_string(n));
      product = product * shape_factor(p, *shape, prec);
      continue;
    }
    // Any shape lies between one prime of degree n and n primes of degree 1.
    Interval inert = shape_factor(p, {n}, prec);
    Interval split = shape_factor(p, std::vector<int>(n, 1), prec);
    product = product * Interval::hull(inert, split);
    z.bracketed.push_back(p);
  }
  // Omitted factors: log of the tail is at most n * sum_{m > X} 1/(m^2 - 1) <= n / (X - 1).
  Interval tail = Interval::point(n, prec) / Interval::from_integer(Integer(cutoff - 1), prec);
  z.tail_bound = tail.hi();
  Interval growth = Interval(Float::from_double(1.0, prec), Interval::point(tail.hi()).exp().hi());
  z.enclosure = product * growth;
  z.value = product.mid();
  Float below(prec), above(prec);
  mpfr_sub(below.get(), z.value.get(), z.enclosure.lo().get(), MPFR_RNDU);
  mpfr_sub(above.get(), z.enclosure.hi().get(), z.value.get(), MPFR_RNDU);
  z.epsilon = below < above ? above : below;
  return z;
}

Interval BorelVolume::value() const {
  return field_factor * Interval::from_integer(norm_product, field_factor.precision());
}

BorelVolume borel_volume(const RamificationSet& ram, const ZetaValue& zeta) {
  const auto& K = ram.field();
  const mpfr_prec_t prec = zeta.enclosure.precision();
  BorelVolume v;
  const Interval disc = Interval::from_integer(abs(K.discriminant()), prec);
  const Interval pi = Interval::pi(prec);
  const Interval four_pi2 = Interval::point(4, prec) * pi.sqr();
  Interval denom = Interval::point(1, prec);
  for (int i = 1; i < K.degree(); ++i) denom = denom * four_pi2;
  v.field_factor = disc * disc.sqrt() * zeta.enclosure / denom;
  for (const auto& P : ram.finite()) v.norm_product *= P.norm() - 1;
  for (const auto& o : ram.opaque()) {
    if (!o.norm) throw Error(ErrorKind::UnknownNorm, "opaque prime '" + o.label + "' has no declared norm");
    v.norm_product *= *o.norm - 1;
  }
  return v;
}

Rational volume_ratio(const BorelVolume& a, const BorelVolume& b) {
  const auto same = [](const Float& x, const Float& y) { return mpfr_equal_p(x.get(), y.get()) != 0; };
  if (!same(a.field_factor.lo(), b.field_factor.lo()) || !same(a.field_factor.hi(), b.field_factor.hi()))
    throw Error(ErrorKind::InvalidInput, "volumes have different field factors");
  return Rational(a.norm_product, b.norm_product);
}

GeodesicDatum trace_to_geodesic(const FieldElement& t, int precision) {
  const NumberField& K = t.field();
  if (K.complex_places() != 1)
    throw Error(ErrorKind::InvalidInput, "trace_to_geodesic needs a field with exactly one complex place");
  if (precision < 16) throw Error(ErrorKind::InvalidInput, "precision must be at least 16 bits");
  const FieldElement d = t * t - FieldElement::from_integer(K, 4);
  Float target(precision + 8);
  mpfr_set_ui_2exp(target.get(), 1, -precision, MPFR_RNDN);
  for (int wp = precision + 32; wp <= 2 * kDefaultMaxWorkingPrecision; wp *= 2) {
    const ComplexInterval z = evaluate_at_place(t, Place::complex(0), std::min(wp, kDefaultMaxWorkingPrecision));
    const Interval two = Interval::point(2, wp);
    const Interval segment(Float::from_double(-2.0, wp), Float::from_double(2.0, wp));
    if (z.im.contains_zero() && z.re.intersects(segment)) {
      if (mpfr_zero_p(z.im.lo().get()) && mpfr_zero_p(z.im.hi().get()))
        throw Error(ErrorKind::NotLoxodromic, "trace " + t.to_string() + " is real in [-2, 2] at the complex place");
      continue;
    }
    const ComplexInterval shifted_up = z + ComplexInterval(two, Interval::point(0, wp));
    const ComplexInterval shifted_down = z - ComplexInterval(two, Interval::point(0, wp));
    // s = |lambda| + 1/|lambda|.
    const Interval s = (shifted_up.abs() + shifted_down.abs()) / two;
    Interval half_s = s / two;
    if (!(half_s.lo().sign() > 0) || half_s.lo() < Float::from_double(1.0, wp)) {
      if (!(half_s.hi() > Float::from_double(1.0, wp))) continue;
      half_s = Interval(Float::from_double(1.0, wp), half_s.hi());
    }
    const Interval length = two * half_s.acosh();
    if (!length.positive()) continue;
    const Interval R = (length / two).exp();
    const Interval R_minus = two * (length / two).sinh();  // R - 1/R
    ComplexInterval lambda(R * z.re / s, R * z.im / R_minus);
    // lambda^2 + lambda^-2 = t^2 - 2.
    const ComplexInterval w = z * z - ComplexInterval(two, Interval::point(0, wp));
    const Interval c = w.re / (two * length.cosh());
    const Interval sn = w.im.contains_zero() && mpfr_zero_p(w.im.lo().get()) && mpfr_zero_p(w.im.hi().get())
                            ? Interval::point(0, wp)
                            : w.im / (two * length.sinh());
    // arg over a box not containing 0 is extremal at its corners.
    const bool across_cut = c.hi().sign() < 0 && sn.contains_zero();
    Float lo(wp), hi(wp);
    bool first = true;
    for (const Float* y : {&sn.lo(), &sn.hi()}) {
      for (const Float* x : {&c.lo(), &c.hi()}) {
        Float a_lo = atan2_rounded(*y, *x, MPFR_RNDD), a_hi = atan2_rounded(*y, *x, MPFR_RNDU);
        if (across_cut && y->sign() < 0) {
          const Interval two_pi = two * Interval::pi(wp);
          mpfr_add(a_lo.get(), a_lo.get(), two_pi.lo().get(), MPFR_RNDD);
          mpfr_add(a_hi.get(), a_hi.get(), two_pi.hi().get(), MPFR_RNDU);
        }
        if (first || a_lo < lo) lo = a_lo;
        if (first || hi < a_hi) hi = a_hi;
        first = false;
      }
    }
    Interval holonomy(lo, hi);
    if (target < length.width() || target < holonomy.width()) continue;
    return GeodesicDatum{t, d, z, std::move(lambda), length, std::move(holonomy)};
  }
  throw Error(ErrorKind::PrecisionExhausted, "could not certify the geodesic of trace " + t.to_string());
}

}  // namespace lspec
