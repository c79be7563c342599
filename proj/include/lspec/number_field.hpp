#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lspec/interval.hpp"
#include "lspec/poly.hpp"
#include "lspec/roots.hpp"

namespace lspec {

/// An archimedean place: a real embedding (index into the ascending list of
/// real roots) or a complex one (index into the roots with positive
/// imaginary part).
struct Place {
  enum class Kind { Real, Complex };
  Kind kind = Kind::Real;
  int index = 0;

  static Place real(int i) { return {Kind::Real, i}; }
  static Place complex(int i) { return {Kind::Complex, i}; }
  friend bool operator==(const Place&, const Place&) = default;
};

/// K = Q[x]/(f) for a monic irreducible f, modelled by its equation order
/// Z[theta]. Cheap to copy: the data is shared and immutable.
class NumberField {
 public:
  struct Options {
    /// Field discriminant, required when it cannot be derived from disc(f).
    std::optional<Integer> discriminant;
    /// Residue degrees of the primes above excluded rational primes, used by
    /// the zeta evaluation. Keyed by rational prime.
    std::map<u64, std::vector<int>> local_shapes;
  };

  /// Validates f (monic, irreducible over Q) and computes the signature and
  /// discriminants. Throws Reducible, DiscriminantMismatch, DiscriminantRequired.
  static NumberField make(const IntPoly& f, Options options = {});
  static NumberField make(const IntPoly& f, std::optional<Integer> discriminant) {
    return make(f, Options{std::move(discriminant), {}});
  }

  const IntPoly& polynomial() const { return d_->f; }
  int degree() const { return d_->f.degree(); }
  /// disc(f), the discriminant of the equation order.
  const Integer& polynomial_discriminant() const { return d_->poly_disc; }
  /// Delta_K.
  const Integer& discriminant() const { return d_->disc; }
  /// True when Delta_K was derived (Dedekind criterion) rather than supplied.
  bool discriminant_derived() const { return d_->disc_derived; }

  int real_places() const { return d_->r1; }
  int complex_places() const { return d_->r2; }

  /// 2 and every prime dividing disc(f).
  bool is_excluded(u64 p) const;
  /// Rational primes dividing 2*disc(f) found by trial division up to 10^7,
  /// plus any unfactored cofactor reported separately.
  std::vector<u64> excluded_primes() const { return d_->excluded_small; }
  const Integer& excluded_cofactor() const { return d_->excluded_cofactor; }

  const std::map<u64, std::vector<int>>& local_shapes() const { return d_->shapes; }

  /// Root boxes at the default 128-bit precision.
  const std::vector<RootBox>& roots() const { return d_->roots; }
  std::vector<RootBox> roots(int precision) const;
  /// Position of the embedding root of a place within roots().
  std::size_t root_index(const Place& place) const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.d_ == b.d_ || a.d_->f == b.d_->f;
  }

 private:
  struct Data {
    IntPoly f;
    Integer poly_disc;
    Integer disc;
    bool disc_derived = false;
    int r1 = 0, r2 = 0;
    std::vector<u64> excluded_small;
    Integer excluded_cofactor = 1;
    std::map<u64, std::vector<int>> shapes;
    std::vector<RootBox> roots;
  };
  std::shared_ptr<const Data> d_;
};

/// Throws Reducible with the rational factor found, or InvalidInput if the
/// search bound is too large to certify.
void certify_irreducible(const IntPoly& f);

/// Dedekind's criterion: true iff Z[x]/(f) is maximal at p (f monic).
bool is_p_maximal(const IntPoly& f, u64 p);

/// Element (numerator(theta)) / denominator of K, with deg numerator < [K:Q]
/// and gcd(denominator, content(numerator)) = 1, denominator > 0.
class FieldElement {
 public:
  FieldElement(NumberField field, IntPoly numerator, Integer denominator = 1);

  /// Polynomial syntax in the generator, e.g. "a^2 + 1" or "3/2*a - 1".
  static FieldElement parse(const NumberField& field, std::string_view text);
  static FieldElement from_integer(const NumberField& field, long v);

  const NumberField& field() const { return field_; }
  const IntPoly& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::string to_string(char var = 'a') const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  NumberField field_;
  IntPoly num_;
  Integer den_;
};

/// Prime ideal (p, g(theta)) of the equation order, for p not excluded.
/// `index` is the position of g among the canonically sorted distinct
/// irreducible factors of f mod p.
struct PrimeIdeal {
  u64 p = 0;
  int index = 0;
  ModPoly factor;

  int inertia_degree() const { return factor.degree(); }
  Integer norm() const;
  /// Serialized form "p:index".
  std::string label() const { return std::to_string(p) + ":" + std::to_string(index); }

  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) { return a.p == b.p && a.index == b.index; }
};

/// Order by (norm, p, index).
bool operator<(const PrimeIdeal& a, const PrimeIdeal& b);

/// Dedekind splitting of p. Throws ExcludedPrime or InvalidInput (p not prime).
std::vector<PrimeIdeal> factor_prime(const NumberField& field, u64 p);
/// The degree-1 primes above p with their canonical indices; equal to the
/// degree-1 prefix of factor_prime(field, p), computed from roots mod p.
std::vector<PrimeIdeal> degree_one_primes(const NumberField& field, u64 p);
/// Resolves "p:index". Throws InvalidInput on a malformed or out-of-range label.
PrimeIdeal prime_from_label(const NumberField& field, std::string_view label);

/// N(P) mod m. Throws NotCoprime when gcd(N(P), m) != 1.
u64 residue_norm_mod(const PrimeIdeal& prime, u64 m);

/// Image of x under the embedding for `place`, with both components of width
/// at most 2^-precision. Real places yield an exact zero imaginary part.
ComplexInterval evaluate_at_place(const FieldElement& x, const Place& place, int precision);

/// The residue field O/P = F_p[x]/(g).
class ResidueField {
 public:
  explicit ResidueField(const PrimeIdeal& prime) : p_(prime.p), g_(prime.factor) {}

  u64 characteristic() const { return p_; }
  const ModPoly& modulus() const { return g_; }
  Integer size() const;

  /// Image of x; throws DenominatorNotCoprime if p divides the denominator.
  ModPoly reduce(const FieldElement& x) const;
  ModPoly mul(const ModPoly& a, const ModPoly& b) const { return mul_mod(a, b, g_); }
  ModPoly pow(const ModPoly& a, const Integer& e) const { return pow_mod(a, e, g_); }

 private:
  u64 p_;
  ModPoly g_;
};

}  // namespace lspec
