#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lspec/arith.hpp"

namespace lspec {

/// Dense polynomial over the integers, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  /// Accepts "x^3 - x + 1" or "[1, -1, 0, 1]" (lowest degree first).
  static IntPoly parse(std::string_view text);
  static IntPoly monomial(const Integer& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int i) const;
  const Integer& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPoly derivative() const;
  Integer content() const;
  IntPoly primitive_part() const;

  std::string to_string(char var = 'x') const;
  std::string to_list_string() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Parses either accepted syntax into rational coefficients (lowest degree
/// first). Coefficients may be written as p/q. Any single letter may serve as
/// the variable, provided it is used consistently.
std::vector<Rational> parse_rational_coeffs(std::string_view text);

/// Exact quotient a / b over the integers, if it exists.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

Integer resultant(const IntPoly& a, const IntPoly& b);
Integer discriminant(const IntPoly& f);

/// Polynomial over the prime field F_p, coefficients in [0, p), lowest first.
class ModPoly {
 public:
  explicit ModPoly(u64 p = 2) : p_(p) {}
  ModPoly(u64 p, std::vector<u64> coeffs);

  static ModPoly from_int(const IntPoly& f, u64 p);
  static ModPoly constant(u64 p, u64 c);
  static ModPoly x(u64 p);

  u64 modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  u64 leading() const { return c_.empty() ? 0 : c_.back(); }

  ModPoly monic() const;
  ModPoly derivative() const;
  u64 eval(u64 x) const;
  std::string to_string(char var = 'x') const;

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  ModPoly scaled(u64 s) const;
  friend bool operator==(const ModPoly& a, const ModPoly& b) = default;

  /// Canonical order: by degree, then by coefficient sequence (lowest first).
  friend bool canonical_less(const ModPoly& a, const ModPoly& b);

 private:
  void trim();
  u64 p_;
  std::vector<u64> c_;
};

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
ModPoly operator/(const ModPoly& a, const ModPoly& b);
/// Monic gcd (zero if both inputs are zero).
ModPoly gcd(const ModPoly& a, const ModPoly& b);
ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& m);
ModPoly pow_mod(const ModPoly& base, const Integer& exp, const ModPoly& m);
ModPoly pow_mod(const ModPoly& base, u64 exp, const ModPoly& m);

struct ModFactor {
  ModPoly factor;
  int multiplicity = 1;
};

struct ModFactorization {
  u64 unit = 1;  ///< leading coefficient of f mod p
  std::vector<ModFactor> factors;  ///< monic irreducible, canonically sorted
};

/// Complete factorization of f mod p into monic irreducibles.
/// Throws InvalidInput if p is not prime or f vanishes mod p.
ModFactorization factor_mod_p(const IntPoly& f, u64 p);
ModFactorization factor_mod_p(const ModPoly& f);

/// Rabin's irreducibility test. Requires f monic and nonzero.
bool is_irreducible_mod_p(const ModPoly& f);

/// Distinct roots of f in F_p, ascending.
std::vector<u64> roots_mod_p(const ModPoly& f);

/// Degrees of the irreducible factors of a squarefree f (distinct-degree
/// splitting only), sorted ascending.
std::vector<int> squarefree_factor_degrees(const ModPoly& f);

}  // namespace lspec
