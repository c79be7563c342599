#pragma once

#include <string>

#include <mpfr.h>

#include "lspec/arith.hpp"

namespace lspec {

/// Owning wrapper around an mpfr_t.
class Float {
 public:
  explicit Float(mpfr_prec_t prec = 128);
  Float(const Float& other);
  Float(Float&& other) noexcept;
  Float& operator=(const Float& other);
  Float& operator=(Float&& other) noexcept;
  ~Float();

  static Float from_double(double v, mpfr_prec_t prec);
  static Float from_integer(const Integer& v, mpfr_prec_t prec, mpfr_rnd_t rnd);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Decimal in scientific notation with the given number of significant digits.
  std::string to_string(int digits = 20) const;

  friend bool operator<(const Float& a, const Float& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Float& a, const Float& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Float& a, const Float& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

/// Closed real interval [lo, hi] with outward-rounded arithmetic.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(Float lo, Float hi);

  static Interval point(long v, mpfr_prec_t prec);
  static Interval point(const Float& v);
  static Interval from_integer(const Integer& v, mpfr_prec_t prec);
  static Interval from_rational(const Rational& v, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);
  /// Smallest interval containing [center - radius, center + radius].
  static Interval ball(const Float& center, const Float& radius);

  mpfr_prec_t precision() const { return lo_.precision(); }
  const Float& lo() const { return lo_; }
  const Float& hi() const { return hi_; }

  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

  Float width() const;   ///< rounded up
  Float mid() const;     ///< rounded to nearest
  Float radius() const;  ///< upper bound on max |x - mid()|

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws InvalidInput when b contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);

  Interval sqr() const;
  Interval sqrt() const;   ///< requires lo >= 0
  Interval exp() const;
  Interval log() const;    ///< requires lo > 0
  Interval acosh() const;  ///< requires lo >= 1
  Interval cosh() const;
  Interval sinh() const;
  Interval abs() const;
  static Interval hull(const Interval& a, const Interval& b);

 private:
  Float lo_, hi_;
};

/// Rectangular complex interval.
struct ComplexInterval {
  Interval re, im;

  explicit ComplexInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
  ComplexInterval scaled(const Interval& s) const { return {re * s, im * s}; }

  /// Enclosure of the modulus.
  Interval abs() const;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

}  // namespace lspec
