#include "lspec/interval.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "lspec/error.hpp"

namespace lspec {

Float::Float(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Float::Float(const Float& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Float::Float(Float&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

Float& Float::operator=(const Float& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Float& Float::operator=(Float&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Float::~Float() { mpfr_clear(v_); }

Float Float::from_double(double v, mpfr_prec_t prec) {
  Float f(prec);
  mpfr_set_d(f.v_, v, MPFR_RNDN);
  return f;
}

Float Float::from_integer(const Integer& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Float f(prec);
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    mpfr_set_si(f.v_, static_cast<long>(v), rnd);
  } else {
    mpfr_set_str(f.v_, v.str().c_str(), 10, rnd);
  }
  return f;
}

std::string Float::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// ---------------------------------------------------------------------------

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}
Interval::Interval(Float lo, Float hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

Interval Interval::point(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
  mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
  return r;
}

Interval Interval::point(const Float& v) { return Interval(v, v); }

Interval Interval::from_integer(const Integer& v, mpfr_prec_t prec) {
  return Interval(Float::from_integer(v, prec, MPFR_RNDD), Float::from_integer(v, prec, MPFR_RNDU));
}

Interval Interval::from_rational(const Rational& v, mpfr_prec_t prec) {
  return from_integer(numerator(v), prec) / from_integer(denominator(v), prec);
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::ball(const Float& center, const Float& radius) {
  const mpfr_prec_t prec = center.precision();
  Interval r(prec);
  mpfr_sub(r.lo_.get(), center.get(), radius.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), center.get(), radius.get(), MPFR_RNDU);
  return r;
}

Float Interval::width() const {
  Float w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

Float Interval::mid() const {
  Float m(precision());
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Float Interval::radius() const {
  Float m = mid();
  Float a(precision()), b(precision());
  mpfr_sub(a.get(), hi_.get(), m.get(), MPFR_RNDU);
  mpfr_sub(b.get(), m.get(), lo_.get(), MPFR_RNDU);
  return a < b ? b : a;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

namespace {
mpfr_prec_t joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = joint(a, b);
  Interval r(prec);
  Float t(prec);
  bool first = true;
  for (const Float* x : {&a.lo_, &a.hi_}) {
    for (const Float* y : {&b.lo_, &b.hi_}) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < r.lo_) r.lo_ = t;
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || r.hi_ < t) r.hi_ = t;
      first = false;
    }
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error(ErrorKind::InvalidInput, "interval division by an interval containing zero");
  const mpfr_prec_t prec = joint(a, b);
  Interval r(prec);
  Float t(prec);
  bool first = true;
  for (const Float* x : {&a.lo_, &a.hi_}) {
    for (const Float* y : {&b.lo_, &b.hi_}) {
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < r.lo_) r.lo_ = t;
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || r.hi_ < t) r.hi_ = t;
      first = false;
    }
  }
  return r;
}

Interval Interval::sqr() const {
  Interval a = abs();
  Interval r(precision());
  mpfr_sqr(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
  mpfr_sqr(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (lo_.sign() < 0) throw Error(ErrorKind::InvalidInput, "square root of an interval with negative part");
  Interval r(precision());
  mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(precision());
  mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (lo_.sign() <= 0) throw Error(ErrorKind::InvalidInput, "logarithm of a non-positive interval");
  Interval r(precision());
  mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::acosh() const {
  if (mpfr_cmp_ui(lo_.get(), 1) < 0) throw Error(ErrorKind::InvalidInput, "acosh of an interval below 1");
  Interval r(precision());
  mpfr_acosh(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_acosh(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::cosh() const {
  Interval a = abs();
  Interval r(precision());
  mpfr_cosh(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
  mpfr_cosh(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sinh() const {
  Interval r(precision());
  mpfr_sinh(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_sinh(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  Interval r(precision());
  mpfr_set_zero(r.lo_.get(), 1);
  Float nl(precision());
  mpfr_neg(nl.get(), lo_.get(), MPFR_RNDU);
  r.hi_ = hi_ < nl ? nl : hi_;
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  return Interval(a.lo_ < b.lo_ ? a.lo_ : b.lo_, a.hi_ < b.hi_ ? b.hi_ : a.hi_);
}

// ---------------------------------------------------------------------------

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  Interval denom = b.re.sqr() + b.im.sqr();
  Interval re = a.re * b.re + a.im * b.im;
  Interval im = a.im * b.re - a.re * b.im;
  return {re / denom, im / denom};
}

Interval ComplexInterval::abs() const { return (re.sqr() + im.sqr()).sqrt(); }

}  // namespace lspec
