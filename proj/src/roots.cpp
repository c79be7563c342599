#include "lspec/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lspec/error.hpp"

namespace lspec {

// ---------------------------------------------------------------------------
// Exact real-root counting

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& f) {
  RatPoly r;
  for (const auto& c : f.coeffs()) r.emplace_back(c);
  return r;
}

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

RatPoly rat_remainder(RatPoly a, const RatPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    Rational t = a.back() / b.back();
    for (int j = 0; j <= db; ++j) a[shift + j] -= t * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = rat_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int sign_variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

bool is_squarefree(const IntPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() < 1) return true;
  RatPoly g = rat_gcd(to_rat(f), rat_derivative(to_rat(f)));
  return g.size() <= 1;
}

std::size_t count_real_roots(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "zero polynomial");
  if (f.degree() < 1) return 0;
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, f.to_string() + " has a repeated factor");
  std::vector<RatPoly> chain{to_rat(f), rat_derivative(to_rat(f))};
  while (chain.back().size() > 1) {
    RatPoly r = rat_remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_pos, at_neg;
  for (const auto& s : chain) {
    const int deg = static_cast<int>(s.size()) - 1;
    const int lead = sign_of(s.back());
    at_pos.push_back(lead);
    at_neg.push_back(deg % 2 == 0 ? lead : -lead);
  }
  return static_cast<std::size_t>(sign_variations(at_neg) - sign_variations(at_pos));
}

// ---------------------------------------------------------------------------
// Interval evaluation

Interval evaluate(const IntPoly& f, const Interval& x) {
  const mpfr_prec_t prec = x.precision();
  if (f.is_zero()) return Interval::point(0, prec);
  Interval acc = Interval::from_integer(f.leading(), prec);
  for (int i = f.degree() - 1; i >= 0; --i) acc = acc * x + Interval::from_integer(f.coeffs()[i], prec);
  return acc;
}

ComplexInterval evaluate(const IntPoly& f, const ComplexInterval& z) {
  const mpfr_prec_t prec = z.re.precision();
  const Interval zero = Interval::point(0, prec);
  if (f.is_zero()) return {zero, zero};
  ComplexInterval acc{Interval::from_integer(f.leading(), prec), zero};
  for (int i = f.degree() - 1; i >= 0; --i) {
    acc = acc * z;
    acc.re = acc.re + Interval::from_integer(f.coeffs()[i], prec);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Aberth iteration in round-to-nearest multiprecision

namespace {

struct Complex {
  Float re, im;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
};

Complex cadd(const Complex& a, const Complex& b) {
  Complex r(a.re.precision());
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Complex csub(const Complex& a, const Complex& b) {
  Complex r(a.re.precision());
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Complex cmul(const Complex& a, const Complex& b) {
  const mpfr_prec_t prec = a.re.precision();
  Complex r(prec);
  Float t(prec);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

Float cabs2(const Complex& a) {
  Float r(a.re.precision()), t(a.re.precision());
  mpfr_sqr(r.get(), a.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), a.im.get(), MPFR_RNDN);
  mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDN);
  return r;
}

Complex cdiv(const Complex& a, const Complex& b) {
  const mpfr_prec_t prec = a.re.precision();
  Float d = cabs2(b);
  Complex conj_b = b;
  mpfr_neg(conj_b.im.get(), conj_b.im.get(), MPFR_RNDN);
  Complex r = cmul(a, conj_b);
  mpfr_div(r.re.get(), r.re.get(), d.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), d.get(), MPFR_RNDN);
  (void)prec;
  return r;
}

Complex from_parts(double re, double im, mpfr_prec_t prec) {
  Complex c(prec);
  mpfr_set_d(c.re.get(), re, MPFR_RNDN);
  mpfr_set_d(c.im.get(), im, MPFR_RNDN);
  return c;
}

bool finite(const Complex& c) { return mpfr_number_p(c.re.get()) && mpfr_number_p(c.im.get()); }

void horner(const std::vector<Float>& coeffs, const Complex& z, Complex& value, Complex& deriv) {
  const mpfr_prec_t prec = z.re.precision();
  value = Complex(prec);
  deriv = Complex(prec);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    deriv = cadd(cmul(deriv, z), value);
    value = cmul(value, z);
    mpfr_add(value.re.get(), value.re.get(), it->get(), MPFR_RNDN);
  }
}

std::vector<Complex> initial_guesses(const IntPoly& f, mpfr_prec_t prec) {
  const int n = f.degree();
  double a0 = std::abs(f.coeffs()[0].convert_to<double>());
  double an = std::abs(f.leading().convert_to<double>());
  double radius = a0 > 0 ? std::pow(a0 / an, 1.0 / n) : 1.0;
  if (!std::isfinite(radius) || radius <= 0) radius = 1.0;
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * M_PI * k / n + 0.7;
    z.push_back(from_parts(radius * std::cos(angle), radius * std::sin(angle), prec));
  }
  return z;
}

void aberth(const IntPoly& f, std::vector<Complex>& z, mpfr_prec_t prec) {
  const int n = f.degree();
  std::vector<Float> coeffs;
  for (const auto& c : f.coeffs()) coeffs.push_back(Float::from_integer(c, prec, MPFR_RNDN));
  for (auto& zi : z) {
    Complex copy(prec);
    mpfr_set(copy.re.get(), zi.re.get(), MPFR_RNDN);
    mpfr_set(copy.im.get(), zi.im.get(), MPFR_RNDN);
    zi = std::move(copy);
  }
  Float tol(prec);
  mpfr_set_ui_2exp(tol.get(), 1, -static_cast<long>(prec) + 6, MPFR_RNDN);
  Complex value(prec), deriv(prec);
  const Complex one = from_parts(1.0, 0.0, prec);
  const int max_iterations = 200 + 40 * n + static_cast<int>(prec);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool converged = true;
    for (int k = 0; k < n; ++k) {
      horner(coeffs, z[k], value, deriv);
      if (mpfr_zero_p(value.re.get()) && mpfr_zero_p(value.im.get())) continue;
      Complex ratio = cdiv(value, deriv);
      Complex sum(prec);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        sum = cadd(sum, cdiv(one, csub(z[k], z[j])));
      }
      Complex w = cdiv(ratio, csub(one, cmul(ratio, sum)));
      if (!finite(w)) {
        // Nudge a stalled approximation off the singular point.
        z[k] = cadd(z[k], from_parts(1e-3 * (k + 1), 1e-3, prec));
        converged = false;
        continue;
      }
      z[k] = csub(z[k], w);
      Float scale = cabs2(z[k]);
      if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
      Float step = cabs2(w);
      mpfr_div(step.get(), step.get(), scale.get(), MPFR_RNDN);
      mpfr_sqrt(step.get(), step.get(), MPFR_RNDN);
      if (tol < step) converged = false;
    }
    if (converged) return;
  }
}

/// Snaps near-real approximations onto the real axis and makes non-real
/// ones come in exact conjugate pairs. Returns false if pairing fails.
bool symmetrize(std::vector<Complex>& z, mpfr_prec_t prec, std::vector<bool>& is_real) {
  const std::size_t n = z.size();
  is_real.assign(n, false);
  Float threshold(prec);
  mpfr_set_ui_2exp(threshold.get(), 1, -static_cast<long>(prec) / 2, MPFR_RNDN);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    Float scale = cabs2(z[i]);
    mpfr_sqrt(scale.get(), scale.get(), MPFR_RNDN);
    if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
    Float bound(prec);
    mpfr_mul(bound.get(), threshold.get(), scale.get(), MPFR_RNDN);
    if (mpfr_cmpabs(z[i].im.get(), bound.get()) <= 0) {
      mpfr_set_zero(z[i].im.get(), 1);
      is_real[i] = true;
      used[i] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i] || z[i].im.sign() < 0) continue;
    std::size_t best = n;
    Float best_dist(prec);
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || j == i || z[j].im.sign() > 0) continue;
      Complex conj = z[i];
      mpfr_neg(conj.im.get(), conj.im.get(), MPFR_RNDN);
      Float d = cabs2(csub(conj, z[j]));
      if (best == n || d < best_dist) {
        best = j;
        best_dist = d;
      }
    }
    if (best == n) return false;
    z[best] = z[i];
    mpfr_neg(z[best].im.get(), z[best].im.get(), MPFR_RNDN);
    used[i] = used[best] = true;
  }
  return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

struct Certified {
  bool ok = false;
  std::vector<RootBox> boxes;
};

Certified certify(const IntPoly& f, const std::vector<Complex>& z, const std::vector<bool>& is_real,
                  int precision, mpfr_prec_t wp) {
  Certified out;
  const int n = f.degree();
  std::vector<ComplexInterval> centers;
  for (const auto& zi : z) centers.emplace_back(Interval::point(zi.re), Interval::point(zi.im));
  const Interval lead = Interval::from_integer(f.leading(), wp);
  std::vector<Float> radii;
  for (int i = 0; i < n; ++i) {
    ComplexInterval denom{lead, Interval::point(0, wp)};
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      denom = denom * (centers[i] - centers[j]);
    }
    if (denom.contains_zero()) return out;
    ComplexInterval w = evaluate(f, centers[i]) / denom;
    Interval r = w.abs() * Interval::point(n, wp);
    radii.push_back(r.hi());
  }
  Float limit(wp);
  mpfr_set_ui_2exp(limit.get(), 1, -precision - 1, MPFR_RNDN);  // radius bound = width / 2
  for (int i = 0; i < n; ++i) {
    if (limit < radii[i]) return out;
    if (!is_real[i]) {
      Float im_abs(wp);
      mpfr_abs(im_abs.get(), z[i].im.get(), MPFR_RNDN);
      if (im_abs <= radii[i]) return out;
    }
    for (int j = i + 1; j < n; ++j) {
      Interval dist = (centers[i] - centers[j]).abs();
      Float sum(wp);
      mpfr_add(sum.get(), radii[i].get(), radii[j].get(), MPFR_RNDU);
      if (dist.lo() <= sum) return out;
    }
  }
  for (int i = 0; i < n; ++i) {
    RootBox b;
    b.real = is_real[i];
    b.box.re = Interval::ball(z[i].re, radii[i]);
    b.box.im = is_real[i] ? Interval::point(0, wp) : Interval::ball(z[i].im, radii[i]);
    out.boxes.push_back(std::move(b));
  }
  out.ok = true;
  return out;
}

void canonical_order(std::vector<RootBox>& boxes) {
  std::vector<RootBox> real, upper;
  for (auto& b : boxes) {
    if (b.real)
      real.push_back(std::move(b));
    else if (b.box.im.positive())
      upper.push_back(std::move(b));
  }
  std::sort(real.begin(), real.end(), [](const RootBox& a, const RootBox& b) { return a.box.re.mid() < b.box.re.mid(); });
  std::sort(upper.begin(), upper.end(), [](const RootBox& a, const RootBox& b) {
    if (a.box.re.mid() < b.box.re.mid()) return true;
    if (b.box.re.mid() < a.box.re.mid()) return false;
    return a.box.im.mid() < b.box.im.mid();
  });
  std::vector<RootBox> out = std::move(real);
  for (auto& b : upper) {
    RootBox conj = b;
    conj.box.im = -b.box.im;
    out.push_back(std::move(b));
    out.push_back(std::move(conj));
  }
  boxes = std::move(out);
}

}  // namespace

std::vector<RootBox> isolate_complex_roots(const IntPoly& f, int precision, int max_working_precision) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "zero polynomial");
  if (precision < 1) throw Error(ErrorKind::InvalidInput, "precision must be positive");
  if (f.degree() < 1) return {};
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, f.to_string() + " has a repeated factor");
  mpfr_prec_t wp = std::min<mpfr_prec_t>(std::max(64, precision + 32), max_working_precision);
  if (precision + 8 > max_working_precision)
    throw Error(ErrorKind::PrecisionExhausted, "requested precision exceeds the working-precision cap");
  std::vector<Complex> z = initial_guesses(f, wp);
  while (true) {
    aberth(f, z, wp);
    std::vector<bool> is_real;
    std::vector<Complex> snapped = z;
    if (symmetrize(snapped, wp, is_real)) {
      Certified c = certify(f, snapped, is_real, precision, wp);
      if (c.ok) {
        canonical_order(c.boxes);
        return c.boxes;
      }
    }
    if (wp >= max_working_precision)
      throw Error(ErrorKind::PrecisionExhausted,
                  "root isolation of " + f.to_string() + " failed at " + std::to_string(wp) + " bits");
    wp = std::min<mpfr_prec_t>(2 * wp, max_working_precision);
  }
}

}  // namespace lspec
