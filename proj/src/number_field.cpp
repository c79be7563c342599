#include "lspec/number_field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lspec/error.hpp"

namespace lspec {

namespace {

constexpr u64 kTrialDivisionLimit = 10'000'000;

struct PartialFactorization {
  std::vector<std::pair<u64, int>> small;  // (prime, exponent)
  Integer cofactor = 1;                    // product of primes above the trial limit
};

PartialFactorization trial_factor(Integer n) {
  PartialFactorization out;
  n = abs(n);
  for (u64 d = 2; d <= kTrialDivisionLimit && Integer(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.small.emplace_back(d, e);
  }
  if (n > 1) {
    if (n <= Integer(kTrialDivisionLimit) * kTrialDivisionLimit) {
      out.small.emplace_back(static_cast<u64>(n), 1);
    } else {
      out.cofactor = n;
    }
  }
  return out;
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

/// Primes whose square divides n, or nullopt when an unfactored cofactor
/// could hide one.
std::optional<std::vector<u64>> square_prime_divisors(const Integer& n) {
  PartialFactorization pf = trial_factor(n);
  std::vector<u64> out;
  for (auto [p, e] : pf.small)
    if (e >= 2) out.push_back(p);
  if (pf.cofactor > 1) {
    const Integer bound = Integer(kTrialDivisionLimit) * kTrialDivisionLimit * kTrialDivisionLimit;
    if (is_perfect_square(pf.cofactor)) {
      Integer q = boost::multiprecision::sqrt(pf.cofactor);
      if (q > Integer(std::numeric_limits<u64>::max()) || !is_prime(static_cast<u64>(q))) return std::nullopt;
      out.push_back(static_cast<u64>(q));
    } else if (pf.cofactor >= bound) {
      return std::nullopt;
    }
  }
  return out;
}

IntPoly lift(const ModPoly& g) {
  std::vector<Integer> v;
  for (u64 c : g.coeffs()) v.emplace_back(c);
  return IntPoly(std::move(v));
}

IntPoly symmetric_lift(const ModPoly& g) {
  const u64 p = g.modulus();
  std::vector<Integer> v;
  for (u64 c : g.coeffs()) v.push_back(c > p / 2 ? Integer(c) - p : Integer(c));
  return IntPoly(std::move(v));
}

IntPoly reduce_mod_monic(const IntPoly& a, const IntPoly& f) {
  if (a.degree() < f.degree()) return a;
  std::vector<Integer> rem = a.coeffs();
  const int n = f.degree();
  for (int i = a.degree(); i >= n; --i) {
    Integer t = rem[i];
    if (t == 0) continue;
    for (int j = 0; j <= n; ++j) rem[i - n + j] -= t * f.coeffs()[j];
  }
  rem.resize(n);
  return IntPoly(std::move(rem));
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_p_maximal(const IntPoly& f, u64 p) {
  ModFactorization fac = factor_mod_p(f, p);
  IntPoly g{1}, h{1};
  ModPoly gbar = ModPoly::constant(p, 1), hbar = ModPoly::constant(p, 1);
  for (const auto& [q, e] : fac.factors) {
    g = g * lift(q);
    gbar = gbar * q;
    for (int k = 1; k < e; ++k) {
      h = h * lift(q);
      hbar = hbar * q;
    }
  }
  IntPoly diff = f - g * h;
  std::vector<Integer> F;
  for (const auto& c : diff.coeffs()) {
    if (c % p != 0) throw Error(ErrorKind::InvalidInput, "Dedekind criterion: factorization does not lift");
    F.push_back(c / p);
  }
  ModPoly Fbar = ModPoly::from_int(IntPoly(std::move(F)), p);
  return gcd(gcd(Fbar, gbar), hbar).is_one();
}

void certify_irreducible(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorKind::InvalidInput, "constant polynomial");
  if (n == 1) return;
  const Integer disc = discriminant(f);
  if (disc == 0) throw Error(ErrorKind::Reducible, f.to_string() + " has a repeated factor");

  // Degree-pattern sieve: the degrees of a rational factor must be a subset
  // sum of the factor degrees modulo every good prime.
  std::vector<bool> possible(n + 1, true);
  int good = 0;
  for (u64 p = 3; good < 40; p = next_prime(p + 1)) {
    if (reduce(disc, p) == 0 || reduce(f.leading(), p) == 0) continue;
    ++good;
    std::vector<bool> sums(n + 1, false);
    sums[0] = true;
    for (int d : squarefree_factor_degrees(ModPoly::from_int(f, p))) {
      for (int s = n; s >= d; --s)
        if (sums[s - d]) sums[s] = true;
    }
    bool only_trivial = true;
    for (int d = 1; d < n; ++d) {
      possible[d] = possible[d] && sums[d];
      only_trivial &= !possible[d];
    }
    if (only_trivial) return;
  }

  // Zassenhaus with one prime above twice the Mignotte bound.
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer bound = (Integer(1) << n) * (boost::multiprecision::sqrt(norm2) + 1) * abs(f.leading());
  if (2 * bound >= (Integer(1) << 61))
    throw Error(ErrorKind::InvalidInput, "coefficients too large to certify irreducibility of " + f.to_string());
  u64 big = next_prime(static_cast<u64>(2 * bound + 1));
  while (reduce(disc, big) == 0 || reduce(f.leading(), big) == 0) big = next_prime(big + 1);
  ModFactorization fac = factor_mod_p(f, big);
  const auto& parts = fac.factors;
  const int r = static_cast<int>(parts.size());
  const ModPoly lead = ModPoly::constant(big, reduce(f.leading(), big));
  for (int size = 1; size <= r / 2; ++size) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      int deg = 0;
      ModPoly prod = lead;
      for (int i : pick) {
        prod = prod * parts[i].factor;
        deg += parts[i].factor.degree();
      }
      if (deg < n && possible[deg]) {
        IntPoly cand = symmetric_lift(prod).primitive_part();
        if (cand.degree() > 0 && divide_exact(f, cand))
          throw Error(ErrorKind::Reducible, f.to_string() + " has the factor " + cand.to_string());
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == r - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

NumberField NumberField::make(const IntPoly& f, Options options) {
  if (f.degree() < 1 || !f.is_monic())
    throw Error(ErrorKind::InvalidInput, "defining polynomial must be monic of positive degree: " + f.to_string());
  certify_irreducible(f);
  auto data = std::make_shared<Data>();
  data->f = f;
  data->poly_disc = lspec::discriminant(f);
  data->r1 = static_cast<int>(count_real_roots(f));
  data->r2 = (f.degree() - data->r1) / 2;
  data->roots = isolate_complex_roots(f, 128);

  auto squares = square_prime_divisors(data->poly_disc);
  std::vector<u64> non_maximal;
  if (squares) {
    for (u64 p : *squares)
      if (!is_p_maximal(f, p)) non_maximal.push_back(p);
  }
  if (options.discriminant) {
    const Integer& d = *options.discriminant;
    if (d == 0 || data->poly_disc % d != 0 || !is_perfect_square(Integer(data->poly_disc / d)))
      throw Error(ErrorKind::DiscriminantMismatch,
                  "disc(f) = " + data->poly_disc.str() + " is not " + d.str() + " times a square");
    Integer index = boost::multiprecision::sqrt(Integer(data->poly_disc / d));
    if (squares) {
      for (u64 p : *squares) {
        bool maximal = std::find(non_maximal.begin(), non_maximal.end(), p) == non_maximal.end();
        if (maximal && index % p == 0)
          throw Error(ErrorKind::DiscriminantMismatch,
                      "Z[theta] is maximal at " + std::to_string(p) + " but the supplied discriminant implies otherwise");
        if (!maximal && index % p != 0)
          throw Error(ErrorKind::DiscriminantMismatch,
                      "Z[theta] is not maximal at " + std::to_string(p) + " but the supplied discriminant implies it is");
      }
    }
    data->disc = d;
  } else {
    if (!squares)
      throw Error(ErrorKind::DiscriminantRequired,
                  "cannot factor disc(f) = " + data->poly_disc.str() + "; supply the field discriminant");
    if (!non_maximal.empty()) {
      std::ostringstream os;
      for (u64 p : non_maximal) os << " " << p;
      throw Error(ErrorKind::DiscriminantRequired,
                  "Z[theta] is not maximal at" + os.str() + "; supply the field discriminant");
    }
    data->disc = data->poly_disc;
    data->disc_derived = true;
  }

  PartialFactorization pf = trial_factor(2 * data->poly_disc);
  for (auto [p, e] : pf.small) data->excluded_small.push_back(p);
  data->excluded_cofactor = pf.cofactor;

  for (auto& [p, shape] : options.local_shapes) {
    if (!(p == 2 || data->poly_disc % p == 0))
      throw Error(ErrorKind::InvalidInput, "local shape declared at non-excluded prime " + std::to_string(p));
    int total = 0;
    for (int d : shape) {
      if (d < 1) throw Error(ErrorKind::InvalidInput, "residue degrees must be positive");
      total += d;
    }
    if (total > f.degree() || shape.empty())
      throw Error(ErrorKind::InvalidInput, "local shape at " + std::to_string(p) + " is inconsistent with the degree");
  }
  data->shapes = std::move(options.local_shapes);

  NumberField K;
  K.d_ = std::move(data);
  return K;
}

bool NumberField::is_excluded(u64 p) const { return p == 2 || reduce(d_->poly_disc, p) == 0; }

std::vector<RootBox> NumberField::roots(int precision) const {
  if (precision <= 128) return d_->roots;
  return isolate_complex_roots(d_->f, precision);
}

std::size_t NumberField::root_index(const Place& place) const {
  if (place.kind == Place::Kind::Real) {
    if (place.index < 0 || place.index >= d_->r1)
      throw Error(ErrorKind::InvalidInput, "no real place " + std::to_string(place.index));
    return static_cast<std::size_t>(place.index);
  }
  if (place.index < 0 || place.index >= d_->r2)
    throw Error(ErrorKind::InvalidInput, "no complex place " + std::to_string(place.index));
  return static_cast<std::size_t>(d_->r1 + 2 * place.index);
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(NumberField field, IntPoly numerator, Integer denominator)
    : field_(std::move(field)), num_(reduce_mod_monic(numerator, field_.polynomial())), den_(std::move(denominator)) {
  if (den_ == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = IntPoly{} - num_;
  }
  Integer g = boost::multiprecision::gcd(num_.content(), den_);
  if (num_.is_zero()) g = den_;
  if (g > 1) {
    std::vector<Integer> v = num_.coeffs();
    for (auto& c : v) c /= g;
    num_ = IntPoly(std::move(v));
    den_ /= g;
  }
}

FieldElement FieldElement::parse(const NumberField& field, std::string_view text) {
  auto rc = parse_rational_coeffs(text);
  Integer den = 1;
  for (const auto& c : rc) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  std::vector<Integer> num;
  for (const auto& c : rc)
    num.push_back(boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c)));
  return FieldElement(field, IntPoly(std::move(num)), den);
}

FieldElement FieldElement::from_integer(const NumberField& field, long v) { return FieldElement(field, IntPoly{v}); }

std::string FieldElement::to_string(char var) const {
  std::string s = num_.to_string(var);
  if (den_ == 1) return s;
  return "(" + s + ")/" + den_.str();
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field_, a.num_ * IntPoly({Integer(b.den_)}) + b.num_ * IntPoly({Integer(a.den_)}),
                      a.den_ * b.den_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field_, a.num_ * IntPoly({Integer(b.den_)}) - b.num_ * IntPoly({Integer(a.den_)}),
                      a.den_ * b.den_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field_, a.num_ * b.num_, a.den_ * b.den_);
}

// ---------------------------------------------------------------------------

Integer PrimeIdeal::norm() const { return boost::multiprecision::pow(Integer(p), inertia_degree()); }

bool operator<(const PrimeIdeal& a, const PrimeIdeal& b) {
  if (a.inertia_degree() == b.inertia_degree()) {
    if (a.p != b.p) return a.p < b.p;
    return a.index < b.index;
  }
  Integer na = a.norm(), nb = b.norm();
  if (na != nb) return na < nb;
  if (a.p != b.p) return a.p < b.p;
  return a.index < b.index;
}

std::vector<PrimeIdeal> factor_prime(const NumberField& field, u64 p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  if (field.is_excluded(p)) throw Error(ErrorKind::ExcludedPrime, std::to_string(p) + " is excluded for this field");
  ModFactorization fac = factor_mod_p(field.polynomial(), p);
  std::vector<PrimeIdeal> out;
  int index = 0;
  for (auto& f : fac.factors) out.push_back({p, index++, std::move(f.factor)});
  return out;
}

std::vector<PrimeIdeal> degree_one_primes(const NumberField& field, u64 p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  if (field.is_excluded(p)) throw Error(ErrorKind::ExcludedPrime, std::to_string(p) + " is excluded for this field");
  std::vector<u64> constants;
  for (u64 r : roots_mod_p(ModPoly::from_int(field.polynomial(), p))) constants.push_back((p - r) % p);
  std::sort(constants.begin(), constants.end());
  std::vector<PrimeIdeal> out;
  int index = 0;
  for (u64 c : constants) out.push_back({p, index++, ModPoly(p, {c, 1})});
  return out;
}

PrimeIdeal prime_from_label(const NumberField& field, std::string_view label) {
  auto colon = label.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::InvalidInput, "prime label must look like \"p:index\", got '" + std::string(label) + "'");
  u64 p = 0;
  int index = 0;
  try {
    p = std::stoull(std::string(label.substr(0, colon)));
    index = std::stoi(std::string(label.substr(colon + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "malformed prime label '" + std::string(label) + "'");
  }
  auto primes = factor_prime(field, p);
  if (index < 0 || index >= static_cast<int>(primes.size()))
    throw Error(ErrorKind::InvalidInput, "no prime " + std::string(label) + ": only " +
                                             std::to_string(primes.size()) + " primes above " + std::to_string(p));
  return primes[index];
}

u64 residue_norm_mod(const PrimeIdeal& prime, u64 m) {
  if (m == 0) throw Error(ErrorKind::InvalidInput, "modulus must be positive");
  if (std::gcd(prime.p, m) != 1)
    throw Error(ErrorKind::NotCoprime, "N(" + prime.label() + ") is not coprime to " + std::to_string(m));
  return pow_mod(prime.p % m, static_cast<u64>(prime.inertia_degree()), m);
}

ComplexInterval evaluate_at_place(const FieldElement& x, const Place& place, int precision) {
  const NumberField& K = x.field();
  const std::size_t idx = K.root_index(place);
  Float limit(64);
  mpfr_set_ui_2exp(limit.get(), 1, -precision, MPFR_RNDN);
  for (int extra = 16; precision + extra + 8 <= kDefaultMaxWorkingPrecision; extra *= 2) {
    const int iso = precision + extra;
    auto boxes = K.roots(iso);
    const RootBox& root = boxes[idx];
    const mpfr_prec_t wp = root.box.re.precision();
    const Interval den = Interval::from_integer(x.denominator(), wp);
    ComplexInterval value(wp);
    if (place.kind == Place::Kind::Real) {
      Interval at = evaluate(x.numerator(), root.box.re);
      value = ComplexInterval(at / den, Interval::point(0, wp));
    } else {
      ComplexInterval z = evaluate(x.numerator(), root.box);
      value = ComplexInterval(z.re / den, z.im / den);
    }
    if (value.re.width() <= limit && value.im.width() <= limit) return value;
  }
  throw Error(ErrorKind::PrecisionExhausted, "cannot evaluate " + x.to_string() + " to " + std::to_string(precision) +
                                                 " bits");
}

Integer ResidueField::size() const { return boost::multiprecision::pow(Integer(p_), g_.degree()); }

ModPoly ResidueField::reduce(const FieldElement& x) const {
  const u64 den = lspec::reduce(x.denominator(), p_);
  if (den == 0)
    throw Error(ErrorKind::DenominatorNotCoprime,
                "denominator of " + x.to_string() + " is divisible by " + std::to_string(p_));
  return ModPoly::from_int(x.numerator(), p_).scaled(inv_mod(den, p_)) % g_;
}

}  // namespace lspec
