#include "lspec/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>

#include "lspec/error.hpp"

namespace lspec {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return abs(g);
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> v = coeffs_;
  for (auto& c : v) c /= g;
  return IntPoly(std::move(v));
}

namespace {

template <class Coeff>
std::string format_poly(const std::vector<Coeff>& c, char var) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    Coeff a = c[i];
    if (a == 0) continue;
    bool negative = a < 0;
    if (negative) a = -a;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string IntPoly::to_string(char var) const { return format_poly(coeffs_, var); }

std::string IntPoly::to_list_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i];
  os << "]";
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(v));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  std::vector<Rational> parse() {
    skip_ws();
    if (peek() == '[') return parse_list();
    std::map<int, Rational> terms;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_ws();
      auto [coef, deg] = parse_term();
      terms[deg] += coef * sign;
      first = false;
    }
    if (first) fail("empty polynomial");
    int top = terms.empty() ? -1 : terms.rbegin()->first;
    std::vector<Rational> out(top + 1);
    for (auto& [d, c] : terms) out[d] = c;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  }

 private:
  std::vector<Rational> parse_list() {
    get();
    std::vector<Rational> out;
    skip_ws();
    if (peek() == ']') {
      get();
    } else {
      while (true) {
        skip_ws();
        int sign = 1;
        if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
        skip_ws();
        out.push_back(parse_number() * sign);
        skip_ws();
        char c = get();
        if (c == ']') break;
        if (c != ',') fail("expected ',' or ']'");
      }
    }
    skip_ws();
    if (!at_end()) fail("trailing characters after list");
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  }

  std::pair<Rational, int> parse_term() {
    Rational coef = 1;
    bool have_coef = false;
    if (peek() == '(') {
      get();
      skip_ws();
      int sign = 1;
      if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
      coef = parse_number() * sign;
      skip_ws();
      if (get() != ')') fail("expected ')'");
      have_coef = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = parse_number();
      have_coef = true;
    }
    skip_ws();
    if (peek() == '*') {
      if (!have_coef) fail("'*' without coefficient");
      get();
      skip_ws();
      if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected variable after '*'");
    }
    int deg = 0;
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      char v = get();
      if (var_ == 0) var_ = v;
      if (v != var_) fail(std::string("inconsistent variable '") + v + "'");
      deg = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        Rational e = parse_integer();
        if (e > 10000) fail("exponent too large");
        deg = static_cast<int>(numerator(e));
        skip_ws();
      }
      if (peek() == '/') {
        get();
        skip_ws();
        Rational d = parse_integer();
        if (d == 0) fail("zero denominator");
        coef /= d;
      }
    } else if (!have_coef) {
      fail("expected term");
    }
    return {coef, deg};
  }

  Rational parse_number() {
    Rational n = parse_integer();
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      Rational d = parse_integer();
      if (d == 0) fail("zero denominator");
      n /= d;
    }
    return n;
  }

  Rational parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Rational(Integer(std::string(s_.substr(start, pos_ - start))));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::InvalidInput,
                "cannot parse polynomial '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  char var_ = 0;
};

}  // namespace

std::vector<Rational> parse_rational_coeffs(std::string_view text) { return PolyParser(text).parse(); }

IntPoly IntPoly::parse(std::string_view text) {
  auto rc = parse_rational_coeffs(text);
  std::vector<Integer> v;
  v.reserve(rc.size());
  for (const auto& c : rc) {
    if (denominator(c) != 1)
      throw Error(ErrorKind::InvalidInput, "non-integral coefficient in '" + std::string(text) + "'");
    v.push_back(numerator(c));
  }
  return IntPoly(std::move(v));
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> q(a.degree() - b.degree() + 1);
  const Integer& lb = b.leading();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Integer& top = rem[i + b.degree()];
    if (top % lb != 0) return std::nullopt;
    Integer t = top / lb;
    q[i] = t;
    for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= t * b.coeffs()[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

Integer resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Integer>> M(size, std::vector<Integer>(size));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) M[r][r + j] = a.coeffs()[m - j];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) M[n + r][r + j] = b.coeffs()[n - j];
  // Bareiss fraction-free elimination.
  Integer sign = 1, prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (M[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < size; ++r)
        if (M[r][k] != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      std::swap(M[k], M[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign * M[size - 1][size - 1];
}

Integer discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorKind::InvalidInput, "discriminant of a constant");
  Integer r = resultant(f, f.derivative());
  Integer d = r / f.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

// ---------------------------------------------------------------------------
// ModPoly

ModPoly::ModPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::from_int(const IntPoly& f, u64 p) {
  std::vector<u64> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(reduce(c, p));
  return ModPoly(p, std::move(v));
}

ModPoly ModPoly::constant(u64 p, u64 c) { return ModPoly(p, {c}); }
ModPoly ModPoly::x(u64 p) { return ModPoly(p, {0, 1}); }

ModPoly ModPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scaled(inv_mod(leading(), p_));
}

ModPoly ModPoly::scaled(u64 s) const {
  ModPoly r(p_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = lspec::mul_mod(c_[i], s % p_, p_);
  r.trim();
  return r;
}

ModPoly ModPoly::derivative() const {
  ModPoly r(p_);
  if (c_.size() < 2) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = lspec::mul_mod(c_[i], i % p_, p_);
  r.trim();
  return r;
}

u64 ModPoly::eval(u64 x) const {
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_mod(lspec::mul_mod(acc, x, p_), *it, p_);
  return acc;
}

std::string ModPoly::to_string(char var) const { return format_poly(c_, var); }

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  ModPoly r(a.p_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = add_mod(a.coeff(i), b.coeff(i), a.p_);
  r.trim();
  return r;
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  ModPoly r(a.p_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = sub_mod(a.coeff(i), b.coeff(i), a.p_);
  r.trim();
  return r;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  ModPoly r(a.p_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = add_mod(r.c_[i + j], lspec::mul_mod(a.c_[i], b.c_[j], a.p_), a.p_);
  }
  r.trim();
  return r;
}

bool canonical_less(const ModPoly& a, const ModPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.c_ < b.c_;
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "polynomial division by zero");
  const u64 p = a.modulus();
  if (a.degree() < b.degree()) return {ModPoly(p), a};
  std::vector<u64> rem = a.coeffs();
  std::vector<u64> q(a.degree() - b.degree() + 1, 0);
  const u64 inv = inv_mod(b.leading(), p);
  const int db = b.degree();
  for (int i = a.degree() - db; i >= 0; --i) {
    u64 t = lspec::mul_mod(rem[i + db], inv, p);
    q[i] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i + j] = sub_mod(rem[i + j], lspec::mul_mod(t, b.coeffs()[j], p), p);
  }
  rem.resize(db);
  return {ModPoly(p, std::move(q)), ModPoly(p, std::move(rem))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }
ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& m) { return (a * b) % m; }

ModPoly pow_mod(const ModPoly& base, const Integer& exp, const ModPoly& m) {
  if (exp < 0) throw Error(ErrorKind::InvalidInput, "negative exponent");
  ModPoly result = ModPoly::constant(m.modulus(), 1) % m;
  ModPoly b = base % m;
  const unsigned bits = exp == 0 ? 0 : static_cast<unsigned>(msb(exp)) + 1;
  for (int i = static_cast<int>(bits) - 1; i >= 0; --i) {
    result = mul_mod(result, result, m);
    if (bit_test(exp, i)) result = mul_mod(result, b, m);
  }
  return result;
}

ModPoly pow_mod(const ModPoly& base, u64 exp, const ModPoly& m) {
  ModPoly result = ModPoly::constant(m.modulus(), 1) % m;
  ModPoly b = base % m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Factorization

namespace {

constexpr u64 kDeterministicSplitLimit = 10000;

ModPoly pth_root(const ModPoly& f) {
  const u64 p = f.modulus();
  std::vector<u64> v;
  for (u64 i = 0; i * p < f.coeffs().size(); ++i) v.push_back(f.coeffs()[i * p]);
  return ModPoly(p, std::move(v));
}

void squarefree_parts(const ModPoly& f, int scale, std::vector<ModFactor>& out) {
  if (f.degree() < 1) return;
  const u64 p = f.modulus();
  ModPoly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_parts(pth_root(f), scale * static_cast<int>(p), out);
    return;
  }
  ModPoly c = gcd(f, fp);
  ModPoly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    ModPoly y = gcd(w, c);
    ModPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_one()) squarefree_parts(pth_root(c).monic(), scale * static_cast<int>(p), out);
}

std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f) {
  const u64 p = f.modulus();
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly rem = f;
  ModPoly xp = ModPoly::x(p);
  ModPoly h = xp % rem;
  for (int i = 1; rem.degree() >= 2 * i; ++i) {
    h = pow_mod(h, p, rem);
    ModPoly g = gcd(rem, h - xp);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      rem = rem / g;
      h = h % rem;
    }
  }
  if (rem.degree() > 0) out.emplace_back(rem.monic(), rem.degree());
  return out;
}

/// Candidate splitting polynomials for equal-degree factorization. Small
/// instances enumerate every polynomial of degree < deg g in counting order;
/// larger ones draw from a fixed-seed generator. Both are reproducible.
class SplitCandidates {
 public:
  SplitCandidates(u64 p, int n) : p_(p), n_(n), rng_(0x9e3779b97f4a7c15ULL ^ (p * 1315423911ULL) ^ n) {
    deterministic_ = static_cast<u128>(p) * n <= kDeterministicSplitLimit;
    counter_.assign(n, 0);
  }

  ModPoly next() {
    if (deterministic_) {
      // Increment the base-p counter, skipping constants.
      while (true) {
        int i = 0;
        while (i < n_) {
          if (++counter_[i] < p_) break;
          counter_[i] = 0;
          ++i;
        }
        if (i == n_) throw Error(ErrorKind::InvalidInput, "equal-degree splitting exhausted candidates");
        bool nonconstant = false;
        for (int j = 1; j < n_; ++j) nonconstant |= counter_[j] != 0;
        if (nonconstant) return ModPoly(p_, counter_);
      }
    }
    std::uniform_int_distribution<u64> dist(0, p_ - 1);
    std::vector<u64> v(n_);
    for (auto& c : v) c = dist(rng_);
    return ModPoly(p_, std::move(v));
  }

 private:
  u64 p_;
  int n_;
  std::mt19937_64 rng_;
  bool deterministic_ = false;
  std::vector<u64> counter_;
};

void equal_degree(const ModPoly& g, int d, std::vector<ModPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const u64 p = g.modulus();
  SplitCandidates candidates(p, g.degree());
  Integer exponent = (boost::multiprecision::pow(Integer(p), d) - 1) / 2;
  while (true) {
    ModPoly a = candidates.next() % g;
    if (a.degree() < 1) continue;
    ModPoly b(p);
    if (p == 2) {
      ModPoly t = a;
      b = a;
      for (int j = 1; j < d; ++j) {
        t = mul_mod(t, t, g);
        b = b + t;
      }
    } else {
      b = pow_mod(a, exponent, g) - ModPoly::constant(p, 1);
    }
    ModPoly u = gcd(g, b);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, out);
      equal_degree((g / u).monic(), d, out);
      return;
    }
  }
}

}  // namespace

ModFactorization factor_mod_p(const ModPoly& f) {
  if (!is_prime(f.modulus())) throw Error(ErrorKind::InvalidInput, std::to_string(f.modulus()) + " is not prime");
  if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "polynomial vanishes modulo " + std::to_string(f.modulus()));
  ModFactorization result;
  result.unit = f.leading();
  std::vector<ModFactor> parts;
  squarefree_parts(f.monic(), 1, parts);
  for (const auto& part : parts) {
    for (const auto& [g, d] : distinct_degree(part.factor)) {
      std::vector<ModPoly> irreducibles;
      equal_degree(g, d, irreducibles);
      for (auto& q : irreducibles) result.factors.push_back({std::move(q), part.multiplicity});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const ModFactor& a, const ModFactor& b) { return canonical_less(a.factor, b.factor); });
  // Merge repeated factors (possible only across p-th power layers).
  std::vector<ModFactor> merged;
  for (auto& fac : result.factors) {
    if (!merged.empty() && merged.back().factor == fac.factor)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(std::move(fac));
  }
  result.factors = std::move(merged);
  return result;
}

ModFactorization factor_mod_p(const IntPoly& f, u64 p) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "zero polynomial");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  return factor_mod_p(ModPoly::from_int(f, p));
}

bool is_irreducible_mod_p(const ModPoly& f) {
  if (f.is_zero() || f.degree() < 1) throw Error(ErrorKind::InvalidInput, "irreducibility of a constant");
  if (f.leading() != 1) throw Error(ErrorKind::InvalidInput, "irreducibility test expects a monic polynomial");
  const int n = f.degree();
  if (n == 1) return true;
  const u64 p = f.modulus();
  const ModPoly xp = ModPoly::x(p);
  // frob[k] = x^(p^k) mod f
  std::vector<ModPoly> frob{xp % f};
  for (int k = 1; k <= n; ++k) frob.push_back(pow_mod(frob.back(), p, f));
  if (!(frob[n] == xp % f)) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q) continue;
    bool prime_q = true;
    for (int r = 2; r * r <= q; ++r) prime_q &= (q % r != 0);
    if (!prime_q) continue;
    if (!gcd(f, frob[n / q] - xp).is_one()) return false;
  }
  return true;
}

std::vector<u64> roots_mod_p(const ModPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "roots of the zero polynomial");
  const u64 p = f.modulus();
  std::vector<u64> roots;
  if (f.degree() < 1) return roots;
  const ModPoly g = f.monic();
  const ModPoly xp = ModPoly::x(p);
  ModPoly linear = gcd(g, pow_mod(xp, p, g) - xp);
  if (linear.degree() < 1) return roots;
  std::vector<ModPoly> parts;
  equal_degree(linear, 1, parts);
  for (const auto& q : parts) roots.push_back((p - q.coeff(0)) % p);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<int> squarefree_factor_degrees(const ModPoly& f) {
  std::vector<int> out;
  for (const auto& [g, d] : distinct_degree(f.monic())) {
    for (int k = 0; k < g.degree() / d; ++k) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lspec
