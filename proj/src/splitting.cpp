#include "lspec/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lspec/error.hpp"

namespace lspec {

std::string_view to_string(SplitSymbol s) {
  switch (s) {
    case SplitSymbol::Split: return "split";
    case SplitSymbol::Inert: return "inert";
    case SplitSymbol::Ramified: return "ramified";
  }
  return "?";
}

// ---------------------------------------------------------------------------

QuadraticExtension::QuadraticExtension(FieldElement d, std::optional<FieldElement> t, std::string label)
    : d_(std::move(d)), trace_(std::move(t)), label_(std::move(label)) {
  if (d_.is_zero()) throw Error(ErrorKind::InvalidInput, "radicand must be nonzero");
  const NumberField& K = d_.field();
  for (u64 p = 3; p <= kNonSquareSearchBound; p = next_prime(p + 1)) {
    if (K.is_excluded(p) || reduce(d_.denominator(), p) == 0) continue;
    for (const auto& P : factor_prime(K, p)) {
      if (P.norm() > kNonSquareSearchBound) continue;
      if (split_symbol(P, *this) == SplitSymbol::Inert) {
        witness_ = P;
        return;
      }
    }
  }
  throw Error(ErrorKind::PossiblyTrivialExtension,
              "no inert prime of norm <= 10^4 for radicand " + d_.to_string() + "; it is probably a square");
}

QuadraticExtension QuadraticExtension::from_radicand(FieldElement d, std::string label) {
  if (label.empty()) label = "sqrt(" + d.to_string() + ")";
  return QuadraticExtension(std::move(d), std::nullopt, std::move(label));
}

QuadraticExtension QuadraticExtension::from_trace(FieldElement t, std::string label) {
  FieldElement d = t * t - FieldElement::from_integer(t.field(), 4);
  if (label.empty()) label = "trace(" + t.to_string() + ")";
  return QuadraticExtension(std::move(d), std::move(t), std::move(label));
}

SplitSymbol split_symbol(const PrimeIdeal& prime, const QuadraticExtension& ext) {
  const NumberField& K = ext.field();
  const u64 p = prime.p;
  if (K.is_excluded(p)) throw Error(ErrorKind::ExcludedPrime, std::to_string(p) + " is excluded");
  const FieldElement& d = ext.radicand();
  const u64 den = reduce(d.denominator(), p);
  if (den == 0)
    throw Error(ErrorKind::DenominatorNotCoprime, "denominator of " + d.to_string() + " divisible by " + std::to_string(p));
  if (prime.inertia_degree() == 1) {
    // O/P = F_p with theta -> root of the linear factor.
    const u64 root = (p - prime.factor.coeff(0)) % p;
    const u64 value = mul_mod(ModPoly::from_int(d.numerator(), p).eval(root), inv_mod(den, p), p);
    if (value == 0) return SplitSymbol::Ramified;
    return pow_mod(value, (p - 1) / 2, p) == 1 ? SplitSymbol::Split : SplitSymbol::Inert;
  }
  ResidueField R(prime);
  ModPoly value = R.reduce(d);
  if (value.is_zero()) return SplitSymbol::Ramified;
  ModPoly e = R.pow(value, (R.size() - 1) / 2);
  return e.is_one() ? SplitSymbol::Split : SplitSymbol::Inert;
}

SplitSymbol split_symbol_real(const Place& place, const QuadraticExtension& ext) {
  if (place.kind != Place::Kind::Real) throw Error(ErrorKind::InvalidInput, "not a real place");
  for (int prec : {64, 128, 256, 448}) {
    Interval v = evaluate_at_place(ext.radicand(), place, prec).re;
    if (v.positive()) return SplitSymbol::Split;
    if (v.negative()) return SplitSymbol::Inert;
  }
  throw Error(ErrorKind::IndeterminateSign,
              "sign of " + ext.radicand().to_string() + " at real place " + std::to_string(place.index));
}

// ---------------------------------------------------------------------------

FrobeniusVector::FrobeniusVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw Error(ErrorKind::InvalidInput, "Frobenius vector entries must be 0 or 1");
}

FrobeniusVector FrobeniusVector::from_mask(std::uint64_t mask, std::size_t r) {
  std::vector<std::uint8_t> bits(r);
  for (std::size_t i = 0; i < r; ++i) bits[i] = (mask >> i) & 1;
  return FrobeniusVector(std::move(bits));
}

FrobeniusVector FrobeniusVector::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c == '0' || c == '1')
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    else if (c != ',' && c != ' ' && c != '(' && c != ')')
      throw Error(ErrorKind::InvalidInput, "bad Frobenius vector '" + std::string(text) + "'");
  }
  if (bits.empty()) throw Error(ErrorKind::InvalidInput, "empty Frobenius vector");
  return FrobeniusVector(std::move(bits));
}

std::uint64_t FrobeniusVector::mask() const {
  if (bits_.size() > 64) throw Error(ErrorKind::InvalidInput, "at most 64 extensions are supported");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) m |= static_cast<std::uint64_t>(bits_[i]) << i;
  return m;
}

std::string FrobeniusVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (i) s += ",";
    s += static_cast<char>('0' + bits_[i]);
  }
  return s;
}

FrobeniusResult frobenius_vector(const PrimeIdeal& prime, const std::vector<QuadraticExtension>& exts) {
  std::vector<std::uint8_t> bits;
  RamifiedReport ramified;
  for (std::size_t i = 0; i < exts.size(); ++i) {
    SplitSymbol s = split_symbol(prime, exts[i]);
    if (s == SplitSymbol::Ramified) ramified.coordinates.push_back(i);
    bits.push_back(s == SplitSymbol::Inert ? 1 : 0);
  }
  if (!ramified.coordinates.empty()) return ramified;
  return FrobeniusVector(std::move(bits));
}

// ---------------------------------------------------------------------------

CompositumCheck compositum_degree_check(const std::vector<QuadraticExtension>& exts, u64 height) {
  if (exts.empty()) throw Error(ErrorKind::InvalidInput, "compositum check needs at least one extension");
  if (exts.size() > 64) throw Error(ErrorKind::InvalidInput, "at most 64 extensions are supported");
  const NumberField& K = exts.front().field();
  CompositumCheck out;
  out.r = exts.size();
  // Reduced basis indexed by highest set bit.
  std::vector<std::uint64_t> pivot(out.r, 0);
  auto insert = [&](std::uint64_t v) {
    for (int b = static_cast<int>(out.r) - 1; b >= 0 && v; --b) {
      if (!((v >> b) & 1)) continue;
      if (!pivot[b]) {
        pivot[b] = v;
        ++out.rank;
        return;
      }
      v ^= pivot[b];
    }
  };
  for (u64 p = 3; p <= height && out.rank < out.r; p = next_prime(p + 1)) {
    if (K.is_excluded(p)) continue;
    bool denominators_ok = true;
    for (const auto& L : exts) denominators_ok &= reduce(L.radicand().denominator(), p) != 0;
    if (!denominators_ok) continue;
    for (const auto& P : factor_prime(K, p)) {
      if (P.norm() > height) continue;
      ++out.primes_sampled;
      auto fv = frobenius_vector(P, exts);
      if (auto* v = std::get_if<FrobeniusVector>(&fv)) insert(v->mask());
    }
  }
  out.full = out.rank == out.r;
  for (int b = static_cast<int>(out.r) - 1; b >= 0; --b)
    if (pivot[b]) out.basis.push_back(FrobeniusVector::from_mask(pivot[b], out.r));
  if (out.rank <= 12) {
    std::vector<std::uint64_t> basis;
    for (auto v : pivot)
      if (v) basis.push_back(v);
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << basis.size()); ++combo) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if ((combo >> i) & 1) v ^= basis[i];
      out.elements.push_back(FrobeniusVector::from_mask(v, out.r));
    }
    std::sort(out.elements.begin(), out.elements.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

std::map<int, std::vector<u64>> cyclotomic_norm_subgroups(const NumberField& field, int n_max, u64 height) {
  if (n_max < 3) throw Error(ErrorKind::InvalidInput, "n_max must be at least 3");
  std::vector<int> moduli;
  for (int n = 3; n <= n_max; ++n)
    if (n % 4 != 2) moduli.push_back(n);
  std::map<int, std::vector<bool>> seen;
  for (int n : moduli) seen[n].assign(n, false);
  for (u64 p = 3; p <= height; p = next_prime(p + 1)) {
    if (field.is_excluded(p)) continue;
    for (int f : squarefree_factor_degrees(ModPoly::from_int(field.polynomial(), p))) {
      Integer norm = boost::multiprecision::pow(Integer(p), f);
      if (norm > height) continue;
      for (int n : moduli) {
        if (std::gcd(p, static_cast<u64>(n)) != 1) continue;
        seen[n][reduce(norm, n)] = true;
      }
    }
  }
  std::map<int, std::vector<u64>> out;
  for (int n : moduli) {
    std::vector<bool> in_group(n, false);
    in_group[1 % n] = true;
    std::vector<u64> members{1 % static_cast<u64>(n)};
    // Closure under multiplication by each observed residue.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int g = 0; g < n; ++g) {
        if (!seen[n][g]) continue;
        u64 m = members[i] * g % n;
        if (!in_group[m]) {
          in_group[m] = true;
          members.push_back(m);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out[n] = std::move(members);
  }
  return out;
}

CyclotomicScan cyclotomic_quadratic_degrees(const NumberField& field, int n_max, u64 height) {
  auto degrees_at = [&](u64 h) {
    std::vector<int> out;
    for (const auto& [n, group] : cyclotomic_norm_subgroups(field, n_max, h))
      if (group.size() == 2) out.push_back(n);
    return out;
  };
  CyclotomicScan scan;
  scan.height = height;
  scan.degrees = degrees_at(height);
  for (int doubling = 0; doubling < 4; ++doubling) {
    auto next = degrees_at(2 * scan.height);
    if (next == scan.degrees) {
      scan.stable = true;
      return scan;
    }
    scan.height *= 2;
    scan.degrees = std::move(next);
  }
  return scan;
}

}  // namespace lspec
