#include "lspec/quaternion.hpp"

#include <algorithm>
#include <set>

#include "lspec/error.hpp"

namespace lspec {

OpaquePrime OpaquePrime::parse(std::string_view text) {
  OpaquePrime out;
  const auto at = text.find('@');
  out.label = std::string(text.substr(0, at));
  if (out.label.empty() || out.label.find_first_of(" \t,") != std::string::npos)
    throw Error(ErrorKind::InvalidInput, "bad opaque prime label '" + std::string(text) + "'");
  if (at != std::string_view::npos) {
    const std::string digits(text.substr(at + 1));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw Error(ErrorKind::InvalidInput, "bad norm in opaque prime '" + std::string(text) + "'");
    out.norm = Integer(digits);
    if (*out.norm < 2) throw Error(ErrorKind::InvalidInput, "opaque prime norm must be at least 2");
  }
  return out;
}

std::string OpaquePrime::to_string() const { return norm ? label + "@" + norm->str() : label; }

RamificationSet::RamificationSet(NumberField field, std::vector<int> real, std::vector<PrimeIdeal> finite,
                                 std::vector<OpaquePrime> opaque)
    : field_(std::move(field)), real_(std::move(real)), finite_(std::move(finite)), opaque_(std::move(opaque)) {
  for (int i : real_)
    if (i < 0 || i >= field_.real_places())
      throw Error(ErrorKind::InvalidInput, "real place " + std::to_string(i) + " out of range (K has " +
                                               std::to_string(field_.real_places()) + ")");
  for (const auto& P : finite_) {
    if (field_.is_excluded(P.p))
      throw Error(ErrorKind::ExcludedPrime, "prime " + P.label() + " lies over an excluded prime; use an opaque label");
    const auto ps = factor_prime(field_, P.p);
    if (P.index < 0 || P.index >= static_cast<int>(ps.size()) || !(ps[P.index].factor == P.factor))
      throw Error(ErrorKind::InvalidInput, "prime " + P.label() + " does not belong to this field");
  }
  std::sort(real_.begin(), real_.end());
  std::sort(finite_.begin(), finite_.end());
  std::sort(opaque_.begin(), opaque_.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  if (std::adjacent_find(real_.begin(), real_.end()) != real_.end())
    throw Error(ErrorKind::DuplicatePlace, "real place listed twice");
  if (std::adjacent_find(finite_.begin(), finite_.end()) != finite_.end())
    throw Error(ErrorKind::DuplicatePlace, "finite prime listed twice");
  if (std::adjacent_find(opaque_.begin(), opaque_.end()) != opaque_.end())
    throw Error(ErrorKind::DuplicatePlace, "opaque label listed twice");
  if (size() % 2 != 0)
    throw Error(ErrorKind::OddCardinality, "ramification set has " + std::to_string(size()) + " places; it must be even");
}

RamificationSet RamificationSet::parse(const NumberField& field, const std::vector<std::string>& tokens) {
  std::vector<int> real;
  std::vector<PrimeIdeal> finite;
  std::vector<OpaquePrime> opaque;
  for (const auto& tok : tokens) {
    if (tok.rfind("real:", 0) == 0) {
      try {
        std::size_t used = 0;
        real.push_back(std::stoi(tok.substr(5), &used));
        if (used != tok.size() - 5) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidInput, "bad real place '" + tok + "'");
      }
    } else if (tok.rfind("opaque:", 0) == 0) {
      opaque.push_back(OpaquePrime::parse(tok.substr(7)));
    } else {
      finite.push_back(prime_from_label(field, tok));
    }
  }
  return RamificationSet(field, std::move(real), std::move(finite), std::move(opaque));
}

bool RamificationSet::contains(const PrimeIdeal& P) const {
  return std::binary_search(finite_.begin(), finite_.end(), P);
}

bool RamificationSet::contains_real(int index) const { return std::binary_search(real_.begin(), real_.end(), index); }

std::vector<std::string> RamificationSet::tokens() const {
  std::vector<std::string> out;
  for (int i : real_) out.push_back("real:" + std::to_string(i));
  for (const auto& P : finite_) out.push_back(P.label());
  for (const auto& o : opaque_) out.push_back("opaque:" + o.to_string());
  return out;
}

bool operator==(const RamificationSet& a, const RamificationSet& b) {
  return a.field_ == b.field_ && a.real_ == b.real_ && a.finite_ == b.finite_ && a.opaque_ == b.opaque_;
}

Verdict is_kleinian_admissible(const QuaternionAlgebra& B) {
  Verdict v;
  const auto& K = B.field();
  if (K.complex_places() != 1) {
    v.ok = false;
    v.reasons.push_back("field has " + std::to_string(K.complex_places()) + " complex places, not exactly one");
  }
  for (int i = 0; i < K.real_places(); ++i) {
    if (!B.ramification().contains_real(i)) {
      v.ok = false;
      v.reasons.push_back("real place " + std::to_string(i) + " unramified");
    }
  }
  return v;
}

bool is_division(const QuaternionAlgebra& B) { return !B.ramification().empty(); }

EmbeddingCertificate admits_embedding(const QuaternionAlgebra& B, const QuadraticExtension& L) {
  const auto& ram = B.ramification();
  if (!(L.field() == ram.field())) throw Error(ErrorKind::InvalidInput, "extension and algebra are over different fields");
  if (!ram.opaque().empty())
    throw Error(ErrorKind::UncheckablePlace, "cannot decide splitting at opaque prime '" + ram.opaque().front().label + "'");
  EmbeddingCertificate cert;
  auto record = [&](std::string place, SplitSymbol s) {
    if (s == SplitSymbol::Split) cert.admits = false;
    cert.places.push_back({std::move(place), s});
  };
  for (int i : ram.real()) record("real:" + std::to_string(i), split_symbol_real(Place::real(i), L));
  for (const auto& P : ram.finite()) record(P.label(), split_symbol(P, L));
  return cert;
}

QuaternionAlgebra extend_ramification(const QuaternionAlgebra& B, const PrimeIdeal& P0, const PrimeIdeal& Pi) {
  if (P0 == Pi) throw Error(ErrorKind::SamePrime, "both added primes are " + P0.label());
  const auto& ram = B.ramification();
  for (const auto* P : {&P0, &Pi})
    if (ram.contains(*P)) throw Error(ErrorKind::AlreadyRamified, P->label() + " is already in Ram(B)");
  auto finite = ram.finite();
  finite.push_back(P0);
  finite.push_back(Pi);
  return QuaternionAlgebra(RamificationSet(ram.field(), ram.real(), std::move(finite), ram.opaque()));
}

CommensurabilityComparison same_commensurability_class(const CommensurabilityClass& a, const CommensurabilityClass& b) {
  CommensurabilityComparison out;
  const auto& f = a.field.polynomial();
  const auto& g = b.field.polynomial();
  if (!(f == g)) {
    if (f.degree() == g.degree() && a.field.discriminant() == b.field.discriminant())
      out.warning = "fields " + f.to_string() + " and " + g.to_string() +
                    " are compared by defining polynomial only; they may be isomorphic";
    return out;
  }
  out.same = a.ram.real() == b.ram.real() && a.ram.finite() == b.ram.finite() && a.ram.opaque() == b.ram.opaque();
  return out;
}

TorsionCheck torsion_free_check(const QuaternionAlgebra& B, const CyclotomicScan& scan) {
  const auto& ram = B.ramification();
  if (ram.finite_empty()) throw Error(ErrorKind::RamFEmpty, "torsion check needs a finite ramified prime");
  TorsionCheck out;
  out.scan = scan;
  for (int n : scan.degrees) {
    TorsionRow row{n, std::nullopt};
    for (const auto& P : ram.finite()) {
      if (P.p % n == 0) continue;
      if (residue_norm_mod(P, n) == 1) {
        row.witness = P;
        break;
      }
    }
    out.torsion_free &= row.witness.has_value();
    out.rows.push_back(std::move(row));
  }
  return out;
}

TorsionCheck torsion_free_check(const QuaternionAlgebra& B, int n_max, u64 height) {
  if (B.ramification().finite_empty()) throw Error(ErrorKind::RamFEmpty, "torsion check needs a finite ramified prime");
  return torsion_free_check(B, cyclotomic_quadratic_degrees(B.field(), n_max, height));
}

}  // namespace lspec
