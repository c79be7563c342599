// One PASS/FAIL line per acceptance criterion. Arguments select criteria
// (1, 2, 3a, 3b, 4, ..., 8); no arguments runs all of them.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "brute_split.hpp"
#include "lspec/error.hpp"
#include "lspec/pipeline.hpp"
#include "lspec/report.hpp"
#include "oracles.hpp"

using namespace lspec;

namespace {

// Tolerances.
constexpr double kSigmas = 5.0;
constexpr double kZetaQ = 1.6449340668;
constexpr double kZetaGauss = 1.5067030;
constexpr u64 kSplitNormBound = 10'000;
constexpr u64 kDensityHeight = 1'000'000;
constexpr u64 kZetaCutoff = 1'000'000;
constexpr int kVolumeTrials = 100;

struct Outcome {
  bool pass;
  std::string detail;
};

NumberField make(const char* f, std::optional<Integer> d = std::nullopt) {
  return NumberField::make(IntPoly::parse(f), d);
}

std::string fmt(double x, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

std::string norms_string(const std::vector<PrimeTuple>& ts) {
  std::string out = "{";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out += i ? ", (" : "(";
    for (std::size_t j = 0; j < ts[i].primes.size(); ++j) out += (j ? "," : "") + std::to_string(ts[i].primes[j].p);
    out += ")";
  }
  return out + "}";
}

QuadraticExtension rad(const NumberField& K, const char* d) {
  return QuadraticExtension::from_radicand(FieldElement::parse(K, d));
}

Outcome criterion1() {
  struct Case {
    const char* poly;
    std::vector<const char*> radicands;
  };
  const Case cases[] = {{"x - 1", {"5", "-1", "13", "3/7"}},
                        {"x^2 + 1", {"a + 2", "3", "a - 1/3"}},
                        {"x^3 - x + 1", {"a", "a^2 - 5", "2*a + 7"}},
                        {"x^3 - 2", {"a^2 - 4", "a + 1", "5"}}};
  u64 compared = 0, mismatches = 0;
  for (const auto& c : cases) {
    auto K = make(c.poly);
    std::vector<QuadraticExtension> Ls;
    for (const char* d : c.radicands) Ls.push_back(rad(K, d));
    for (u64 p = 3; p <= kSplitNormBound; p = next_prime(p + 1)) {
      if (K.is_excluded(p)) continue;
      for (const auto& P : factor_prime(K, p)) {
        if (P.norm() > kSplitNormBound) continue;
        auto squares = oracle::square_table(P.factor.coeffs(), p);
        for (const auto& L : Ls) {
          if (reduce(L.radicand().denominator(), p) == 0) continue;
          ++compared;
          mismatches += split_symbol(P, L) != brute_split_symbol(P, L.radicand(), squares);
        }
      }
    }
  }
  return {mismatches == 0 && compared > 0,
          std::to_string(mismatches) + " mismatches in " + std::to_string(compared) + " (prime, radicand) pairs"};
}

Outcome criterion2() {
  auto Q = make("x - 1");
  std::vector<QuadraticExtension> Ls{rad(Q, "5"), rad(Q, "13")};
  auto census = frobenius_census(Q, Ls, kDensityHeight);
  const double n = static_cast<double>(census.total - census.ramified);
  const double sigma = std::sqrt(n * 0.25 * 0.75);
  bool ok = census.counts.size() == 4;
  std::string detail;
  for (const auto& [v, c] : census.counts) {
    const double z = (static_cast<double>(c) - n / 4) / sigma;
    ok &= std::fabs(z) <= kSigmas;
    detail += "(" + v.to_string() + ") z=" + fmt(z, 3) + "; ";
  }
  SearchSpec spec{Q, Ls, FrobeniusVector::parse("1,1"), kDensityHeight};
  const double count = static_cast<double>(enumerate_target_primes(spec).size());
  const double pi = static_cast<double>(prime_pi(kDensityHeight));
  const double z = (count - pi / 4) / std::sqrt(pi * 0.25 * 0.75);
  ok &= std::fabs(z) <= kSigmas;
  detail += "target count " + fmt(count, 8) + " vs pi(X)/4 = " + fmt(pi / 4, 8) + " (z=" + fmt(z, 3) + ")";
  return {ok, detail};
}

SearchSpec sqrt5_inert(int k, u64 window) {
  auto Q = make("x - 1");
  SearchSpec s{Q, {rad(Q, "5")}, FrobeniusVector::parse("1"), 50};
  s.k = k;
  s.window = window;
  s.policy = OverlapPolicy::Sliding;
  return s;
}

Outcome criterion3a() {
  auto got = find_bounded_gap_tuples(sqrt5_inert(2, 4));
  const std::string s = norms_string(got);
  return {s == "{(3,7), (13,17), (43,47)}", "k=2, C=4 gives " + s};
}

Outcome criterion3b() {
  auto got = find_bounded_gap_tuples(sqrt5_inert(3, 10));
  const std::string s = norms_string(got);
  return {s == "{(3,7,13)}", "k=3, C=10 gives " + s + ", expected {(3,7,13)}"};
}

Outcome criterion4() {
  bool ok = true;
  std::string detail;
  auto zq = dedekind_zeta_2(make("x - 1"), kZetaCutoff);
  const double dq = std::fabs(zq.value.to_double() - kZetaQ);
  ok &= dq <= zq.epsilon.to_double();
  detail += "Q: |diff|=" + fmt(dq, 3) + " eps=" + fmt(zq.epsilon.to_double(), 3) + "; ";
  auto zg = dedekind_zeta_2(make("x^2 + 1"), kZetaCutoff);
  const double dg = std::fabs(zg.value.to_double() - kZetaGauss);
  ok &= dg <= zg.epsilon.to_double();
  detail += "Q(i): |diff|=" + fmt(dg, 3) + " eps=" + fmt(zg.epsilon.to_double(), 3) + "; doubling:";
  for (const char* f : {"x - 1", "x^2 + 1", "x^3 - x + 1", "x^3 - 2"}) {
    auto K = make(f);
    auto a = dedekind_zeta_2(K, kZetaCutoff), b = dedekind_zeta_2(K, 2 * kZetaCutoff);
    Float diff(128);
    mpfr_sub(diff.get(), b.value.get(), a.value.get(), MPFR_RNDU);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDU);
    const bool within = diff < a.epsilon;
    ok &= within;
    detail += std::string(" ") + (within ? "ok" : "FAIL");
  }
  return {ok, detail};
}

Outcome criterion5() {
  struct Base {
    const char* poly;
    std::vector<std::string> ram;
  };
  const Base bases[] = {{"x^3 - 2", {"real:0", "5:0"}}, {"x^2 + 1", {"3:0", "7:0"}}, {"x^3 - x + 1", {"real:0", "5:0"}}};
  std::mt19937 rng(20250101);
  int exact = 0, trials = 0;
  for (const auto& b : bases) {
    auto K = make(b.poly);
    auto zeta = dedekind_zeta_2(K, 10'000);
    QuaternionAlgebra B(RamificationSet::parse(K, b.ram));
    const BorelVolume base = borel_volume(B.ramification(), zeta);
    std::vector<PrimeIdeal> pool;
    for (u64 p = 3; p < 500; p = next_prime(p + 1)) {
      if (K.is_excluded(p)) continue;
      for (const auto& P : factor_prime(K, p))
        if (!B.ramification().contains(P)) pool.push_back(P);
    }
    const int share = kVolumeTrials / 3 + (&b == &bases[0] ? kVolumeTrials % 3 : 0);
    for (int t = 0; t < share; ++t) {
      PrimeIdeal P0 = pool[rng() % pool.size()], Pi = pool[rng() % pool.size()];
      while (Pi == P0) Pi = pool[rng() % pool.size()];
      auto Bi = extend_ramification(B, P0, Pi);
      const Rational r = volume_ratio(borel_volume(Bi.ramification(), zeta), base);
      exact += r == Rational((P0.norm() - 1) * (Pi.norm() - 1));
      ++trials;
    }
  }
  return {exact == trials && trials == kVolumeTrials, std::to_string(exact) + "/" + std::to_string(trials) + " ratios exact"};
}

std::filesystem::path request_path() { return std::filesystem::path(LSPEC_SOURCE_DIR) / "requests/cubic_twins.req"; }

// Invariants (a)-(f) read off a report.
std::string report_invariant_failures(const Json& report) {
  std::string bad;
  const u64 window = report["request"]["window"];
  const std::size_t base_card = report["base"]["ramification"]["cardinality"];
  const Integer p0_norm(report["p0"]["norm"].get<std::string>());
  const Integer base_np(report["volume"]["base"]["norm_product"].get<std::string>());
  for (const auto& t : report["tuples"]) {
    std::set<std::vector<std::string>> sets;
    std::vector<Integer> norms, products;
    for (const auto& P : t["primes"]) norms.emplace_back(P["norm"].get<std::string>());
    for (const auto& a : t["algebras"]) {
      const auto tokens = a["ramification"]["tokens"].get<std::vector<std::string>>();
      sets.insert(tokens);
      if (tokens.size() % 2) bad += "(e) ";
      if (tokens.size() != base_card + 2) bad += "(e) ";
      if (a["ramification"]["ram_primes"].empty()) bad += "(f) ";
      for (const auto& e : a["embeddings"])
        if (!e["admits"].get<bool>()) bad += "(b) ";
      products.emplace_back(a["volume"]["norm_product"].get<std::string>());
    }
    if (sets.size() != t["algebras"].size()) bad += "(a) ";
    for (const auto& x : norms)
      for (const auto& y : norms)
        if (x - y > Integer(window)) bad += "(c) ";
    const auto [lo, hi] = std::minmax_element(products.begin(), products.end());
    if (*hi - *lo > base_np * (p0_norm - 1) * Integer(window)) bad += "(d) ";
  }
  return bad;
}

Outcome criterion6() {
  auto report = run_twins(load_twin_request(request_path()));
  const std::size_t tuples = report["tuples"].size();
  const VerifyResult v = verify_report(report);
  const std::string bad = report_invariant_failures(report);
  return {tuples >= 1 && v.ok && bad.empty(), std::to_string(tuples) + " tuples; verify " +
                                                  (v.ok ? "ok" : "FAILED") + " (" + std::to_string(v.checks) +
                                                  " checks); invariants (a)-(f) " + (bad.empty() ? "hold" : bad)};
}

Outcome criterion7() {
  auto K = make("x^3 - 2", Integer(-108));
  std::optional<PrimeIdeal> witness;
  for (u64 p = 13; !witness; p = next_prime(p + 1)) {
    if (p % 12 != 1) continue;
    auto ps = degree_one_primes(K, p);
    if (!ps.empty()) witness = ps.front();
  }
  QuaternionAlgebra good(RamificationSet(K, {0}, {*witness}));
  QuaternionAlgebra bad(RamificationSet::parse(K, {"real:0", "5:0"}));
  auto g = torsion_free_check(good, 12);
  auto b = torsion_free_check(bad, 12);
  bool ok = g.torsion_free && !b.torsion_free;
  std::string table;
  for (const auto& row : b.rows) table += " n=" + std::to_string(row.n) + ":" + (row.witness ? row.witness->label() : "FAIL");
  // Expected table: n = 3 has no witness (5 = 2 mod 3), n = 4 is witnessed by 5 = 1 mod 4.
  ok &= b.rows.size() == 2 && b.rows[0].n == 3 && !b.rows[0].witness && b.rows[1].n == 4 && b.rows[1].witness &&
        b.rows[1].witness->p == 5;
  return {ok, "norm " + std::to_string(witness->p) + " passes: " + (g.torsion_free ? "yes" : "no") +
                  "; norm 5 table:" + table};
}

Outcome criterion8() {
  const auto req = load_twin_request(request_path());
  auto r1 = req, r2 = req;
  r1.threads = 1;
  r2.threads = 4;
  const std::string a = run_twins(r1).dump(), b = run_twins(r2).dump(), c = run_twins(r1).dump();
  auto Q = make("x - 1");
  std::vector<QuadraticExtension> Ls{rad(Q, "5"), rad(Q, "13")};
  SearchSpec one{Q, Ls, FrobeniusVector::parse("1,1"), kDensityHeight};
  SearchSpec four = one;
  four.threads = 4;
  const auto s1 = enumerate_target_primes(one), s4 = enumerate_target_primes(four);
  auto serialize = [](const std::vector<PrimeIdeal>& s) {
    std::string out;
    for (const auto& P : s) out += P.label() + " " + P.factor.to_string() + "\n";
    return out;
  };
  const bool same_reports = a == c && a == b;
  const bool same_streams = serialize(s1) == serialize(s4);
  return {same_reports && same_streams, std::string("reports ") + (same_reports ? "identical" : "DIFFER") + " (" +
                                            std::to_string(a.size()) + " bytes); 1- vs 4-thread stream " +
                                            (same_streams ? "identical" : "DIFFERS") + " (" +
                                            std::to_string(s1.size()) + " primes)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> all{
      {"1", criterion1}, {"2", criterion2}, {"3a", criterion3a}, {"3b", criterion3b}, {"4", criterion4},
      {"5", criterion5}, {"6", criterion6}, {"7", criterion7},   {"8", criterion8}};
  std::set<std::string> wanted(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& [id, run] : all) {
    if (!wanted.empty() && !wanted.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %-2s %s  %s  [%.1fs]\n", id.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
