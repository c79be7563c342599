#include <algorithm>
#include <random>

#include "doctest.h"
#include "lspec/chebotarev.hpp"
#include "lspec/error.hpp"
#include "oracles.hpp"

using namespace lspec;

namespace {

NumberField rationals() { return NumberField::make(IntPoly::parse("x - 1"), std::nullopt); }

SearchSpec sqrt5_spec(const char* target, u64 height) {
  auto Q = rationals();
  return SearchSpec{Q, {QuadraticExtension::from_radicand(FieldElement::from_integer(Q, 5))},
                    FrobeniusVector::parse(target), height};
}

std::vector<u64> norms(const std::vector<PrimeIdeal>& s) {
  std::vector<u64> out;
  for (const auto& P : s) out.push_back(P.p);
  return out;
}

std::vector<std::vector<u64>> tuple_norms(const std::vector<PrimeTuple>& ts) {
  std::vector<std::vector<u64>> out;
  for (const auto& t : ts) out.push_back(norms(t.primes));
  return out;
}

// All windows of k consecutive elements with span <= C.
std::vector<std::size_t> feasible_starts(const std::vector<u64>& s, std::size_t k, u64 C) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + k <= s.size(); ++i)
    if (s[i + k - 1] - s[i] <= C) out.push_back(i);
  return out;
}

// Largest number of pairwise disjoint feasible windows, by exhaustive search.
std::size_t brute_max_disjoint(const std::vector<std::size_t>& starts, std::size_t k, std::size_t from, std::size_t next_free) {
  std::size_t best = 0;
  for (std::size_t j = from; j < starts.size(); ++j) {
    if (starts[j] < next_free) continue;
    best = std::max(best, 1 + brute_max_disjoint(starts, k, j + 1, starts[j] + k));
  }
  return best;
}

}  // namespace

TEST_CASE("target prime streams") {
  auto inert = sqrt5_spec("1", 50);
  CHECK(norms(enumerate_target_primes(inert)) == std::vector<u64>{3, 7, 13, 17, 23, 37, 43, 47});
  auto split = sqrt5_spec("0", 50);
  CHECK(norms(enumerate_target_primes(split)) == std::vector<u64>{11, 19, 29, 31, 41});
  // Oracle: p odd with p = 2, 3 mod 5.
  auto big = sqrt5_spec("1", 20000);
  std::vector<u64> want;
  for (u64 p = 3; p <= 20000; ++p)
    if (oracle::is_prime_naive(p) && (p % 5 == 2 || p % 5 == 3)) want.push_back(p);
  CHECK(norms(enumerate_target_primes(big)) == want);
}

TEST_CASE("only degree-1 primes appear") {
  auto G = NumberField::make(IntPoly::parse("x^2 + 1"), std::nullopt);
  SearchSpec spec{G, {QuadraticExtension::from_radicand(FieldElement::parse(G, "a + 2"))}, FrobeniusVector::parse("1"),
                  2000};
  auto s = enumerate_target_primes(spec);
  CHECK_FALSE(s.empty());
  for (const auto& P : s) {
    CHECK(P.inertia_degree() == 1);
    CHECK(P.p % 4 == 1);
  }
}

TEST_CASE("bounded-gap tuples") {
  auto spec = sqrt5_spec("1", 50);
  spec.k = 2;
  spec.window = 4;
  CHECK(tuple_norms(find_bounded_gap_tuples(spec)) == std::vector<std::vector<u64>>{{3, 7}, {13, 17}, {43, 47}});
  spec.k = 3;
  spec.window = 10;
  CHECK(tuple_norms(find_bounded_gap_tuples(spec)) ==
        std::vector<std::vector<u64>>{{3, 7, 13}, {7, 13, 17}, {13, 17, 23}, {37, 43, 47}});
  spec.policy = OverlapPolicy::Disjoint;
  CHECK(tuple_norms(find_bounded_gap_tuples(spec)) == std::vector<std::vector<u64>>{{3, 7, 13}, {37, 43, 47}});
  spec.k = 1;
  spec.window = 0;
  spec.policy = OverlapPolicy::Sliding;
  CHECK(find_bounded_gap_tuples(spec).size() == 8);
}

TEST_CASE("every reported tuple rechecks against its definition") {
  auto Q = rationals();
  std::vector<QuadraticExtension> Ls{QuadraticExtension::from_radicand(FieldElement::from_integer(Q, 5)),
                                     QuadraticExtension::from_radicand(FieldElement::from_integer(Q, 13))};
  SearchSpec spec{Q, Ls, FrobeniusVector::parse("1,1"), 100000, {}, 3, 60, OverlapPolicy::Sliding};
  auto tuples = find_bounded_gap_tuples(spec);
  CHECK_FALSE(tuples.empty());
  for (const auto& t : tuples) {
    CHECK(t.primes.size() == 3);
    CHECK(t.span <= 60);
    for (std::size_t i = 0; i < t.primes.size(); ++i) {
      const auto& P = t.primes[i];
      CHECK(P.inertia_degree() == 1);
      if (i) CHECK(t.primes[i - 1].p < P.p);
      for (const auto& L : Ls) CHECK(split_symbol(P, L) == SplitSymbol::Inert);
    }
  }
}

TEST_CASE("stream prefix property") {
  auto K = NumberField::make(IntPoly::parse("x^3 - 2"), std::nullopt);
  std::vector<QuadraticExtension> Ls{QuadraticExtension::from_trace(FieldElement::parse(K, "a"))};
  SearchSpec a{K, Ls, FrobeniusVector::parse("1"), 3000}, b{K, Ls, FrobeniusVector::parse("1"), 9000};
  auto sa = enumerate_target_primes(a), sb = enumerate_target_primes(b);
  REQUIRE(sb.size() >= sa.size());
  CHECK(std::equal(sa.begin(), sa.end(), sb.begin()));
  for (std::size_t i = 1; i < sb.size(); ++i) CHECK(sb[i - 1].p < sb[i].p);
}

TEST_CASE("avoid set and multiple degree-1 primes") {
  auto K = NumberField::make(IntPoly::parse("x^3 - 2"), std::nullopt);
  std::vector<QuadraticExtension> Ls{QuadraticExtension::from_trace(FieldElement::parse(K, "a"))};
  SearchSpec spec{K, Ls, FrobeniusVector::parse("1"), 200};
  auto s = enumerate_target_primes(spec);
  REQUIRE_FALSE(s.empty());
  spec.avoid = {s.front()};
  auto t = enumerate_target_primes(spec);
  for (const auto& P : t) CHECK_FALSE(P == s.front());
  // Each rational prime appears at most once.
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i - 1].p != t[i].p);
}

TEST_CASE("greedy disjoint selection is maximal") {
  std::mt19937 rng(41);
  auto full = enumerate_target_primes(sqrt5_spec("1", 3000));
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t lo = rng() % (full.size() - 30);
    std::vector<PrimeIdeal> stream(full.begin() + lo, full.begin() + lo + 10 + rng() % 15);
    auto spec = sqrt5_spec("1", 3000);
    spec.k = 2 + rng() % 3;
    spec.window = 10 + rng() % 60;
    spec.policy = OverlapPolicy::Disjoint;
    auto got = find_bounded_gap_tuples(spec, stream);
    const auto ns = norms(stream);
    auto starts = feasible_starts(ns, spec.k, spec.window);
    CHECK(got.size() == brute_max_disjoint(starts, spec.k, 0, 0));
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].primes.back().p < got[i].primes.front().p);
  }
}

TEST_CASE("statistics") {
  auto spec = sqrt5_spec("1", 10);
  spec.k = 2;
  auto g = gap_statistics(spec);
  CHECK(g.count == 2);
  CHECK(g.low_confidence);
  CHECK(g.min_span == std::vector<u64>{0, 4});

  auto big = sqrt5_spec("1", 200000);
  big.k = 3;
  auto h = gap_statistics(big);
  CHECK_FALSE(h.low_confidence);
  CHECK(h.min_span[1] == 4);
  CHECK(std::abs(h.z_score) < 5);
  u64 gaps = 0;
  for (const auto& [gap, n] : h.gap_histogram) gaps += n;
  CHECK(gaps == h.count - 1);
  // Minimal spans never increase with the height.
  auto mid = sqrt5_spec("1", 20000);
  mid.k = 3;
  auto m = gap_statistics(mid);
  for (std::size_t j = 0; j < 3; ++j) CHECK(h.min_span[j] <= m.min_span[j]);
}

TEST_CASE("thread count does not change the output") {
  auto Q = rationals();
  std::vector<QuadraticExtension> Ls{QuadraticExtension::from_radicand(FieldElement::from_integer(Q, 5)),
                                     QuadraticExtension::from_radicand(FieldElement::from_integer(Q, 13))};
  SearchSpec one{Q, Ls, FrobeniusVector::parse("1,0"), 300000};
  one.segment_size = 50000;
  SearchSpec many = one;
  many.threads = 3;
  CHECK(enumerate_target_primes(one) == enumerate_target_primes(many));
  auto c1 = frobenius_census(Q, Ls, 100000, 1, 4096), c4 = frobenius_census(Q, Ls, 100000, 4, 4096);
  CHECK(c1.counts == c4.counts);
}

TEST_CASE("validation") {
  auto spec = sqrt5_spec("1,1", 100);
  CHECK_THROWS_AS(enumerate_target_primes(spec), Error);
  auto Q = rationals();
  auto L = QuadraticExtension::from_radicand(FieldElement::from_integer(Q, 5));
  SearchSpec dup{Q, {L, L}, FrobeniusVector::parse("1,1"), 100};
  try {
    enumerate_target_primes(dup);
    FAIL("expected CompositumDegenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CompositumDegenerate);
  }
  CHECK(parse_overlap_policy("sliding") == OverlapPolicy::Sliding);
  CHECK_THROWS_AS(parse_overlap_policy("greedy"), Error);
}
