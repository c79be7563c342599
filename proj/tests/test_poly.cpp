#include <algorithm>
#include <random>

#include "doctest.h"
#include "lspec/error.hpp"
#include "lspec/roots.hpp"
#include "oracles.hpp"

using namespace lspec;

namespace {

ModPoly random_mod_poly(std::mt19937& rng, u64 p, int degree) {
  std::vector<u64> c(degree + 1);
  for (auto& x : c) x = rng() % p;
  c.back() = 1 + rng() % (p - 1);
  return ModPoly(p, c);
}

IntPoly random_int_poly(std::mt19937& rng, int degree, int bound) {
  std::vector<Integer> c(degree + 1);
  for (auto& x : c) x = static_cast<int>(rng() % (2 * bound + 1)) - bound;
  if (c.back() == 0) c.back() = 1;
  return IntPoly(c);
}

bool lex_lowest_first(const oracle::Poly& a, const oracle::Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(IntPoly::parse("x^3 - x + 1") == IntPoly{1, -1, 0, 1});
  CHECK(IntPoly::parse("[1, -1, 0, 1]") == IntPoly{1, -1, 0, 1});
  CHECK(IntPoly::parse("2*x^2 + 3x - 4") == IntPoly{-4, 3, 2});
  CHECK(IntPoly{-1, 1, 3}.to_string() == "3*x^2 + x - 1");
  CHECK_THROWS_AS(IntPoly::parse("x^2 + y"), Error);
  CHECK_THROWS_AS(IntPoly::parse("x^2 +"), Error);
  CHECK_THROWS_AS(IntPoly::parse("x/2"), Error);
}

TEST_CASE("discriminants") {
  CHECK(discriminant(IntPoly::parse("x^3 - x + 1")) == -23);
  CHECK(discriminant(IntPoly::parse("x^3 - 2")) == -108);
  CHECK(discriminant(IntPoly::parse("x^2 + 1")) == -4);
  CHECK(discriminant(IntPoly::parse("x^2 - 5")) == 20);
  CHECK(discriminant(IntPoly::parse("x^2 - 2*x + 1")) == 0);
}

TEST_CASE("disc(fg) = disc(f) disc(g) Res(f,g)^2") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly f = random_int_poly(rng, 1 + rng() % 4, 6);
    IntPoly g = random_int_poly(rng, 1 + rng() % 3, 6);
    Integer r = resultant(f, g);
    CHECK(discriminant(f * g) == discriminant(f) * discriminant(g) * r * r);
  }
}

TEST_CASE("factorization examples") {
  auto show = [](const ModFactorization& fz) {
    std::vector<std::string> parts;
    for (const auto& f : fz.factors)
      parts.push_back("(" + f.factor.to_string() + ")^" + std::to_string(f.multiplicity));
    return parts;
  };
  CHECK(show(factor_mod_p(IntPoly::parse("x^4 + 1"), 3)) ==
        std::vector<std::string>{"(x^2 + x + 2)^1", "(x^2 + 2*x + 2)^1"});
  CHECK(show(factor_mod_p(IntPoly::parse("x^2 + 1"), 2)) == std::vector<std::string>{"(x + 1)^2"});
  CHECK(show(factor_mod_p(IntPoly::parse("x^3 - x + 1"), 5)) == std::vector<std::string>{"(x + 2)^1", "(x^2 + 3*x + 3)^1"});
  CHECK(factor_mod_p(IntPoly::parse("x^4 + 1"), 17).factors.size() == 4);
  CHECK_THROWS_AS(factor_mod_p(IntPoly::parse("x^2 + 1"), 9), Error);
  CHECK_THROWS_AS(factor_mod_p(IntPoly::parse("5*x + 5"), 5), Error);
}

TEST_CASE("factorization agrees with trial division") {
  std::mt19937 rng(7);
  const u64 primes[] = {2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 300; ++trial) {
    const u64 p = primes[rng() % 6];
    const int deg = 1 + static_cast<int>(rng() % (p <= 3 ? 8 : 5));
    ModPoly f = random_mod_poly(rng, p, deg);
    // Occasionally force repeated factors.
    if (trial % 5 == 0) f = f * f;
    auto got = factor_mod_p(f);
    auto want = oracle::factor(f.coeffs(), p);
    std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) { return lex_lowest_first(a.factor, b.factor); });
    REQUIRE(got.factors.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      CHECK(got.factors[i].factor.coeffs() == want[i].factor);
      CHECK(got.factors[i].multiplicity == want[i].multiplicity);
    }
    CHECK(got.unit == f.leading());
  }
}

TEST_CASE("Rabin test matches trial division") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const u64 p = (trial % 3 == 0) ? 2 : (trial % 3 == 1 ? 3 : 7);
    ModPoly f = random_mod_poly(rng, p, 1 + rng() % 7).monic();
    CHECK(is_irreducible_mod_p(f) == oracle::irreducible(f.coeffs(), p));
  }
}

TEST_CASE("large prime factorization is canonical and complete") {
  std::mt19937 rng(3);
  for (u64 p : {1000003ull, 4611686018427387847ull}) {
    for (int trial = 0; trial < 10; ++trial) {
      ModPoly f = random_mod_poly(rng, p, 2 + rng() % 6).monic();
      auto fz = factor_mod_p(f);
      ModPoly prod = ModPoly::constant(p, 1);
      for (std::size_t i = 0; i < fz.factors.size(); ++i) {
        CHECK(is_irreducible_mod_p(fz.factors[i].factor));
        if (i) CHECK(canonical_less(fz.factors[i - 1].factor, fz.factors[i].factor));
        for (int m = 0; m < fz.factors[i].multiplicity; ++m) prod = prod * fz.factors[i].factor;
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("division identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const u64 p = 101;
    ModPoly a = random_mod_poly(rng, p, rng() % 9), b = random_mod_poly(rng, p, rng() % 5);
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("roots mod p") {
  CHECK(roots_mod_p(ModPoly::from_int(IntPoly::parse("x^3 - 2"), 109)).size() == 3);
  CHECK(roots_mod_p(ModPoly::from_int(IntPoly::parse("x^2 + 1"), 7)).empty());
  CHECK(roots_mod_p(ModPoly::from_int(IntPoly::parse("x^2 + 1"), 5)) == std::vector<u64>{2, 3});
}

TEST_CASE("real root counts and certified boxes") {
  CHECK(count_real_roots(IntPoly::parse("x^3 - x + 1")) == 1);
  CHECK(count_real_roots(IntPoly::parse("x^3 - 2")) == 1);
  CHECK(count_real_roots(IntPoly::parse("x^2 + 1")) == 0);
  CHECK(count_real_roots(IntPoly::parse("x^4 - 10*x^2 + 1")) == 4);
  CHECK_THROWS_AS(count_real_roots(IntPoly::parse("x^2 - 2*x + 1")), Error);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    IntPoly f = random_int_poly(rng, 2 + rng() % 6, 9);
    if (!is_squarefree(f)) continue;
    auto boxes = isolate_complex_roots(f, 80);
    REQUIRE(boxes.size() == static_cast<std::size_t>(f.degree()));
    std::size_t reals = 0;
    for (const auto& b : boxes) {
      reals += b.real;
      CHECK(evaluate(f, b.box).contains_zero());
      Float limit(64);
      mpfr_set_ui_2exp(limit.get(), 1, -80, MPFR_RNDN);
      CHECK(b.box.re.width() <= limit);
    }
    CHECK(reals == count_real_roots(f));
  }
}
