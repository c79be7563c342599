#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "lspec/error.hpp"
#include "lspec/volume.hpp"
#include "oracles.hpp"

using namespace lspec;

namespace {

NumberField field(const char* f) { return NumberField::make(IntPoly::parse(f), std::nullopt); }

double to_d(const Float& x) { return x.to_double(); }

}  // namespace

TEST_CASE("zeta(2) of the rationals and the Gaussian field") {
  const long double z2 = oracle::zeta2_series();
  const long double g = oracle::catalan_series();
  auto zq = dedekind_zeta_2(field("x - 1"), 100000);
  CHECK(std::fabs(to_d(zq.value) - (double)z2) <= to_d(zq.epsilon));
  CHECK(zq.enclosure.lo().to_double() <= (double)z2);
  CHECK((double)z2 <= zq.enclosure.hi().to_double());
  auto zg = dedekind_zeta_2(field("x^2 + 1"), 100000);
  CHECK(std::fabs(to_d(zg.value) - (double)(z2 * g)) <= to_d(zg.epsilon));
  CHECK(zg.bracketed.empty());
  CHECK_THROWS_AS(dedekind_zeta_2(field("x - 1"), 99), Error);
}

TEST_CASE("zeta monotonicity and doubling") {
  for (const char* f : {"x - 1", "x^2 + 1", "x^3 - x + 1", "x^3 - 2"}) {
    auto K = field(f);
    auto a = dedekind_zeta_2(K, 5000), b = dedekind_zeta_2(K, 10000);
    CHECK(a.value <= b.value);
    Float diff(128);
    mpfr_sub(diff.get(), b.value.get(), a.value.get(), MPFR_RNDU);
    CHECK(diff < a.epsilon);
    CHECK(a.enclosure.contains(Interval::point(b.value)));
  }
}

TEST_CASE("excluded primes without a derivable shape are bracketed") {
  auto K = NumberField::make(IntPoly::parse("x^2 - 8"), Integer(8));
  auto z = dedekind_zeta_2(K, 1000);
  CHECK(z.bracketed == std::vector<u64>{2});
  auto declared = NumberField::make(IntPoly::parse("x^2 - 8"), NumberField::Options{Integer(8), {{2, {1}}}});
  auto w = dedekind_zeta_2(declared, 1000);
  CHECK(w.bracketed.empty());
  CHECK(z.enclosure.contains(w.enclosure));
}

TEST_CASE("Borel volumes") {
  auto G = field("x^2 + 1");
  auto z = dedekind_zeta_2(G, 100000);
  auto R = RamificationSet::parse(G, {"3:0", "7:0"});
  auto v = borel_volume(R, z);
  CHECK(v.norm_product == 384);
  const double zeta = (double)(oracle::zeta2_series() * oracle::catalan_series());
  const double want = 8.0 * zeta / (4 * M_PI * M_PI) * 384;
  CHECK(v.value().mid().to_double() == doctest::Approx(want).epsilon(1e-5));
  CHECK(v.value().mid().to_double() == doctest::Approx(117.24).epsilon(1e-3));
  auto empty = borel_volume(RamificationSet::parse(G, {}), z);
  CHECK(empty.norm_product == 1);
  auto K = field("x^3 - 2");
  auto zk = dedekind_zeta_2(K, 1000);
  CHECK_THROWS_AS(borel_volume(RamificationSet::parse(K, {"real:0", "opaque:d"}), zk), Error);
  CHECK(borel_volume(RamificationSet::parse(K, {"real:0", "opaque:d@2"}), zk).norm_product == 1);
}

TEST_CASE("volume ratios are exact") {
  auto K = field("x^3 - 2");
  auto z = dedekind_zeta_2(K, 1000);
  auto base = QuaternionAlgebra(RamificationSet::parse(K, {"real:0", "5:0"}));
  std::mt19937 rng(8);
  std::vector<PrimeIdeal> pool;
  for (u64 p = 7; p < 400; p = next_prime(p + 1))
    for (const auto& P : factor_prime(K, p)) pool.push_back(P);
  for (int trial = 0; trial < 30; ++trial) {
    auto P0 = pool[rng() % pool.size()], Pi = pool[rng() % pool.size()];
    if (P0 == Pi) continue;
    auto B = extend_ramification(base, P0, Pi);
    auto r = volume_ratio(borel_volume(B.ramification(), z), borel_volume(base.ramification(), z));
    CHECK(r == Rational((P0.norm() - 1) * (Pi.norm() - 1)));
  }
  auto other = dedekind_zeta_2(K, 2000);
  CHECK_THROWS_AS(volume_ratio(borel_volume(base.ramification(), z), borel_volume(base.ramification(), other)), Error);
}

TEST_CASE("geodesics") {
  auto K = field("x^3 - 2");
  auto g = trace_to_geodesic(FieldElement::from_integer(K, 3));
  CHECK(g.length.mid().to_double() == doctest::Approx(2 * std::log((3 + std::sqrt(5.0)) / 2)).epsilon(1e-15));
  CHECK_THROWS_AS(trace_to_geodesic(FieldElement::from_integer(K, 2)), Error);
  CHECK_THROWS_AS(trace_to_geodesic(FieldElement::from_integer(K, -1)), Error);
  CHECK_THROWS_AS(trace_to_geodesic(FieldElement::from_integer(field("x^2 + x - 1"), 3)), Error);

  // Purely imaginary image: lambda = i y / 2 + sqrt(1 - y^2 / 4) rotated; oracle from the quadratic formula.
  auto G = field("x^2 + 1");
  auto h = trace_to_geodesic(FieldElement::parse(G, "3*a"));
  std::complex<double> t(0, 3), lam = (t + std::sqrt(t * t - 4.0)) / 2.0;
  if (std::abs(lam) < 1) lam = 1.0 / lam;
  CHECK(h.length.mid().to_double() == doctest::Approx(2 * std::log(std::abs(lam))).epsilon(1e-14));
  CHECK(h.holonomy.mid().to_double() == doctest::Approx(std::arg(lam * lam)).epsilon(1e-14));

  // lambda + 1/lambda reproduces the image of t.
  for (const char* tr : {"a", "a^2 - a", "2*a + 1", "-a^2"}) {
    auto d = trace_to_geodesic(FieldElement::parse(K, tr), 96);
    auto inv = ComplexInterval(Interval::point(1, 200), Interval::point(0, 200)) / d.lambda;
    auto sum = d.lambda + inv;
    CHECK(sum.re.intersects(d.trace_image.re));
    CHECK(sum.im.intersects(d.trace_image.im));
    CHECK(d.length.positive());
    Float limit(64);
    mpfr_set_ui_2exp(limit.get(), 1, -96, MPFR_RNDN);
    CHECK(d.length.width() <= limit);
  }
}
