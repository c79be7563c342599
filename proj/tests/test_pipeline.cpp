#include "doctest.h"
#include "lspec/error.hpp"
#include "lspec/pipeline.hpp"

using namespace lspec;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

const char* kBaseRequest = R"(
[field]
poly: x^3 - 2
disc: -108

[algebra]
ram_real: [0]
ram_primes: ["5:0"]

[extensions]
trace: a

[search]
k: 2
window: 20
height: 2000
zeta_cutoff: 10000
)";

TwinRequest base_request() { return parse_twin_request(kBaseRequest); }

}  // namespace

TEST_CASE("config parsing") {
  auto entries = parse_config("# comment\n[a]\nx: 1\ny = [2, 'b']  # trailing\n\n[b]\nshape: 2 = 1,2\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].section == "a");
  CHECK(entries[1].key == "y");
  CHECK(parse_list(entries[1].value) == std::vector<std::string>{"2", "b"});
  CHECK(entries[2].value == "2 = 1,2");
  CHECK_THROWS_AS(parse_config("no separator here"), Error);
  CHECK(parse_count("1e6") == 1'000'000);
  CHECK(parse_count("100_000") == 100'000);
  CHECK_THROWS_AS(parse_count("1.5e3"), Error);
  CHECK_THROWS_AS(parse_count("-4"), Error);
  auto spec = parse_field_spec(parse_config("poly: x^2 - 8\ndisc: 8\nshape: 2 = 1"));
  CHECK(spec.shapes.at(2) == std::vector<int>{1});
  CHECK(spec.build().discriminant() == 8);
}

TEST_CASE("request parsing round trip") {
  auto r = base_request();
  CHECK(r.base_ram == std::vector<std::string>{"real:0", "5:0"});
  CHECK(r.k == 2);
  CHECK(r.policy == OverlapPolicy::Disjoint);
  auto again = TwinRequest::from_json(r.to_json());
  CHECK(again.to_json() == r.to_json());
  CHECK_THROWS_AS(parse_twin_request("[search]\nk: 2\n"), Error);
  CHECK_THROWS_AS(parse_twin_request(std::string(kBaseRequest) + "bogus: 1\n"), Error);
}

TEST_CASE("base validation") {
  auto ctx = validate_base(base_request());
  CHECK(ctx.compositum.full);
  CHECK(ctx.base_embeddings.at(0).admits);
  REQUIRE(ctx.geodesics.at(0).has_value());

  auto r = base_request();
  r.base_ram = {"5:0", "7:0"};
  CHECK(kind_of([&] { validate_base(r); }) == ErrorKind::RealPlaceUnramified);

  r = base_request();
  r.extensions.push_back({ExtensionSpec::Kind::Radicand, "a^2 - 4"});
  CHECK(kind_of([&] { validate_base(r); }) == ErrorKind::CompositumDegenerate);

  r = base_request();
  r.extensions = {{ExtensionSpec::Kind::Radicand, "5"}};
  CHECK(kind_of([&] { validate_base(r); }) == ErrorKind::EmbeddingFails);

  r = base_request();
  r.field.polynomial = "x^2 + x - 1";
  r.field.discriminant.reset();
  r.base_ram = {"real:0", "real:1"};
  CHECK(kind_of([&] { validate_base(r); }) == ErrorKind::NotKleinian);

  r = base_request();
  r.extensions = {{ExtensionSpec::Kind::Trace, "1"}};
  CHECK(kind_of([&] { validate_base(r); }) == ErrorKind::NotLoxodromic);
}

TEST_CASE("choosing P0") {
  // A rationals context assembled by hand; validate_base would reject it.
  auto Q = NumberField::make(IntPoly::parse("x - 1"), std::nullopt);
  TwinRequest r;
  r.height = 100;
  TwinContext ctx{r,
                  Q,
                  QuaternionAlgebra(RamificationSet(Q, {}, {})),
                  {QuadraticExtension::from_radicand(FieldElement::from_integer(Q, 5))},
                  {},
                  {},
                  {}};
  CHECK(choose_p0(ctx).p == 3);
  ctx.request.p0 = "7:0";
  CHECK(choose_p0(ctx).p == 7);
  ctx.request.p0 = "11:0";
  CHECK_THROWS_AS(choose_p0(ctx), Error);
  ctx.request.p0.reset();
  ctx.request.height = 2;
  CHECK(kind_of([&] { choose_p0(ctx); }) == ErrorKind::NoneBelowHeight);
}

TEST_CASE("construction report") {
  auto report = run_twins(base_request());
  CHECK(report["schema_version"] == kReportSchemaVersion);
  REQUIRE_FALSE(report["tuples"].empty());
  for (const auto& t : report["tuples"]) {
    const auto& algebras = t["algebras"];
    REQUIRE(algebras.size() == 2);
    const Integer n1(t["primes"][0]["norm"].get<std::string>()), n2(t["primes"][1]["norm"].get<std::string>());
    const Integer v1(algebras[0]["volume"]["norm_product"].get<std::string>());
    const Integer v2(algebras[1]["volume"]["norm_product"].get<std::string>());
    CHECK(Rational(v1, v2) == Rational(n1 - 1, n2 - 1));
    CHECK(t["volume_span"]["within_bound"] == true);
    for (const auto& a : algebras) CHECK(a["ramification"]["cardinality"] == 4);
  }
  auto v = verify_report(report);
  CHECK(v.ok);
  CHECK(v.checks > 10);

  auto tampered = report;
  tampered["tuples"][0]["primes"][1]["label"] = "11:0";
  CHECK_FALSE(verify_report(tampered).ok);
  tampered = report;
  tampered["tuples"][0]["algebras"][0]["volume"]["norm_product"] = "1";
  CHECK_FALSE(verify_report(tampered).ok);

  CHECK(run_twins(base_request()).dump() == report.dump());
}

TEST_CASE("no tuples") {
  auto r = base_request();
  r.window = 0;
  CHECK(kind_of([&] { run_twins(r); }) == ErrorKind::NoTuplesFound);
}

TEST_CASE("manifold mode rejects tuples without cyclotomic witnesses") {
  // Every target prime is inert in K(sqrt(-3)), so N(P) = 2 mod 3 throughout.
  auto r = base_request();
  r.extensions.push_back({ExtensionSpec::Kind::Radicand, "-3"});
  r.manifold = true;
  r.height = 3000;
  CHECK(kind_of([&] { run_twins(r); }) == ErrorKind::NoTuplesFound);

  auto ok = base_request();
  ok.manifold = true;
  ok.base_ram = {"real:0", "109:0"};
  auto report = run_twins(ok);
  for (const auto& t : report["tuples"])
    for (const auto& a : t["algebras"]) CHECK(a["torsion"]["torsion_free"] == true);
  CHECK(verify_report(report).ok);
}
