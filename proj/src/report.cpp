#include "lspec/report.hpp"

namespace lspec {

Json to_json(const Interval& x) {
  return Json{{"mid", x.mid().to_string(kReportDigits)}, {"radius", x.radius().to_string(6)}};
}

Json to_json(const PrimeIdeal& P) {
  return Json{{"label", P.label()}, {"p", P.p}, {"norm", P.norm().str()}, {"factor", P.factor.to_string()}};
}

Json to_json(const NumberField& K) {
  Json excluded = Json::array();
  for (u64 p : K.excluded_primes()) excluded.push_back(p);
  Json j{{"polynomial", K.polynomial().to_string()},
         {"degree", K.degree()},
         {"signature", {K.real_places(), K.complex_places()}},
         {"polynomial_discriminant", K.polynomial_discriminant().str()},
         {"discriminant", K.discriminant().str()},
         {"discriminant_derived", K.discriminant_derived()},
         {"excluded_primes", excluded}};
  if (K.excluded_cofactor() != 1) j["excluded_cofactor"] = K.excluded_cofactor().str();
  return j;
}

Json to_json(const RamificationSet& ram) {
  Json finite = Json::array();
  for (const auto& P : ram.finite()) finite.push_back(to_json(P));
  Json opaque = Json::array();
  for (const auto& o : ram.opaque()) {
    Json e{{"label", o.label}};
    if (o.norm) e["norm"] = o.norm->str();
    opaque.push_back(e);
  }
  return Json{{"tokens", ram.tokens()},
              {"ram_real", ram.real()},
              {"ram_primes", finite},
              {"ram_opaque", opaque},
              {"cardinality", ram.size()}};
}

Json to_json(const EmbeddingCertificate& cert) {
  Json places = Json::array();
  for (const auto& s : cert.places) places.push_back(Json{{"place", s.place}, {"symbol", std::string(to_string(s.symbol))}});
  return Json{{"admits", cert.admits}, {"places", places}};
}

Json to_json(const CompositumCheck& c) {
  Json basis = Json::array();
  for (const auto& v : c.basis) basis.push_back(v.to_string());
  return Json{{"r", c.r}, {"rank", c.rank}, {"full", c.full}, {"basis", basis}, {"primes_sampled", c.primes_sampled}};
}

Json to_json(const GapStatistics& g) {
  Json hist = Json::object();
  for (const auto& [gap, n] : g.gap_histogram) hist[std::to_string(gap)] = n;
  return Json{{"count", g.count},
              {"prime_count", g.prime_count},
              {"eligible", g.eligible},
              {"empirical_density", g.empirical_density},
              {"predicted_density", g.predicted_density},
              {"z_score", g.z_score},
              {"min_span", g.min_span},
              {"low_confidence", g.low_confidence},
              {"gap_histogram", hist}};
}

Json to_json(const PrimeTuple& t) {
  Json primes = Json::array();
  for (std::size_t i = 0; i < t.primes.size(); ++i) {
    Json P = to_json(t.primes[i]);
    P["frobenius"] = t.witnesses[i].to_string();
    primes.push_back(P);
  }
  return Json{{"primes", primes}, {"span", t.span}};
}

Json to_json(const TorsionCheck& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(Json{{"n", r.n}, {"witness", r.witness ? Json(r.witness->label()) : Json("FAIL")}});
  return Json{{"torsion_free", t.torsion_free},
              {"cyclotomic_degrees", t.scan.degrees},
              {"sample_height", t.scan.height},
              {"stable", t.scan.stable},
              {"rows", rows}};
}

Json to_json(const ZetaValue& z) {
  return Json{{"cutoff", z.cutoff},
              {"value", z.value.to_string(kReportDigits)},
              {"epsilon", z.epsilon.to_string(6)},
              {"tail_bound", z.tail_bound.to_string(6)},
              {"enclosure", {z.enclosure.lo().to_string(kReportDigits), z.enclosure.hi().to_string(kReportDigits)}},
              {"bracketed_primes", z.bracketed}};
}

Json to_json(const BorelVolume& v) {
  Json j = to_json(v.value());
  j["norm_product"] = v.norm_product.str();
  return j;
}

Json to_json(const GeodesicDatum& g) {
  return Json{{"trace", g.trace.to_string()},
              {"radicand", g.radicand.to_string()},
              {"trace_image", {{"re", to_json(g.trace_image.re)}, {"im", to_json(g.trace_image.im)}}},
              {"length", to_json(g.length)},
              {"holonomy", to_json(g.holonomy)}};
}

}  // namespace lspec
