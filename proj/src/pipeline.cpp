#include "lspec/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "lspec/error.hpp"
#include "lspec/report.hpp"

namespace lspec {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void bad_entry(const ConfigEntry& e, const std::string& why) {
  throw Error(ErrorKind::InvalidInput, "line " + std::to_string(e.line) + " (" + e.key + "): " + why);
}

int parse_int(const ConfigEntry& e) {
  try {
    std::size_t used = 0;
    int v = std::stoi(e.value, &used);
    if (used == e.value.size()) return v;
  } catch (const std::logic_error&) {
  }
  bad_entry(e, "expected an integer, got '" + e.value + "'");
}

bool parse_bool(const ConfigEntry& e) {
  std::string v = e.value;
  std::transform(v.begin(), v.end(), v.begin(), ::tolower);
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  bad_entry(e, "expected a boolean, got '" + e.value + "'");
}

void parse_shape(std::string_view value, std::map<u64, std::vector<int>>& shapes) {
  const auto sep = value.find_first_of("=:");
  if (sep == std::string_view::npos) throw Error(ErrorKind::InvalidInput, "shape must look like 'p = 1,2'");
  const u64 p = parse_count(trim(value.substr(0, sep)));
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, "shape key " + std::to_string(p) + " is not prime");
  std::vector<int> degrees;
  for (const auto& tok : parse_list(value.substr(sep + 1))) {
    try {
      degrees.push_back(std::stoi(tok));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidInput, "bad residue degree '" + tok + "'");
    }
  }
  if (degrees.empty()) throw Error(ErrorKind::InvalidInput, "empty shape at " + std::to_string(p));
  shapes[p] = std::move(degrees);
}

FrobeniusVector all_inert(std::size_t r) { return FrobeniusVector::all_ones(r); }

bool is_all_inert(const PrimeIdeal& P, const std::vector<QuadraticExtension>& exts) {
  for (const auto& L : exts)
    if (reduce(L.radicand().denominator(), P.p) == 0) return false;
  auto fv = frobenius_vector(P, exts);
  const auto* v = std::get_if<FrobeniusVector>(&fv);
  return v && *v == all_inert(exts.size());
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

u64 parse_count(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '_' && c != ',' && !std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto fail = [&]() -> u64 {
    throw Error(ErrorKind::InvalidInput, "expected a nonnegative integer, got '" + std::string(text) + "'");
  };
  if (s.empty()) return fail();
  const auto e = s.find_first_of("eE");
  const std::string mant = s.substr(0, e);
  if (mant.empty() || !std::all_of(mant.begin(), mant.end(), ::isdigit)) return fail();
  Integer v(mant);
  if (e != std::string::npos) {
    const std::string ex = s.substr(e + 1);
    if (ex.empty() || ex.size() > 2 || !std::all_of(ex.begin(), ex.end(), ::isdigit)) return fail();
    v *= boost::multiprecision::pow(Integer(10), std::stoi(ex));
  }
  if (v > Integer(std::numeric_limits<u64>::max())) return fail();
  return static_cast<u64>(v);
}

std::vector<ConfigEntry> parse_config(std::string_view text) {
  std::vector<ConfigEntry> out;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty() || s[0] == ';') continue;
    if (s.front() == '[' && s.back() == ']') {
      section = trim(s.substr(1, s.size() - 2));
      continue;
    }
    const auto sep = s.find_first_of(":=");
    if (sep == std::string::npos || sep == 0)
      throw Error(ErrorKind::InvalidInput, "line " + std::to_string(line) + ": expected 'key: value'");
    out.push_back({section, trim(s.substr(0, sep)), trim(s.substr(sep + 1)), line});
  }
  return out;
}

std::vector<std::string> parse_list(std::string_view value) {
  std::string s = trim(value);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorKind::InvalidInput, "unterminated list '" + s + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (tok.size() >= 2 && (tok.front() == '"' || tok.front() == '\'') && tok.back() == tok.front())
      tok = tok.substr(1, tok.size() - 2);
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

// ---------------------------------------------------------------------------

NumberField FieldSpec::build() const {
  return NumberField::make(IntPoly::parse(polynomial), NumberField::Options{discriminant, shapes});
}

nlohmann::ordered_json FieldSpec::to_json() const {
  Json shapes_json = Json::object();
  for (const auto& [p, d] : shapes) shapes_json[std::to_string(p)] = d;
  return Json{{"polynomial", polynomial},
              {"discriminant", discriminant ? Json(discriminant->str()) : Json(nullptr)},
              {"shapes", shapes_json}};
}

FieldSpec FieldSpec::from_json(const nlohmann::ordered_json& j) {
  FieldSpec f;
  f.polynomial = j.at("polynomial").get<std::string>();
  if (!j.at("discriminant").is_null()) f.discriminant = Integer(j.at("discriminant").get<std::string>());
  for (const auto& [p, d] : j.at("shapes").items()) f.shapes[parse_count(p)] = d.get<std::vector<int>>();
  return f;
}

FieldSpec parse_field_spec(const std::vector<ConfigEntry>& entries) {
  FieldSpec f;
  for (const auto& e : entries) {
    if (e.key == "poly" || e.key == "polynomial") {
      f.polynomial = e.value;
    } else if (e.key == "disc" || e.key == "discriminant") {
      try {
        f.discriminant = Integer(e.value);
      } catch (const std::exception&) {
        bad_entry(e, "bad discriminant '" + e.value + "'");
      }
    } else if (e.key == "shape") {
      parse_shape(e.value, f.shapes);
    } else {
      bad_entry(e, "unknown field key");
    }
  }
  if (f.polynomial.empty()) throw Error(ErrorKind::InvalidInput, "field description has no 'poly' entry");
  return f;
}

FieldSpec load_field_spec(const std::filesystem::path& path) { return parse_field_spec(parse_config(read_file(path))); }

QuadraticExtension ExtensionSpec::build(const NumberField& field) const {
  FieldElement x = FieldElement::parse(field, element);
  return kind == Kind::Trace ? QuadraticExtension::from_trace(x) : QuadraticExtension::from_radicand(x);
}

nlohmann::ordered_json TwinRequest::to_json() const {
  Json exts = Json::array();
  for (const auto& e : extensions)
    exts.push_back(Json{{"kind", e.kind == ExtensionSpec::Kind::Trace ? "trace" : "radicand"}, {"element", e.element}});
  return Json{{"field", field.to_json()},
              {"base_ram", base_ram},
              {"extensions", exts},
              {"k", k},
              {"window", window},
              {"height", height},
              {"policy", std::string(to_string(policy))},
              {"manifold", manifold},
              {"p0", p0 ? Json(*p0) : Json(nullptr)},
              {"n_max", n_max},
              {"torsion_height", torsion_height},
              {"zeta_cutoff", zeta_cutoff},
              {"precision", precision}};
}

TwinRequest TwinRequest::from_json(const nlohmann::ordered_json& j) {
  TwinRequest r;
  r.field = FieldSpec::from_json(j.at("field"));
  r.base_ram = j.at("base_ram").get<std::vector<std::string>>();
  for (const auto& e : j.at("extensions")) {
    ExtensionSpec x;
    x.kind = e.at("kind") == "trace" ? ExtensionSpec::Kind::Trace : ExtensionSpec::Kind::Radicand;
    x.element = e.at("element").get<std::string>();
    r.extensions.push_back(x);
  }
  r.k = j.at("k");
  r.window = j.at("window");
  r.height = j.at("height");
  r.policy = parse_overlap_policy(j.at("policy").get<std::string>());
  r.manifold = j.at("manifold");
  if (!j.at("p0").is_null()) r.p0 = j.at("p0").get<std::string>();
  r.n_max = j.at("n_max");
  r.torsion_height = j.at("torsion_height");
  r.zeta_cutoff = j.at("zeta_cutoff");
  r.precision = j.at("precision");
  return r;
}

TwinRequest parse_twin_request(std::string_view text, const std::filesystem::path& base_dir) {
  TwinRequest r;
  std::vector<ConfigEntry> field_entries;
  std::optional<std::filesystem::path> field_file;
  for (const auto& e : parse_config(text)) {
    if (e.section == "field") {
      if (e.key == "file")
        field_file = base_dir / e.value;
      else
        field_entries.push_back(e);
    } else if (e.section == "algebra") {
      if (e.key == "ram_real") {
        for (const auto& v : parse_list(e.value)) r.base_ram.push_back("real:" + v);
      } else if (e.key == "ram_primes") {
        for (const auto& v : parse_list(e.value)) r.base_ram.push_back(v);
      } else if (e.key == "ram_opaque") {
        for (const auto& v : parse_list(e.value)) r.base_ram.push_back("opaque:" + v);
      } else {
        bad_entry(e, "unknown algebra key");
      }
    } else if (e.section == "extensions") {
      if (e.key != "trace" && e.key != "radicand") bad_entry(e, "expected 'trace' or 'radicand'");
      r.extensions.push_back({e.key == "trace" ? ExtensionSpec::Kind::Trace : ExtensionSpec::Kind::Radicand, e.value});
    } else if (e.section == "search") {
      if (e.key == "k") r.k = parse_int(e);
      else if (e.key == "window") r.window = parse_count(e.value);
      else if (e.key == "height") r.height = parse_count(e.value);
      else if (e.key == "policy") r.policy = parse_overlap_policy(e.value);
      else if (e.key == "manifold") r.manifold = parse_bool(e);
      else if (e.key == "p0") r.p0 = e.value;
      else if (e.key == "n_max") r.n_max = parse_int(e);
      else if (e.key == "torsion_height") r.torsion_height = parse_count(e.value);
      else if (e.key == "zeta_cutoff") r.zeta_cutoff = parse_count(e.value);
      else if (e.key == "precision") r.precision = parse_int(e);
      else if (e.key == "threads") r.threads = static_cast<unsigned>(parse_int(e));
      else bad_entry(e, "unknown search key");
    } else {
      bad_entry(e, "unknown section '" + e.section + "'");
    }
  }
  if (field_file) {
    if (!field_entries.empty()) throw Error(ErrorKind::InvalidInput, "[field] has both 'file' and inline keys");
    r.field = load_field_spec(*field_file);
  } else {
    r.field = parse_field_spec(field_entries);
  }
  if (r.extensions.empty()) throw Error(ErrorKind::InvalidInput, "request lists no extensions");
  return r;
}

TwinRequest load_twin_request(const std::filesystem::path& path) {
  return parse_twin_request(read_file(path), path.parent_path());
}

// ---------------------------------------------------------------------------

TwinContext validate_base(const TwinRequest& request) {
  if (request.k < 2) throw Error(ErrorKind::InvalidInput, "k must be at least 2");
  if (request.height < 3) throw Error(ErrorKind::InvalidInput, "height must be at least 3");
  NumberField K = request.field.build();
  QuaternionAlgebra base(RamificationSet::parse(K, request.base_ram));
  if (K.complex_places() != 1)
    throw Error(ErrorKind::NotKleinian,
                "field has " + std::to_string(K.complex_places()) + " complex places; exactly one is required");
  auto admissible = is_kleinian_admissible(base);
  if (!admissible.ok) throw Error(ErrorKind::RealPlaceUnramified, join(admissible.reasons, "; "));

  std::vector<QuadraticExtension> exts;
  for (const auto& spec : request.extensions) exts.push_back(spec.build(K));

  std::vector<EmbeddingCertificate> certs;
  for (const auto& L : exts) {
    auto cert = admits_embedding(base, L);
    if (!cert.admits) {
      std::vector<std::string> split;
      for (const auto& s : cert.places)
        if (s.symbol == SplitSymbol::Split) split.push_back(s.place);
      throw Error(ErrorKind::EmbeddingFails, L.label() + " splits at " + join(split, ", ") + " of Ram(B)");
    }
    certs.push_back(std::move(cert));
  }
  auto compositum = compositum_degree_check(exts, std::max<u64>(request.height, 10'000));
  if (!compositum.full)
    throw Error(ErrorKind::CompositumDegenerate, "the extensions generate a compositum of degree 2^" +
                                                     std::to_string(compositum.rank) + " < 2^" +
                                                     std::to_string(compositum.r));
  std::vector<std::optional<GeodesicDatum>> geodesics;
  for (const auto& L : exts)
    geodesics.push_back(L.trace() ? std::optional(trace_to_geodesic(*L.trace(), request.precision)) : std::nullopt);
  return TwinContext{request, K, std::move(base), std::move(exts), std::move(certs), std::move(geodesics),
                     std::move(compositum)};
}

PrimeIdeal choose_p0(const TwinContext& ctx) {
  const auto& ram = ctx.base.ramification();
  if (ctx.request.p0) {
    PrimeIdeal P = prime_from_label(ctx.field, *ctx.request.p0);
    if (ram.contains(P)) throw Error(ErrorKind::InvalidInput, "P0 override " + P.label() + " is already in Ram(B)");
    if (!is_all_inert(P, ctx.extensions))
      throw Error(ErrorKind::InvalidInput, "P0 override " + P.label() + " is not inert in every extension");
    return P;
  }
  for (u64 p = 3; p <= ctx.request.height; p = next_prime(p + 1)) {
    if (ctx.field.is_excluded(p)) continue;
    for (const auto& P : degree_one_primes(ctx.field, p))
      if (!ram.contains(P) && is_all_inert(P, ctx.extensions)) return P;
  }
  throw Error(ErrorKind::NoneBelowHeight,
              "no degree-1 prime of norm <= " + std::to_string(ctx.request.height) + " is inert in every extension");
}

nlohmann::ordered_json construct_twins(const TwinContext& ctx) {
  const auto& req = ctx.request;
  const auto& base = ctx.base;
  const PrimeIdeal p0 = choose_p0(ctx);

  SearchSpec spec{ctx.field, ctx.extensions, all_inert(ctx.extensions.size()), req.height, base.ramification().finite(),
                  req.k, req.window, req.policy, std::max(1u, req.threads)};
  spec.avoid.push_back(p0);
  const TargetScan scan = scan_target_primes(spec);
  const GapStatistics stats = gap_statistics(spec, scan);
  const auto tuples = find_bounded_gap_tuples(spec, scan.stream);

  const ZetaValue zeta = dedekind_zeta_2(ctx.field, req.zeta_cutoff, req.precision);
  const BorelVolume base_volume = borel_volume(base.ramification(), zeta);
  std::optional<CyclotomicScan> cyclotomic;
  if (req.manifold) cyclotomic = cyclotomic_quadratic_degrees(ctx.field, req.n_max, req.torsion_height);

  Json accepted = Json::array(), skipped = Json::array();
  for (const auto& t : tuples) {
    Json algebras = Json::array();
    std::vector<BorelVolume> volumes;
    std::vector<std::string> problems;
    for (const auto& Pi : t.primes) {
      QuaternionAlgebra Bi = extend_ramification(base, p0, Pi);
      Json embeddings = Json::array();
      for (const auto& L : ctx.extensions) {
        auto cert = admits_embedding(Bi, L);
        if (!cert.admits) problems.push_back(L.label() + " does not embed in the algebra for " + Pi.label());
        Json c = to_json(cert);
        c["extension"] = L.label();
        embeddings.push_back(c);
      }
      Json a{{"added", {p0.label(), Pi.label()}}, {"ramification", to_json(Bi.ramification())}, {"embeddings", embeddings}};
      if (cyclotomic) {
        auto torsion = torsion_free_check(Bi, *cyclotomic);
        if (!torsion.torsion_free) {
          std::vector<std::string> failing;
          for (const auto& row : torsion.rows)
            if (!row.witness) failing.push_back(std::to_string(row.n));
          problems.push_back("algebra for " + Pi.label() + " has no splitting witness for n = " + join(failing, ", "));
        }
        a["torsion"] = to_json(torsion);
      }
      volumes.push_back(borel_volume(Bi.ramification(), zeta));
      a["volume"] = to_json(volumes.back());
      algebras.push_back(std::move(a));
    }
    Json tuple_json = to_json(t);
    if (!problems.empty()) {
      skipped.push_back(Json{{"primes", tuple_json["primes"]}, {"reasons", problems}});
      continue;
    }
    Json distinct = Json::array();
    for (std::size_t i = 0; i < t.primes.size(); ++i)
      for (std::size_t j = i + 1; j < t.primes.size(); ++j)
        distinct.push_back(Json{{"pair", {i, j}}, {"in_first_only", t.primes[i].label()}});
    auto [lo, hi] = std::minmax_element(volumes.begin(), volumes.end(),
                                        [](const auto& a, const auto& b) { return a.norm_product < b.norm_product; });
    const Integer span_product = hi->norm_product - lo->norm_product;
    const Integer bound_product = base_volume.norm_product * (p0.norm() - 1) * Integer(req.window);
    tuple_json["algebras"] = std::move(algebras);
    tuple_json["pairwise_distinct"] = std::move(distinct);
    tuple_json["volume_span"] = Json{
        {"norm_product_span", span_product.str()},
        {"bound_norm_product", bound_product.str()},
        {"span", to_json(base_volume.field_factor * Interval::from_integer(span_product, req.precision))},
        {"bound", to_json(base_volume.field_factor * Interval::from_integer(bound_product, req.precision))},
        {"within_bound", span_product <= bound_product}};
    accepted.push_back(std::move(tuple_json));
  }

  if (accepted.empty()) {
    std::string why = std::to_string(scan.stream.size()) + " target primes below " + std::to_string(req.height) + ", " +
                      std::to_string(tuples.size()) + " windows of span <= " + std::to_string(req.window);
    if (!skipped.empty()) why += ", " + std::to_string(skipped.size()) + " rejected by the torsion check";
    throw Error(ErrorKind::NoTuplesFound, why + "; try a larger height or window");
  }

  Json geodesics = Json::array();
  for (std::size_t i = 0; i < ctx.extensions.size(); ++i) {
    Json g{{"extension", ctx.extensions[i].label()}, {"radicand", ctx.extensions[i].radicand().to_string()},
           {"nonsquare_witness", ctx.extensions[i].nonsquare_witness().label()}};
    if (ctx.geodesics[i]) g["geodesic"] = to_json(*ctx.geodesics[i]);
    geodesics.push_back(std::move(g));
  }
  Json base_embeddings = Json::array();
  for (std::size_t i = 0; i < ctx.extensions.size(); ++i) {
    Json c = to_json(ctx.base_embeddings[i]);
    c["extension"] = ctx.extensions[i].label();
    base_embeddings.push_back(std::move(c));
  }
  Json p0_json = to_json(p0);
  p0_json["frobenius"] = all_inert(ctx.extensions.size()).to_string();
  p0_json["overridden"] = req.p0.has_value();

  Json stats_json = to_json(stats);
  stats_json.erase("gap_histogram");
  return Json{
      {"schema_version", kReportSchemaVersion},
      {"request", req.to_json()},
      {"field", to_json(ctx.field)},
      {"base",
       {{"ramification", to_json(base.ramification())}, {"kleinian", true}, {"embeddings", base_embeddings}}},
      {"extensions", geodesics},
      {"p0", p0_json},
      {"tuples", accepted},
      {"skipped", skipped},
      {"volume", {{"zeta", to_json(zeta)}, {"base", to_json(base_volume)}}},
      {"diagnostics",
       {{"compositum", to_json(ctx.compositum)},
        {"stream", stats_json},
        {"windows_found", tuples.size()},
        {"qualifying_algebras", scan.stream.size()},
        {"note", "Counts are finite-height evidence; the infinitude of such tuples is not checked."}}}};
}

nlohmann::ordered_json run_twins(const TwinRequest& request) { return construct_twins(validate_base(request)); }

// ---------------------------------------------------------------------------

VerifyResult verify_report(const nlohmann::ordered_json& report) {
  VerifyResult out;
  auto check = [&](bool ok, const std::string& what) {
    ++out.checks;
    if (!ok) {
      out.ok = false;
      out.failures.push_back(what);
    }
  };
  try {
    check(report.at("schema_version") == kReportSchemaVersion, "unsupported schema_version");
    const TwinRequest req = TwinRequest::from_json(report.at("request"));
    const TwinContext ctx = validate_base(req);
    const auto& K = ctx.field;
    const auto& base_ram = ctx.base.ramification();
    check(report.at("field") == to_json(K), "field data differs");
    check(report.at("base").at("ramification") == to_json(base_ram), "base ramification differs");
    for (std::size_t i = 0; i < ctx.extensions.size(); ++i) {
      Json c = to_json(ctx.base_embeddings[i]);
      c["extension"] = ctx.extensions[i].label();
      check(report.at("base").at("embeddings").at(i) == c, "base embedding certificate " + std::to_string(i) + " differs");
    }

    const auto& p0_json = report.at("p0");
    const PrimeIdeal p0 = prime_from_label(K, p0_json.at("label").get<std::string>());
    check(p0_json.at("factor") == p0.factor.to_string(), "P0 factor differs");
    check(is_all_inert(p0, ctx.extensions), "P0 is not inert in every extension");
    check(!base_ram.contains(p0), "P0 lies in Ram(B)");
    check(choose_p0(ctx) == p0, "P0 is not the rederived choice");

    const ZetaValue zeta = dedekind_zeta_2(K, req.zeta_cutoff, req.precision);
    const BorelVolume base_volume = borel_volume(base_ram, zeta);
    check(report.at("volume").at("zeta") == to_json(zeta), "zeta value differs");
    check(report.at("volume").at("base") == to_json(base_volume), "base volume differs");
    std::optional<CyclotomicScan> cyclotomic;
    if (req.manifold) cyclotomic = cyclotomic_quadratic_degrees(K, req.n_max, req.torsion_height);

    const auto& tuples = report.at("tuples");
    check(!tuples.empty(), "report has no tuples");
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
      const auto& tj = tuples[ti];
      const std::string where = "tuple " + std::to_string(ti) + ": ";
      std::vector<PrimeIdeal> primes;
      for (const auto& pj : tj.at("primes")) {
        PrimeIdeal P = prime_from_label(K, pj.at("label").get<std::string>());
        check(pj.at("factor") == P.factor.to_string(), where + "factor of " + P.label() + " differs");
        check(P.inertia_degree() == 1, where + P.label() + " is not of degree 1");
        check(is_all_inert(P, ctx.extensions), where + P.label() + " has the wrong Frobenius vector");
        check(!(P == p0) && !base_ram.contains(P), where + P.label() + " is in the avoid set");
        primes.push_back(P);
      }
      check(static_cast<int>(primes.size()) == req.k, where + "wrong tuple size");
      std::set<u64> rational;
      for (const auto& P : primes) rational.insert(P.p);
      check(rational.size() == primes.size(), where + "primes share a rational prime");
      check(std::is_sorted(primes.begin(), primes.end()), where + "primes not sorted by norm");
      const u64 span = primes.back().p - primes.front().p;
      check(tj.at("span") == span && span <= req.window, where + "span exceeds the window");

      std::vector<RamificationSet> sets;
      std::vector<BorelVolume> volumes;
      const auto& algebras = tj.at("algebras");
      check(algebras.size() == primes.size(), where + "algebra count differs");
      for (std::size_t i = 0; i < primes.size() && i < algebras.size(); ++i) {
        const auto& aj = algebras[i];
        QuaternionAlgebra Bi = extend_ramification(ctx.base, p0, primes[i]);
        const auto& ram = Bi.ramification();
        check(aj.at("ramification") == to_json(ram), where + "ramification set " + std::to_string(i) + " differs");
        check(ram.size() % 2 == 0, where + "odd ramification set");
        check(ram.size() == base_ram.size() + 2, where + "ramification set did not grow by two");
        check(!ram.finite().empty(), where + "Ram_f empty");
        for (std::size_t j = 0; j < ctx.extensions.size(); ++j) {
          auto cert = admits_embedding(Bi, ctx.extensions[j]);
          Json c = to_json(cert);
          c["extension"] = ctx.extensions[j].label();
          check(cert.admits, where + ctx.extensions[j].label() + " does not embed");
          check(aj.at("embeddings").at(j) == c, where + "embedding certificate differs");
        }
        if (cyclotomic) {
          auto torsion = torsion_free_check(Bi, *cyclotomic);
          check(torsion.torsion_free, where + "torsion check fails");
          check(aj.at("torsion") == to_json(torsion), where + "torsion table differs");
        }
        volumes.push_back(borel_volume(ram, zeta));
        check(aj.at("volume") == to_json(volumes.back()), where + "volume differs");
        check(volume_ratio(volumes.back(), base_volume) == Rational((p0.norm() - 1) * (primes[i].norm() - 1)),
              where + "volume ratio is not (N(P0)-1)(N(Pi)-1)");
        sets.push_back(ram);
      }
      for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) check(!(sets[i] == sets[j]), where + "repeated algebra");
      if (!volumes.empty()) {
        auto [lo, hi] = std::minmax_element(volumes.begin(), volumes.end(),
                                            [](const auto& a, const auto& b) { return a.norm_product < b.norm_product; });
        const Integer span_product = hi->norm_product - lo->norm_product;
        const Integer bound = base_volume.norm_product * (p0.norm() - 1) * Integer(req.window);
        check(span_product <= bound, where + "volume span exceeds the window bound");
        check(tj.at("volume_span").at("norm_product_span") == span_product.str(), where + "volume span differs");
      }
    }
  } catch (const std::exception& e) {
    out.ok = false;
    out.failures.push_back(std::string("verification aborted: ") + e.what());
  }
  return out;
}

}  // namespace lspec
