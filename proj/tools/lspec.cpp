// Command-line front end.
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "lspec/error.hpp"
#include "lspec/pipeline.hpp"
#include "lspec/report.hpp"

using namespace lspec;

namespace {

struct FieldArgs {
  std::string file, poly, disc;
  void add(CLI::App* app) {
    app->add_option("--field", file, "field description file (poly:, disc:, shape:)");
    app->add_option("--poly", poly, "defining polynomial, instead of --field");
    app->add_option("--disc", disc, "field discriminant, with --poly");
  }
  NumberField build() const {
    if (file.empty() == poly.empty()) throw Error(ErrorKind::InvalidInput, "give exactly one of --field and --poly");
    if (!file.empty()) return load_field_spec(file).build();
    FieldSpec spec;
    spec.polynomial = poly;
    if (!disc.empty()) spec.discriminant = Integer(disc);
    return spec.build();
  }
};

std::vector<QuadraticExtension> build_extensions(const NumberField& K, const std::vector<std::string>& specs) {
  std::vector<QuadraticExtension> out;
  for (const auto& s : specs) {
    ExtensionSpec e;
    if (s.rfind("trace:", 0) == 0) {
      e.kind = ExtensionSpec::Kind::Trace;
      e.element = s.substr(6);
    } else {
      e.kind = ExtensionSpec::Kind::Radicand;
      e.element = s.rfind("radicand:", 0) == 0 ? s.substr(9) : s;
    }
    out.push_back(e.build(K));
  }
  return out;
}

void emit(const Json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + out);
  f << j.dump(2) << "\n";
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime splitting, bounded-gap searches and quaternion algebra volumes over number fields"};
  app.require_subcommand(1);
  std::string out;
  FieldArgs field;
  std::vector<std::string> exts, ram;
  std::function<Json()> action;

  // field inspect
  auto* field_cmd = app.add_subcommand("field", "number field queries")->require_subcommand(1);
  auto* inspect = field_cmd->add_subcommand("inspect", "signature, discriminants, roots and prime factorizations");
  field.add(inspect);
  std::vector<u64> factor_ps;
  int root_digits = 20;
  inspect->add_option("--factor", factor_ps, "rational primes to factor");
  inspect->add_option("--digits", root_digits, "digits for root boxes")->check(CLI::Range(5, 100));
  inspect->add_option("--out", out, "output file (default stdout)");
  inspect->callback([&] {
    action = [&] {
      NumberField K = field.build();
      Json j = to_json(K);
      Json roots = Json::array();
      for (const auto& r : K.roots())
        roots.push_back(Json{{"real", r.real}, {"re", r.box.re.mid().to_string(root_digits)},
                             {"im", r.box.im.mid().to_string(root_digits)}});
      j["roots"] = roots;
      Json fact = Json::object();
      for (u64 p : factor_ps) {
        Json ps = Json::array();
        for (const auto& P : factor_prime(K, p)) {
          Json pj = to_json(P);
          pj["inertia_degree"] = P.inertia_degree();
          ps.push_back(pj);
        }
        fact[std::to_string(p)] = ps;
      }
      if (!factor_ps.empty()) j["factorizations"] = fact;
      return j;
    };
  });

  // primes frobenius
  auto* primes_cmd = app.add_subcommand("primes", "prime ideal queries")->require_subcommand(1);
  auto* frob = primes_cmd->add_subcommand("frobenius", "Frobenius vectors of primes in quadratic extensions");
  field.add(frob);
  std::vector<std::string> prime_labels;
  std::string census_height;
  unsigned threads = 1;
  frob->add_option("--ext", exts, "trace:<element> or radicand:<element>")->required();
  frob->add_option("--prime", prime_labels, "prime labels p:i, or a rational prime p for all primes above it");
  frob->add_option("--census", census_height, "count vectors over degree-1 primes up to this norm");
  frob->add_option("--threads", threads, "worker threads for --census");
  frob->add_option("--out", out, "output file (default stdout)");
  frob->callback([&] {
    action = [&] {
      NumberField K = field.build();
      auto L = build_extensions(K, exts);
      Json rows = Json::array();
      std::vector<PrimeIdeal> primes;
      for (const auto& s : prime_labels) {
        if (s.find(':') != std::string::npos) {
          primes.push_back(prime_from_label(K, s));
        } else {
          for (auto& P : factor_prime(K, parse_count(s))) primes.push_back(P);
        }
      }
      for (const auto& P : primes) {
        Json r = to_json(P);
        auto fv = frobenius_vector(P, L);
        if (auto* v = std::get_if<FrobeniusVector>(&fv))
          r["frobenius"] = v->to_string();
        else
          r["ramified_coordinates"] = std::get<RamifiedReport>(fv).coordinates;
        rows.push_back(r);
      }
      Json labels = Json::array();
      for (const auto& x : L) labels.push_back(x.label());
      Json j{{"extensions", labels}, {"primes", rows}};
      if (!census_height.empty()) {
        auto c = frobenius_census(K, L, parse_count(census_height), threads);
        Json counts = Json::object();
        for (const auto& [v, n] : c.counts) counts[v.to_string()] = n;
        j["census"] = Json{{"height", parse_count(census_height)}, {"total", c.total}, {"ramified", c.ramified}, {"counts", counts}};
      }
      return j;
    };
  });

  // gaps search
  auto* gaps_cmd = app.add_subcommand("gaps", "bounded-gap prime tuples")->require_subcommand(1);
  auto* search = gaps_cmd->add_subcommand("search", "k-tuples of target primes with norms in a window");
  field.add(search);
  std::string target, height = "1e6", policy = "disjoint";
  std::vector<std::string> avoid;
  int k = 2;
  u64 window = 30;
  search->add_option("--ext", exts, "trace:<element> or radicand:<element>")->required();
  search->add_option("--target", target, "Frobenius vector, e.g. 1,1 (default all ones)");
  search->add_option("--k", k, "tuple size")->check(CLI::PositiveNumber);
  search->add_option("--window", window, "largest allowed norm span");
  search->add_option("--height", height, "norm bound");
  search->add_option("--policy", policy, "disjoint or sliding");
  search->add_option("--avoid", avoid, "prime labels to skip");
  search->add_option("--threads", threads, "worker threads");
  search->add_option("--out", out, "output file (default stdout)");
  search->callback([&] {
    action = [&] {
      const auto start = std::chrono::steady_clock::now();
      NumberField K = field.build();
      SearchSpec spec{K, build_extensions(K, exts), {}, parse_count(height), {}, k, window, parse_overlap_policy(policy),
                      threads};
      spec.target = target.empty() ? FrobeniusVector::all_ones(spec.extensions.size()) : FrobeniusVector::parse(target);
      for (const auto& a : avoid) spec.avoid.push_back(prime_from_label(K, a));
      auto scan = scan_target_primes(spec);
      auto tuples = find_bounded_gap_tuples(spec, scan.stream);
      Json tj = Json::array();
      for (const auto& t : tuples) tj.push_back(to_json(t));
      Json labels = Json::array();
      for (const auto& x : spec.extensions) labels.push_back(x.label());
      Json avoid_json = Json::array();
      for (const auto& P : spec.avoid) avoid_json.push_back(P.label());
      Json j{{"spec",
              {{"field", K.polynomial().to_string()}, {"extensions", labels}, {"target", spec.target.to_string()},
               {"height", spec.height}, {"k", k}, {"window", window}, {"policy", policy}, {"avoid", avoid_json}}},
             {"tuples", tj},
             {"statistics", to_json(gap_statistics(spec, scan))}};
      j["wall_time_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return j;
    };
  });

  // algebra embed-check
  auto* algebra_cmd = app.add_subcommand("algebra", "quaternion algebra queries")->require_subcommand(1);
  auto* embed = algebra_cmd->add_subcommand("embed-check", "which quadratic extensions embed in B");
  field.add(embed);
  embed->add_option("--ram", ram, "ramified places: real:i, p:i, opaque:name[@norm]");
  embed->add_option("--ext", exts, "trace:<element> or radicand:<element>")->required();
  embed->add_option("--out", out, "output file (default stdout)");
  embed->callback([&] {
    action = [&] {
      NumberField K = field.build();
      QuaternionAlgebra B(RamificationSet::parse(K, ram));
      auto kleinian = is_kleinian_admissible(B);
      Json certs = Json::array();
      for (const auto& L : build_extensions(K, exts)) {
        Json c = to_json(admits_embedding(B, L));
        c["extension"] = L.label();
        certs.push_back(c);
      }
      return Json{{"ramification", to_json(B.ramification())},
                  {"division", is_division(B)},
                  {"kleinian", {{"ok", kleinian.ok}, {"reasons", kleinian.reasons}}},
                  {"embeddings", certs}};
    };
  });

  // volume
  auto* volume_cmd = app.add_subcommand("volume", "Borel covolume and geodesic lengths");
  field.add(volume_cmd);
  std::string cutoff = "1e6";
  int precision = kDefaultPrecision;
  std::vector<std::string> traces;
  volume_cmd->add_option("--ram", ram, "ramified places: real:i, p:i, opaque:name@norm");
  volume_cmd->add_option("--zeta-cutoff", cutoff, "Euler product cutoff");
  volume_cmd->add_option("--precision", precision, "working precision in bits")->check(CLI::Range(32, 512));
  volume_cmd->add_option("--trace", traces, "traces whose geodesic lengths to report");
  volume_cmd->add_option("--out", out, "output file (default stdout)");
  volume_cmd->callback([&] {
    action = [&] {
      NumberField K = field.build();
      RamificationSet R = RamificationSet::parse(K, ram);
      ZetaValue z = dedekind_zeta_2(K, parse_count(cutoff), precision);
      Json j{{"zeta", to_json(z)}, {"ramification", R.tokens()}, {"volume", to_json(borel_volume(R, z))}};
      Json g = Json::array();
      for (const auto& t : traces) g.push_back(to_json(trace_to_geodesic(FieldElement::parse(K, t), precision)));
      if (!traces.empty()) j["geodesics"] = g;
      return j;
    };
  });

  // twins construct / verify
  auto* twins_cmd = app.add_subcommand("twins", "non-commensurable tuples with a common length spectrum part")
                        ->require_subcommand(1);
  auto* construct = twins_cmd->add_subcommand("construct", "run the construction from a request file");
  std::string request_path, report_path;
  int twin_threads = 0;
  construct->add_option("--request", request_path, "request file")->required()->check(CLI::ExistingFile);
  construct->add_option("--threads", twin_threads, "worker threads for the prime scan (default: all cores)");
  construct->add_option("--out", out, "output file (default stdout)");
  construct->callback([&] {
    action = [&] {
      TwinRequest req = load_twin_request(request_path);
      req.threads = twin_threads > 0 ? static_cast<unsigned>(twin_threads) : default_threads();
      return run_twins(req);
    };
  });
  auto* verify = twins_cmd->add_subcommand("verify", "re-derive every certificate of a report");
  verify->add_option("--report", report_path, "report file")->required()->check(CLI::ExistingFile);
  bool verify_failed = false;
  verify->callback([&] {
    action = [&] {
      std::ifstream in(report_path);
      Json report = Json::parse(in);
      VerifyResult v = verify_report(report);
      verify_failed = !v.ok;
      return Json{{"ok", v.ok}, {"checks", v.checks}, {"failures", v.failures}};
    };
  });

  // manifold check
  auto* manifold_cmd = app.add_subcommand("manifold", "torsion-freeness via splitting witnesses")->require_subcommand(1);
  auto* mcheck = manifold_cmd->add_subcommand("check", "witness table for quadratic cyclotomic extensions");
  field.add(mcheck);
  int n_max = 12;
  std::string torsion_height = "1e4";
  mcheck->add_option("--ram", ram, "ramified places: real:i, p:i, opaque:name[@norm]");
  mcheck->add_option("--n-max", n_max, "largest cyclotomic index")->check(CLI::Range(3, 1000));
  mcheck->add_option("--height", torsion_height, "sample height for the cyclotomic degrees");
  mcheck->add_option("--out", out, "output file (default stdout)");
  mcheck->callback([&] {
    action = [&] {
      NumberField K = field.build();
      QuaternionAlgebra B(RamificationSet::parse(K, ram));
      return to_json(torsion_free_check(B, n_max, parse_count(torsion_height)));
    };
  });

  CLI11_PARSE(app, argc, argv);
  try {
    emit(action(), out);
    return verify_failed ? 1 : 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::NoTuplesFound) return 3;
    return is_hypothesis_failure(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
