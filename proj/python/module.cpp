#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lspec/error.hpp"
#include "lspec/pipeline.hpp"
#include "lspec/report.hpp"

namespace py = pybind11;
using namespace lspec;

namespace {

py::object big(const Integer& v) { return py::int_(py::str(v.str())); }

std::vector<QuadraticExtension> extensions(const NumberField& K, const std::vector<std::string>& specs) {
  std::vector<QuadraticExtension> out;
  for (const auto& s : specs) {
    if (s.rfind("trace:", 0) == 0)
      out.push_back(QuadraticExtension::from_trace(FieldElement::parse(K, s.substr(6))));
    else
      out.push_back(QuadraticExtension::from_radicand(FieldElement::parse(K, s.rfind("radicand:", 0) == 0 ? s.substr(9) : s)));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Number field primes, quadratic splitting and quaternion algebra volumes";

  static py::exception<Error> error(m, "LspecError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<PrimeIdeal>(m, "PrimeIdeal")
      .def_readonly("p", &PrimeIdeal::p)
      .def_readonly("index", &PrimeIdeal::index)
      .def_property_readonly("inertia_degree", &PrimeIdeal::inertia_degree)
      .def_property_readonly("norm", [](const PrimeIdeal& P) { return big(P.norm()); })
      .def_property_readonly("factor", [](const PrimeIdeal& P) { return P.factor.to_string(); })
      .def_property_readonly("label", &PrimeIdeal::label)
      .def("__repr__", [](const PrimeIdeal& P) { return "PrimeIdeal(" + P.label() + ", " + P.factor.to_string() + ")"; });

  py::class_<NumberField>(m, "NumberField")
      .def(py::init([](const std::string& poly, std::optional<std::string> disc) {
             FieldSpec spec;
             spec.polynomial = poly;
             if (disc) spec.discriminant = Integer(*disc);
             return spec.build();
           }),
           py::arg("poly"), py::arg("disc") = py::none())
      .def_property_readonly("degree", &NumberField::degree)
      .def_property_readonly("signature",
                             [](const NumberField& K) { return std::pair(K.real_places(), K.complex_places()); })
      .def_property_readonly("discriminant", [](const NumberField& K) { return big(K.discriminant()); })
      .def_property_readonly("polynomial", [](const NumberField& K) { return K.polynomial().to_string(); })
      .def("is_excluded", &NumberField::is_excluded)
      .def("factor_prime", [](const NumberField& K, u64 p) { return factor_prime(K, p); })
      .def("prime", [](const NumberField& K, const std::string& label) { return prime_from_label(K, label); });

  m.def(
      "split_symbol",
      [](const PrimeIdeal& P, const NumberField& K, const std::string& ext) {
        return std::string(to_string(split_symbol(P, extensions(K, {ext}).front())));
      },
      py::arg("prime"), py::arg("field"), py::arg("extension"),
      "Split/inert/ramified for 'radicand:<element>' or 'trace:<element>'.");

  m.def(
      "frobenius_vector",
      [](const PrimeIdeal& P, const NumberField& K, const std::vector<std::string>& exts) -> py::object {
        auto fv = frobenius_vector(P, extensions(K, exts));
        if (auto* v = std::get_if<FrobeniusVector>(&fv)) return py::str(v->to_string());
        return py::none();
      },
      py::arg("prime"), py::arg("field"), py::arg("extensions"));

  m.def(
      "target_primes",
      [](const NumberField& K, const std::vector<std::string>& exts, const std::string& target, u64 height) {
        SearchSpec spec{K, extensions(K, exts), FrobeniusVector::parse(target), height};
        std::vector<u64> norms;
        for (const auto& P : enumerate_target_primes(spec)) norms.push_back(P.p);
        return norms;
      },
      py::arg("field"), py::arg("extensions"), py::arg("target"), py::arg("height"));

  m.def(
      "gap_tuples",
      [](const NumberField& K, const std::vector<std::string>& exts, const std::string& target, u64 height, int k,
         u64 window, const std::string& policy) {
        SearchSpec spec{K, extensions(K, exts), FrobeniusVector::parse(target), height, {}, k, window,
                        parse_overlap_policy(policy)};
        std::vector<std::vector<u64>> out;
        for (const auto& t : find_bounded_gap_tuples(spec)) {
          out.emplace_back();
          for (const auto& P : t.primes) out.back().push_back(P.p);
        }
        return out;
      },
      py::arg("field"), py::arg("extensions"), py::arg("target"), py::arg("height"), py::arg("k"), py::arg("window"),
      py::arg("policy") = "sliding");

  m.def(
      "zeta2_json",
      [](const NumberField& K, u64 cutoff, int precision) { return dump(to_json(dedekind_zeta_2(K, cutoff, precision))); },
      py::arg("field"), py::arg("cutoff") = kDefaultZetaCutoff, py::arg("precision") = kDefaultPrecision);

  m.def(
      "volume_json",
      [](const NumberField& K, const std::vector<std::string>& ram, u64 cutoff, int precision) {
        auto z = dedekind_zeta_2(K, cutoff, precision);
        return dump(to_json(borel_volume(RamificationSet::parse(K, ram), z)));
      },
      py::arg("field"), py::arg("ram"), py::arg("cutoff") = kDefaultZetaCutoff, py::arg("precision") = kDefaultPrecision);

  m.def(
      "geodesic_json",
      [](const NumberField& K, const std::string& trace, int precision) {
        return dump(to_json(trace_to_geodesic(FieldElement::parse(K, trace), precision)));
      },
      py::arg("field"), py::arg("trace"), py::arg("precision") = kDefaultPrecision);

  m.def(
      "embedding_json",
      [](const NumberField& K, const std::vector<std::string>& ram, const std::string& ext) {
        QuaternionAlgebra B(RamificationSet::parse(K, ram));
        return dump(to_json(admits_embedding(B, extensions(K, {ext}).front())));
      },
      py::arg("field"), py::arg("ram"), py::arg("extension"));

  m.def(
      "torsion_json",
      [](const NumberField& K, const std::vector<std::string>& ram, int n_max, u64 height) {
        QuaternionAlgebra B(RamificationSet::parse(K, ram));
        return dump(to_json(torsion_free_check(B, n_max, height)));
      },
      py::arg("field"), py::arg("ram"), py::arg("n_max") = 12, py::arg("height") = 10'000);

  m.def(
      "construct_twins_json",
      [](const std::string& request_text, unsigned threads) {
        TwinRequest req = parse_twin_request(request_text);
        req.threads = threads;
        return dump(run_twins(req));
      },
      py::arg("request"), py::arg("threads") = 1);

  m.def(
      "verify_report_json",
      [](const std::string& report) {
        auto v = verify_report(Json::parse(report));
        return dump(Json{{"ok", v.ok}, {"checks", v.checks}, {"failures", v.failures}});
      },
      py::arg("report"));
}
