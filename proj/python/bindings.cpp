#include "liehodge/runner.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace liehodge;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

Rational rational(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

RatVector rational_vector(const py::iterable& xs) {
  RatVector out;
  for (const auto& x : xs) out.push_back(rational(x));
  return out;
}

py::dict result_dict(const VerificationResult& r) {
  py::list checks;
  for (const auto& c : r.checks) checks.append(py::make_tuple(c.name, c.passed, c.detail));
  py::dict out;
  out["passed"] = r.passed();
  out["checks"] = checks;
  return out;
}

std::string dumps(const json& j) { return j.dump(2); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Laplacian, Casimir and affine Weyl group computations for symmetric pairs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<SymmetricPair>(m, "SymmetricPair")
      .def(py::init([](const std::string& spec) { return SymmetricPair::parse(spec); }), py::arg("spec"))
      .def_property_readonly("name", &SymmetricPair::name)
      .def_property_readonly("dim", &SymmetricPair::dim)
      .def_property_readonly("dim_k", &SymmetricPair::dim_k)
      .def_property_readonly("dim_p", &SymmetricPair::dim_p)
      .def_property_readonly("rank", &SymmetricPair::rank)
      .def_property_readonly("is_switch", [](const SymmetricPair& sp) { return sp.involution().is_switch(); })
      .def_property_readonly("delta0_positive", &SymmetricPair::delta0_positive)
      .def_property_readonly("p_weights", &SymmetricPair::p_weights)
      .def_property_readonly("rho0", [](const SymmetricPair& sp) {
        py::list out;
        for (const auto& x : sp.rho0()) out.append(fraction(x));
        return out;
      })
      .def("inner", [](const SymmetricPair& sp, const py::iterable& a, const py::iterable& b) {
        return fraction(sp.inner(rational_vector(a), rational_vector(b)));
      })
      .def("casimir_scalar", [](const SymmetricPair& sp, const py::iterable& xi) {
        return fraction(sp.casimir_scalar(rational_vector(xi)));
      })
      .def("weyl_dimension", [](const SymmetricPair& sp, const py::iterable& xi) {
        return py::int_(py::str(sp.weyl_dimension(rational_vector(xi)).get_str()));
      })
      .def("perturb_structure_constant", &SymmetricPair::perturb_structure_constant)
      .def("__repr__", [](const SymmetricPair& sp) { return "SymmetricPair('" + sp.name() + "')"; });

  py::class_<HomologyEngine>(m, "HomologyEngine")
      .def(py::init([](const SymmetricPair& sp, const py::object& d_bound) {
             return std::make_unique<HomologyEngine>(sp, rational(d_bound));
           }),
           py::arg("pair"), py::arg("d_bound") = 3, py::keep_alive<1, 2>())
      .def("abelian_subspaces", [](const HomologyEngine& e) {
        py::list out;
        for (const auto& s : e.ideals()) {
          py::dict d;
          d["phi"] = s.phi;
          d["weights"] = s.weights(e.pair());
          d["mu"] = s.mu;
          out.append(d);
        }
        return out;
      })
      .def("harmonic_dimension", [](const HomologyEngine& e, int p, const py::object& s) {
        return e.harmonic_space(p, twice(rational(s))).cols();
      })
      .def("verify_garland", [](const HomologyEngine& e, int p, const py::object& s) {
        return result_dict(e.verify_garland(p, twice(rational(s))));
      })
      .def("verify_eigen", [](const HomologyEngine& e, int p) { return result_dict(e.verify_eigen(p)); })
      .def("verify_w", [](const HomologyEngine& e) { return result_dict(e.verify_w()); })
      .def("verify_gl", [](const HomologyEngine& e, int p) { return result_dict(e.verify_gl(p)); })
      .def("verify_finito", [](const HomologyEngine& e, int p) { return result_dict(e.verify_finito(p)); })
      .def("generation_check", [](const HomologyEngine& e, int p_max) { return result_dict(e.generation_check(p_max)); })
      .def("verify_structure", [](const HomologyEngine& e, int p_max, int twice_s_max) {
        return result_dict(e.verify_structure(p_max, twice_s_max));
      })
      .def("_report_json", [](const HomologyEngine& e, int p, const py::object& s, const std::vector<std::string>& which) {
        return dumps(to_json(e.report(p, twice(rational(s)), which)));
      })
      .def("_spectrum_json", [](const HomologyEngine& e, int p) { return dumps(to_json(spectrum_row(e, p))); })
      .def("_abelian_json", [](const HomologyEngine& e) { return dumps(abelian_json(e)); })
      .def("_describe_json", [](const HomologyEngine& e) { return dumps(describe_json(e.pair(), e.roots())); });

  m.def(
      "_verify_json",
      [](const std::string& spec, int p_max, const py::object& s_max, const py::object& d_bound,
         const std::vector<std::string>& which, unsigned jobs, bool negative_control) {
        RunConfig config;
        config.pair = spec;
        config.p_max = p_max;
        config.s_max = rational(s_max);
        config.d_bound = rational(d_bound);
        config.which = which;
        config.jobs = jobs;
        auto sp = SymmetricPair::parse(spec);
        if (negative_control) sp.perturb_structure_constant();
        HomologyEngine engine(sp, config.d_bound);
        std::string out;
        {
          py::gil_scoped_release release;
          out = dumps(to_json(run_verify(engine, config), config));
        }
        return out;
      },
      py::arg("spec"), py::arg("p_max") = 4, py::arg("s_max") = 3, py::arg("d_bound") = 3,
      py::arg("which") = std::vector<std::string>{"all"}, py::arg("jobs") = 1, py::arg("negative_control") = false);
}
