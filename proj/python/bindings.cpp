#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tlenv/algebra.hpp"
#include "tlenv/cli.hpp"
#include "tlenv/cob.hpp"
#include "tlenv/derivations.hpp"
#include "tlenv/errors.hpp"
#include "tlenv/gns.hpp"
#include "tlenv/meander.hpp"
#include "tlenv/serialize.hpp"
#include "tlenv/spectrum.hpp"

namespace py = pybind11;
using namespace tlenv;

namespace {

py::list checks_to_list(const std::vector<CheckResult>& checks) {
  py::list out;
  for (const auto& c : checks) {
    py::dict d;
    d["name"] = c.name;
    d["passed"] = c.passed;
    d["cases"] = c.cases;
    d["detail"] = c.detail;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Temperley-Lieb diagram algebra engine";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ArithmeticError>(m, "ArithmeticError", error);
  py::register_exception<PoleError>(m, "PoleError", error);
  py::register_exception<ShapeError>(m, "ShapeError", error);
  py::register_exception<GluingError>(m, "GluingError", error);
  py::register_exception<PreconditionError>(m, "PreconditionError", error);
  py::register_exception<DegenerateModulusError>(m, "DegenerateModulusError", error);
  py::register_exception<ReconstructionMismatch>(m, "ReconstructionMismatch", error);
  py::register_exception<SchemaError>(m, "SchemaError", error);
  py::register_exception<GraphError>(m, "GraphError", error);

  py::class_<Scalar>(m, "Scalar")
      .def(py::init<long>(), py::arg("value") = 0)
      .def_static("delta", &Scalar::delta)
      .def_static("delta_pow", &Scalar::delta_pow)
      .def_static("parse", [](const std::string& s) { return Scalar::parse(s); })
      .def("evaluate", &Scalar::evaluate)
      .def("is_zero", &Scalar::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Scalar::to_string)
      .def("__repr__", [](const Scalar& s) { return "Scalar(" + s.to_string() + ")"; });

  py::enum_<Shading>(m, "Shading").value("Plus", Shading::Plus).value("Minus", Shading::Minus);

  py::class_<BoxShape>(m, "BoxShape")
      .def(py::init<int, int, int, int, Shading>(), py::arg("left"), py::arg("right"), py::arg("top"),
           py::arg("bottom"), py::arg("shading") = Shading::Plus)
      .def_readwrite("left", &BoxShape::left)
      .def_readwrite("right", &BoxShape::right)
      .def_readwrite("top", &BoxShape::top)
      .def_readwrite("bottom", &BoxShape::bottom)
      .def_readwrite("shading", &BoxShape::shading)
      .def("__eq__", [](const BoxShape& a, const BoxShape& b) { return a == b; })
      .def("__str__", &BoxShape::to_string)
      .def("__repr__", &BoxShape::to_string);

  py::class_<TLDiagram>(m, "Diagram")
      .def(py::init(&TLDiagram::from_pairs), py::arg("shape"), py::arg("pairs"))
      .def_property_readonly("shape", &TLDiagram::shape)
      .def("pairs", &TLDiagram::pairs)
      .def("__eq__", [](const TLDiagram& a, const TLDiagram& b) { return a == b; })
      .def("__hash__", [](const TLDiagram& d) { return TLDiagramHash{}(d); })
      .def("__str__", &TLDiagram::to_string)
      .def("__repr__", &TLDiagram::to_string);

  m.def("enumerate_matchings", &enumerate_matchings, py::arg("shape"));
  m.def("catalan", &catalan);

  py::enum_<Flavor>(m, "Flavor").value("V", Flavor::V).value("W", Flavor::W);

  py::class_<GradedElement>(m, "Element")
      .def(py::init<Flavor>(), py::arg("flavor") = Flavor::V)
      .def_static("basis", &GradedElement::basis, py::arg("diagram"), py::arg("flavor") = Flavor::V)
      .def_static("term", &GradedElement::term, py::arg("diagram"), py::arg("coeff"), py::arg("flavor") = Flavor::V)
      .def_static("from_json", [](const std::string& s, bool strict) { return parse_element(s, strict); },
                  py::arg("text"), py::arg("strict") = true)
      .def("to_json", [](const GradedElement& e) { return emit_element(e); })
      .def_property_readonly("flavor", &GradedElement::flavor)
      .def("with_flavor", &GradedElement::with_flavor)
      .def("terms", [](const GradedElement& e) {
        std::vector<std::pair<TLDiagram, Scalar>> out(e.terms().begin(), e.terms().end());
        return out;
      })
      .def("coeff", &GradedElement::coeff)
      .def("is_zero", &GradedElement::is_zero)
      .def("__len__", &GradedElement::size)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * Scalar())
      .def(Scalar() * py::self)
      .def(py::self == py::self)
      .def("__str__", &GradedElement::to_string)
      .def("__repr__", [](const GradedElement& e) { return "Element(" + e.to_string() + ")"; });

  m.def("v_product", &v_product);
  m.def("w_product", &w_product);
  m.def("dagger", &dagger);
  m.def("v_trace", &v_trace);
  m.def("w_trace", &w_trace);
  m.def("normalized_trace", &normalized_trace);
  m.def("voiculescu_trace", &voiculescu_trace);
  m.def("boxtimes_trace", &boxtimes_trace);
  m.def("embed_tensor", py::overload_cast<const GradedElement&, const GradedElement&>(&embed_tensor));
  m.def("map_X", &map_X);
  m.def("map_Y", &map_Y);

  py::enum_<Pairing>(m, "Pairing").value("Tau", Pairing::Tau).value("TauPrime", Pairing::TauPrime);
  m.def("inner_product", &inner_product);
  m.def("gram_matrix", py::overload_cast<const BoxShape&, Pairing>(&gram_matrix), py::arg("shape"),
        py::arg("pairing") = Pairing::TauPrime);
  m.def("min_gram_eigenvalue", &min_gram_eigenvalue, py::arg("gram"), py::arg("delta"));
  m.def("conditional_expectation", &conditional_expectation);
  m.def("check_modulus", &check_modulus);

  m.def("delta_tilde", &delta_tilde, py::arg("q"), py::arg("x"));
  m.def("delta_q", &delta_q, py::arg("q"), py::arg("x"));
  m.def("rho", &rho);
  m.def("kernel_reconstruct", &kernel_reconstruct, py::arg("q"), py::arg("max_degree") = 3);
  m.def("conjugate_variable", &conjugate_variable);

  m.def("enumerate_meanders", [](int n) { return enumerate_meanders(n).counts; });
  m.def("meander_polynomial", [](int n) { return meander_polynomial(n).to_string('q'); });
  m.def("trace_moment", &trace_moment);

  m.def(
      "index_data",
      [](const std::string& graph_json, int k) {
        PrincipalGraph g = parse_graph(graph_json);
        PFData pf = pf_dimensions(g);
        IndexValue idx = global_index(g, pf);
        py::dict d;
        d["delta"] = pf.delta;
        d["dims"] = pf.dims;
        d["residual"] = pf.residual;
        d["index"] = idx.value;
        d["infinite"] = idx.infinite;
        std::vector<double> r;
        if (!idx.infinite && pf.delta > 1)
          for (int j = 0; j <= k; ++j) r.push_back(r_parameter(j, pf.delta, idx.value));
        d["r"] = r;
        return d;
      },
      py::arg("graph_json"), py::arg("k") = 0);
  m.def("r_parameter", &r_parameter, py::arg("k"), py::arg("delta"), py::arg("index"));

  m.def("cob_checks", [](int b, unsigned long long seed) { return checks_to_list(cob_checks(b, seed)); },
        py::arg("max_boundary") = 6, py::arg("seed") = 0);
  m.def("derivation_checks",
        [](int d, unsigned long long seed) { return checks_to_list(derivation_checks(d, seed)); },
        py::arg("max_degree") = 2, py::arg("seed") = 0);
  m.def("conjugate_checks", [](int d) { return checks_to_list(conjugate_checks(d)); }, py::arg("max_degree") = 3);

  m.def("run_command", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
