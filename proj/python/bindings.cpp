// Python bindings: mcone._core. Structured results cross the boundary as
// JSON text and are decoded in mcone/__init__.py.

#include "mcone/contact_examples.hpp"
#include "mcone/serialize.hpp"
#include "mcone/simplex.hpp"
#include "mcone/spherical.hpp"
#include "mcone/tables.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mcone;

namespace {

SimplexMap simplex_map(const std::vector<Vec>& columns) { return SimplexMap(columns); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Momentum-cone library core";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  m.def(
      "cone_from_generators_json",
      [](const std::vector<Vec>& gens, int dim) { return to_json(cone_from_generators(gens, dim)).dump(); },
      py::arg("generators"), py::arg("dim") = -1);
  m.def(
      "cone_contains",
      [](const std::string& cone_json, const Vec& v, double tol) {
        return contains(polycone_from_json(parse_json(cone_json)), v, tol);
      },
      py::arg("cone_json"), py::arg("v"), py::arg("tol") = kDefaultTol);

  m.def(
      "caratheodory_reduce", [](const std::vector<Vec>& cols, const Vec& s) { return caratheodory_reduce(s, simplex_map(cols)); },
      py::arg("columns"), py::arg("s"));
  m.def(
      "section", [](const std::vector<Vec>& cols, const Vec& beta) { return section(beta, simplex_map(cols)); },
      py::arg("columns"), py::arg("beta"));
  m.def(
      "extremal_scale",
      [](const std::vector<Vec>& cols, const Vec& beta) {
        const ExtremalScale e = extremal_scale(beta, simplex_map(cols));
        return py::make_tuple(e.t, e.beta_ext);
      },
      py::arg("columns"), py::arg("beta"));
  m.def(
      "in_image", [](const std::vector<Vec>& cols, const Vec& beta) { return in_image(beta, simplex_map(cols)); },
      py::arg("columns"), py::arg("beta"));

  m.def("radialize", [](const std::vector<Vec>& path) { return radialize(path).points; }, py::arg("path"));
  m.def(
      "is_weakly_monotone_geodesic",
      [](const std::vector<Vec>& points, double tol) {
        SpherePath p{points, {}};
        for (std::size_t i = 0; i < points.size(); ++i) p.params.push_back(static_cast<double>(i));
        return is_weakly_monotone_geodesic(p, tol);
      },
      py::arg("points"), py::arg("tol") = 1e-9);
  m.def("hypotenuse", &hypotenuse, py::arg("a"), py::arg("b"));
  m.def("gnomonic", &gnomonic, py::arg("x"));
  m.def("gnomonic_inv", &gnomonic_inv, py::arg("y"));
  m.def(
      "classify_circle_json",
      [](const std::string& space_json) {
        return to_json(classify_circle_map(discretized_from_json(parse_json(space_json)))).dump();
      },
      py::arg("space_json"));

  m.def(
      "analyze_json",
      [](const std::string& spec_json) {
        const ExampleSpec spec = example_from_json(parse_json(spec_json));
        AnalysisReport r;
        {
          py::gil_scoped_release release;
          r = analyze(spec.example, spec.resolution);
        }
        return to_json(r).dump();
      },
      py::arg("spec_json"));
  m.def(
      "reproduce_table_csv",
      [](int table) {
        py::gil_scoped_release release;
        return to_csv(reproduce_table(table));
      },
      py::arg("table"));
  m.def("golden_table_csv", [](int table) { return to_csv(parse_csv(load_golden(table))); }, py::arg("table"));
}
