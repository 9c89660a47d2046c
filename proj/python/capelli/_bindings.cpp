#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "capelli/capelli.hpp"
#include "capelli/serialize.hpp"
#include "capelli/verify.hpp"

namespace py = pybind11;
using namespace capelli;

namespace {

using Rows = std::vector<std::vector<int>>;

py::object fraction(const Rational& q) {
  static const py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_fraction_string(q));
}

Rational rational(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

YoungTableau tableau(const Rows& rows) { return YoungTableau::from_rows(rows); }

py::list expansion_list(const StdExpansion& e) {
  py::list out;
  for (const auto& [spec, c] : e) out.append(py::make_tuple(spec.left.rows(), spec.right.rows(), fraction(c)));
  return out;
}

StdExpansion expansion_from_list(const py::iterable& items) {
  StdExpansion e;
  for (const py::handle& item : items) {
    const auto t = item.cast<py::tuple>();
    e[BitabSpec{tableau(t[0].cast<Rows>()), tableau(t[1].cast<Rows>())}] += rational(t[2]);
  }
  return e;
}

py::object parse_json(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

}  // namespace

PYBIND11_MODULE(_capelli, m) {
  m.doc() = "Exact computation in U(gl(n)) and C[M_{n,d}]: Capelli bitableaux, quantum immanants, Schur elements.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::out_of_range& e) {
      PyErr_SetString(PyExc_IndexError, e.what());
    }
  });

  py::class_<UglElement>(m, "UglElement")
      .def(py::init<int>(), py::arg("n"))
      .def_static("generator", &UglElement::generator, py::arg("i"), py::arg("j"), py::arg("n"))
      .def_static("scalar", [](int n, const py::object& c) { return UglElement::scalar(n, rational(c)); })
      .def_static("parse", &parse_ugl_text, py::arg("text"), py::arg("n"))
      .def_static("from_json", [](const std::string& text, int n) { return ugl_from_json(json::parse(text), n); })
      .def_property_readonly("n", &UglElement::n)
      .def_property_readonly("filtration_degree", &UglElement::filtration_degree)
      .def("is_zero", &UglElement::is_zero)
      .def("terms",
           [](const UglElement& x) {
             py::list out;
             for (const auto& [mono, c] : x.terms()) {
               py::list word;
               for (const Generator& g : mono) word.append(py::make_tuple(g.row, g.col));
               out.append(py::make_tuple(py::tuple(word), fraction(c)));
             }
             return out;
           })
      .def("to_json", [](const UglElement& x) { return to_json(x).dump(); })
      .def("__str__", [](const UglElement& x) { return to_text(x); })
      .def("__repr__", [](const UglElement& x) { return "UglElement(" + std::to_string(x.n()) + ", '" + to_text(x) + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(-py::self)
      .def("__mul__", [](const UglElement& x, const py::object& c) { return x * rational(c); })
      .def("__rmul__", [](const UglElement& x, const py::object& c) { return x * rational(c); });

  py::class_<MPoly>(m, "MPoly")
      .def(py::init<int, int>(), py::arg("n"), py::arg("d"))
      .def_static("variable", &MPoly::variable, py::arg("i"), py::arg("phi"), py::arg("n"), py::arg("d"))
      .def_static("parse", &parse_mpoly_text, py::arg("text"), py::arg("n"), py::arg("d"))
      .def_property_readonly("n", &MPoly::n)
      .def_property_readonly("d", &MPoly::d)
      .def("is_zero", &MPoly::is_zero)
      .def("to_json", [](const MPoly& p) { return to_json(p).dump(); })
      .def("__str__", [](const MPoly& p) { return to_text(p); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const MPoly& p, const py::object& c) { return p * rational(c); })
      .def("__rmul__", [](const MPoly& p, const py::object& c) { return p * rational(c); });

  m.def("column_capelli", &column_capelli, py::arg("rows"), py::arg("cols"), py::arg("n"));
  m.def("column_capelli_alt", &column_capelli_alt, py::arg("rows"), py::arg("cols"), py::arg("n"));
  m.def(
      "capelli_bitableau", [](const Rows& s, const Rows& t, int n) { return capelli_bitableau(tableau(s), tableau(t), n); },
      py::arg("left"), py::arg("right"), py::arg("n"));
  m.def(
      "young_capelli", [](const Rows& s, const Rows& t, int n) { return young_capelli(tableau(s), tableau(t), n); },
      py::arg("left"), py::arg("right"), py::arg("n"));
  m.def(
      "double_young_capelli",
      [](const Rows& s, const Rows& t, int n) { return double_young_capelli(tableau(s), tableau(t), n); },
      py::arg("left"), py::arg("right"), py::arg("n"));
  m.def(
      "capelli_immanant",
      [](const std::vector<int>& shape, const std::vector<int>& rows, const std::vector<int>& cols, int n) {
        return capelli_immanant(Partition(shape), rows, cols, n);
      },
      py::arg("shape"), py::arg("rows"), py::arg("cols"), py::arg("n"));
  m.def(
      "quantum_immanant", [](const std::vector<int>& shape, int n) { return quantum_immanant(Partition(shape), n); },
      py::arg("shape"), py::arg("n"));
  m.def(
      "schur_element", [](const std::vector<int>& shape, int n) { return schur_element(Partition(shape), n); },
      py::arg("shape"), py::arg("n"));
  m.def(
      "schur_element_dyc", [](const std::vector<int>& shape, int n) { return schur_element_dyc(Partition(shape), n); },
      py::arg("shape"), py::arg("n"));
  m.def("capelli_determinant", &capelli_determinant, py::arg("n"));
  m.def("is_central", &is_central, py::arg("x"));
  m.def("commutator", &commutator, py::arg("a"), py::arg("b"));

  m.def(
      "bitableau", [](const Rows& s, const Rows& t, int n, int d) { return bitableau(tableau(s), tableau(t), n, d); },
      py::arg("left"), py::arg("right"), py::arg("n"), py::arg("d"));
  m.def(
      "right_symmetrized",
      [](const Rows& s, const Rows& t, int n, int d) { return right_symmetrized(tableau(s), tableau(t), n, d); },
      py::arg("left"), py::arg("right"), py::arg("n"), py::arg("d"));
  m.def("act", &act_ugl, py::arg("x"), py::arg("p"));
  m.def("act_column_capelli_diff", &act_column_capelli_diff, py::arg("rows"), py::arg("cols"), py::arg("p"));
  m.def(
      "act_higher_capelli",
      [](const std::vector<int>& shape, const MPoly& p) { return act_higher_capelli(Partition(shape), p); },
      py::arg("shape"), py::arg("p"));

  m.def("straighten", [](const MPoly& p) { return expansion_list(straighten(p)); }, py::arg("p"));
  m.def("gc_expand", [](const MPoly& p) { return expansion_list(gc_expand(p)); }, py::arg("p"));
  m.def(
      "standard_capelli_expansion", [](const UglElement& x) { return expansion_list(standard_capelli_expansion(x)); },
      py::arg("x"));
  m.def(
      "realize_young_capelli",
      [](const py::iterable& items, int n) { return realize_young_capelli(expansion_from_list(items), n); },
      py::arg("expansion"), py::arg("n"));
  m.def("koszul", &koszul, py::arg("x"));
  m.def("koszul_inverse", &koszul_inverse, py::arg("p"));

  m.def(
      "verify",
      [](const std::string& suite, int max_h, int max_n, int n, int d) {
        return parse_json(run_suite(suite, VerifyBounds{max_h, max_n, n, d}).to_json().dump());
      },
      py::arg("suite"), py::arg("max_h") = 3, py::arg("max_n") = 2, py::arg("n") = 2, py::arg("d") = 2);
}
