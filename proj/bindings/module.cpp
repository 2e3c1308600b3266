#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "casson/errors.hpp"
#include "casson/exterior.hpp"
#include "casson/growth.hpp"
#include "casson/morita.hpp"
#include "casson/words.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// Exact bridge between Python int and the arbitrary-precision Int via
// decimal strings; no doubles anywhere.
template <>
struct type_caster<casson::Int> {
 public:
  PYBIND11_TYPE_CASTER(casson::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* str = PyObject_Str(src.ptr());
    if (!str) {
      PyErr_Clear();
      return false;
    }
    const char* text = PyUnicode_AsUTF8(str);
    if (!text) {
      Py_DECREF(str);
      PyErr_Clear();
      return false;
    }
    try {
      value = casson::Int(text);
    } catch (...) {
      Py_DECREF(str);
      return false;
    }
    Py_DECREF(str);
    return true;
  }

  static handle cast(const casson::Int& src, return_value_policy, handle) {
    const std::string text = src.str();
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

casson::IntMatrix matrix_from_rows(const std::vector<std::vector<casson::Int>>& rows) {
  if (rows.empty()) throw casson::InputError("matrix needs at least one row");
  const int n_rows = static_cast<int>(rows.size());
  const int n_cols = static_cast<int>(rows[0].size());
  casson::IntMatrix m(n_rows, n_cols);
  for (int r = 0; r < n_rows; ++r) {
    if (static_cast<int>(rows[r].size()) != n_cols) {
      throw casson::InputError("matrix rows must have equal length");
    }
    for (int c = 0; c < n_cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<casson::Int>> matrix_to_rows(const casson::IntMatrix& m) {
  std::vector<std::vector<casson::Int>> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    rows[r].reserve(m.cols());
    for (int c = 0; c < m.cols(); ++c) rows[r].push_back(m.at(r, c));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-integer Casson-invariant growth over Torelli-group words";

  py::register_exception<casson::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<casson::CertificationError>(m, "CertificationError",
                                                     PyExc_RuntimeError);

  py::class_<casson::Genus>(m, "Genus")
      .def(py::init<int>(), py::arg("g"))
      .def_property_readonly("value", &casson::Genus::value)
      .def_property_readonly("dim", &casson::Genus::dim)
      .def("__repr__",
           [](const casson::Genus& g) { return "Genus(" + std::to_string(g.value()) + ")"; });

  py::class_<casson::TriVector>(m, "TriVector")
      .def(py::init<casson::Genus>(), py::arg("genus"))
      .def_static(
          "parse",
          [](const std::string& text, int genus) {
            return casson::TriVector::parse_text(text, casson::Genus(genus));
          },
          py::arg("text"), py::arg("genus"))
      .def_property_readonly("genus",
                             [](const casson::TriVector& v) { return v.genus().value(); })
      .def("is_zero", &casson::TriVector::is_zero)
      .def("term_count", &casson::TriVector::term_count)
      .def("coeff",
           [](const casson::TriVector& v, int i, int j, int k) {
             return v.coeff(casson::BasisTriple(i - 1, j - 1, k - 1));
           },
           py::arg("i"), py::arg("j"), py::arg("k"),
           "Coefficient on the 1-based basis triple (i, j, k)")
      .def("add_term",
           [](casson::TriVector& v, int i, int j, int k, const casson::Int& c) {
             v.add_term(casson::BasisTriple(i - 1, j - 1, k - 1), c);
           },
           py::arg("i"), py::arg("j"), py::arg("k"), py::arg("c"))
      .def("ell", [](const casson::TriVector& v) { return casson::ell_norm(v); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__neg__", [](const casson::TriVector& v) { return -v; })
      .def("__str__", &casson::TriVector::to_text)
      .def("__repr__",
           [](const casson::TriVector& v) { return "TriVector(" + v.to_text() + ")"; });

  py::class_<casson::Generator>(m, "Generator")
      .def_readonly("tau", &casson::Generator::tau)
      .def_readonly("lambda_", &casson::Generator::lambda);

  py::class_<casson::GeneratorTable>(m, "GeneratorTable")
      .def_static("load_json", &casson::GeneratorTable::load_json, py::arg("text"))
      .def_static("load_file", &casson::GeneratorTable::load_file, py::arg("path"))
      .def_property_readonly(
          "genus", [](const casson::GeneratorTable& t) { return t.genus().value(); })
      .def("names", &casson::GeneratorTable::names)
      .def("at", &casson::GeneratorTable::at, py::arg("name"),
           py::return_value_policy::reference_internal)
      .def("__len__", &casson::GeneratorTable::size)
      .def("to_json", &casson::GeneratorTable::to_json);

  py::class_<casson::Word>(m, "Word")
      .def(py::init<>())
      .def_static("parse", &casson::Word::parse, py::arg("expr"))
      .def("norm", &casson::Word::norm)
      .def("concat", &casson::Word::concat)
      .def("inverse", &casson::Word::inverse)
      .def("free_reduced", &casson::Word::free_reduced)
      .def(py::self == py::self)
      .def("__len__", &casson::Word::norm)
      .def("__str__", &casson::Word::to_string)
      .def("__repr__",
           [](const casson::Word& w) { return "Word.parse(\"" + w.to_string() + "\")"; });

  py::class_<casson::BoundConstants>(m, "BoundConstants")
      .def_readonly("c1", &casson::BoundConstants::c1)
      .def_readonly("c2", &casson::BoundConstants::c2)
      .def_readonly("c3", &casson::BoundConstants::c3)
      .def_readonly("c", &casson::BoundConstants::c)
      .def("__repr__", [](const casson::BoundConstants& k) {
        return "BoundConstants(c1=" + k.c1.str() + ", c2=" + k.c2.str() +
               ", c3=" + k.c3.str() + ", c=" + k.c.str() + ")";
      });

  py::class_<casson::GrowthRecord>(m, "GrowthRecord")
      .def_readonly("length", &casson::GrowthRecord::length)
      .def_readonly("lambda_", &casson::GrowthRecord::lambda)
      .def_readonly("per_step_bound", &casson::GrowthRecord::per_step_bound)
      .def_readonly("quadratic_bound", &casson::GrowthRecord::quadratic_bound)
      .def_readonly("ratio_num", &casson::GrowthRecord::ratio_num)
      .def_readonly("ratio_den", &casson::GrowthRecord::ratio_den)
      .def("__repr__", [](const casson::GrowthRecord& r) {
        return "GrowthRecord(length=" + std::to_string(r.length) +
               ", lambda_=" + r.lambda.str() + ", per_step_bound=" + r.per_step_bound.str() +
               ", quadratic_bound=" + r.quadratic_bound.str() + ", ratio=" +
               r.ratio_num.str() + "/" + r.ratio_den.str() + ")";
      });

  py::class_<casson::SampleRow>(m, "SampleRow")
      .def_readonly("length", &casson::SampleRow::length)
      .def_readonly("trial", &casson::SampleRow::trial)
      .def_readonly("record", &casson::SampleRow::record);

  m.def(
      "tau_of_word",
      [](const casson::Word& w, const casson::GeneratorTable& t) {
        return casson::tau_of_word(w, t);
      },
      py::arg("word"), py::arg("table"));
  m.def(
      "delta_f",
      [](const casson::TriVector& a, const casson::TriVector& b) {
        return casson::delta_f(a, b, casson::Splitting(a.genus()));
      },
      py::arg("tau_phi"), py::arg("tau_psi"));
  m.def(
      "accumulate_naive",
      [](const casson::Word& w, const casson::GeneratorTable& t) {
        return casson::accumulate_naive(w, t, casson::Splitting(t.genus()));
      },
      py::arg("word"), py::arg("table"));
  m.def(
      "accumulate_fast",
      [](const casson::Word& w, const casson::GeneratorTable& t) {
        return casson::accumulate_fast(w, t, casson::Splitting(t.genus()));
      },
      py::arg("word"), py::arg("table"));
  m.def("compute_constants", &casson::compute_constants, py::arg("table"));
  m.def(
      "certify_bound",
      [](const casson::Word& w, const casson::GeneratorTable& t) {
        return casson::certify_bound(w, t, casson::Splitting(t.genus()));
      },
      py::arg("word"), py::arg("table"));
  m.def(
      "nu_family",
      [](std::size_t n_max, const casson::Int& lambda_nu, int genus) {
        return casson::nu_family(n_max, lambda_nu, casson::Genus(genus));
      },
      py::arg("n_max"), py::arg("lambda_nu") = casson::Int(0), py::arg("genus") = 3);
  m.def(
      "sample_growth",
      [](const casson::GeneratorTable& t, const std::vector<std::size_t>& lengths,
         std::size_t trials, std::uint64_t seed) {
        return casson::sample_growth(t, casson::Splitting(t.genus()), lengths, trials, seed);
      },
      py::arg("table"), py::arg("lengths"), py::arg("trials"), py::arg("seed"));
  m.def("csv_string", &casson::csv_string, py::arg("rows"));
  m.def(
      "wedge3",
      [](const std::vector<casson::Int>& a, const std::vector<casson::Int>& b,
         const std::vector<casson::Int>& c, int genus) {
        const casson::Genus g(genus);
        return casson::wedge3(casson::HomologyVector(g, a), casson::HomologyVector(g, b),
                              casson::HomologyVector(g, c));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("genus"));
  m.def(
      "induced_map",
      [](const std::vector<std::vector<casson::Int>>& rows, const casson::TriVector& v) {
        return casson::induced_map(matrix_from_rows(rows), v);
      },
      py::arg("matrix"), py::arg("v"));
  m.def(
      "is_symplectic",
      [](const std::vector<std::vector<casson::Int>>& rows) {
        return casson::is_symplectic(matrix_from_rows(rows));
      },
      py::arg("matrix"));
  m.def(
      "splitting_invariance_check",
      [](const casson::TriVector& a, const casson::TriVector& b,
         const std::vector<std::vector<casson::Int>>& rows) {
        return casson::splitting_invariance_check(a, b, matrix_from_rows(rows),
                                                  casson::Splitting(a.genus()));
      },
      py::arg("tau_phi"), py::arg("tau_psi"), py::arg("matrix"));
  m.def(
      "identity_matrix",
      [](int n) { return matrix_to_rows(casson::IntMatrix::identity(n)); },
      py::arg("n"));

  m.attr("__version__") = "0.1.0";
}
