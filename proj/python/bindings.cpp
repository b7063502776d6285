#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bvorb/ages.hpp"
#include "bvorb/catalog.hpp"
#include "bvorb/classifier.hpp"
#include "bvorb/io.hpp"
#include "bvorb/orbifold.hpp"
#include "bvorb/verify.hpp"

namespace py = pybind11;

namespace {

bv::K3Class lookup(int p, int r, int a) {
  auto c = bv::find_class(p, r, a);
  if (!c) throw py::value_error("(r, a) = (" + std::to_string(r) + ", " + std::to_string(a) +
                                ") is not in the catalog for p = " + std::to_string(p));
  return *c;
}

bv::LocusReading reading_of(bool geometric) {
  return geometric ? bv::LocusReading::Geometric : bv::LocusReading::GenusFormula;
}

std::vector<std::vector<std::int64_t>> rows(const bv::HodgeDiamond& d) {
  std::vector<std::vector<std::int64_t>> out(d.dim() + 1, std::vector<std::int64_t>(d.dim() + 1));
  for (int i = 0; i <= d.dim(); ++i)
    for (int j = 0; j <= d.dim(); ++j) out[i][j] = d(i, j);
  return out;
}

bv::HodgeDiamond from_rows(const std::vector<std::vector<std::int64_t>>& m) {
  const int dim = static_cast<int>(m.size()) - 1;
  bv::HodgeDiamond d(dim);
  for (int i = 0; i <= dim; ++i) {
    if (static_cast<int>(m[i].size()) != dim + 1) throw py::value_error("coefficient matrix must be square");
    for (int j = 0; j <= dim; ++j) d.at(i, j) = m[i][j];
  }
  return d;
}

py::dict spec_dict(const bv::OrbifoldSpec& s) {
  py::dict d;
  d["dim"] = s.dimension;
  d["p"] = s.prime;
  d["r1"] = s.first.r;
  d["a1"] = s.first.a;
  if (!s.is_threefold()) {
    d["r2"] = s.second_k3().r;
    d["a2"] = s.second_k3().a;
  }
  return d;
}

py::object as_python(const bv::io::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_bvorb, m) {
  m.doc() = "Hodge diamonds of Borcea-Voisin orbifolds";

  py::class_<bv::HodgeDiamond>(m, "HodgeDiamond")
      .def(py::init(&from_rows), py::arg("coeffs"))
      .def_property_readonly("dim", &bv::HodgeDiamond::dim)
      .def("__getitem__", [](const bv::HodgeDiamond& d, std::pair<int, int> ij) { return d(ij.first, ij.second); })
      .def("to_list", &rows)
      .def("euler", &bv::euler_characteristic)
      .def("mirror", &bv::mirror_reflect)
      .def("has_hodge_symmetry", &bv::HodgeDiamond::has_hodge_symmetry)
      .def("has_poincare_duality", &bv::HodgeDiamond::has_poincare_duality)
      .def("__mul__", [](const bv::HodgeDiamond& a, const bv::HodgeDiamond& b) { return a * b; })
      .def("__add__", [](const bv::HodgeDiamond& a, const bv::HodgeDiamond& b) { return a + b; })
      .def("__eq__", [](const bv::HodgeDiamond& a, const bv::HodgeDiamond& b) { return a == b; })
      .def("__hash__", [](const bv::HodgeDiamond& d) { return py::hash(py::str(d.to_string())); })
      .def("__str__", [](const bv::HodgeDiamond& d) { return bv::io::render_text_diamond(d); })
      .def("__repr__", [](const bv::HodgeDiamond& d) { return "HodgeDiamond(" + d.to_string() + ")"; });

  py::class_<bv::K3Class>(m, "K3Class")
      .def_readonly("p", &bv::K3Class::prime)
      .def_readonly("r", &bv::K3Class::r)
      .def_readonly("a", &bv::K3Class::a)
      .def_readonly("delta", &bv::K3Class::delta)
      .def_property_readonly("special", [](const bv::K3Class& c) { return std::string(bv::to_string(c.special)); })
      .def("__eq__", [](const bv::K3Class& x, const bv::K3Class& y) { return x == y; })
      .def("__hash__", [](const bv::K3Class& c) { return py::hash(py::make_tuple(c.prime, c.r, c.a)); })
      .def("__repr__", [](const bv::K3Class& c) {
        return "K3Class(p=" + std::to_string(c.prime) + ", r=" + std::to_string(c.r) + ", a=" + std::to_string(c.a) +
               ")";
      });

  py::class_<bv::OrbifoldReport>(m, "OrbifoldReport")
      .def_readonly("diamond", &bv::OrbifoldReport::diamond)
      .def_readonly("euler", &bv::OrbifoldReport::euler)
      .def_readonly("crepant_resolution", &bv::OrbifoldReport::crepant_resolution)
      .def_property_readonly("spec", [](const bv::OrbifoldReport& r) { return spec_dict(r.spec); })
      .def_property_readonly("fundamental_group",
                             [](const bv::OrbifoldReport& r) {
                               return bv::io::fundamental_group_name(r.fundamental_group, r.spec.prime);
                             })
      .def_property_readonly("summands",
                             [](const bv::OrbifoldReport& r) {
                               py::dict d;
                               for (const auto& s : r.summands) d[py::str(s.label)] = s.part;
                               return d;
                             })
      .def("h", &bv::OrbifoldReport::h, py::arg("i"), py::arg("j"))
      .def("to_dict", [](const bv::OrbifoldReport& r) { return as_python(bv::io::to_json(r)); });

  m.def("supported_primes", [] {
    const auto s = bv::supported_primes();
    return std::vector<int>(s.begin(), s.end());
  });
  m.def("catalog", &bv::all_classes, py::arg("p"), "Admissible classes for the prime p in (r, a) order.");
  m.def(
      "fixed_locus", [](int p, int r, int a) { return as_python(bv::io::to_json(bv::fixed_locus(lookup(p, r, a)))); },
      py::arg("p"), py::arg("r"), py::arg("a"));

  m.def(
      "threefold", [](int r, int a) { return bv::build(bv::OrbifoldSpec::threefold(lookup(3, r, a))); }, py::arg("r"),
      py::arg("a"), "K3 x E orbifold for p = 3.");
  m.def(
      "fourfold",
      [](int p, int r1, int a1, int r2, int a2, bool geometric) {
        return bv::build(bv::OrbifoldSpec::fourfold(lookup(p, r1, a1), lookup(p, r2, a2)), reading_of(geometric));
      },
      py::arg("p"), py::arg("r1"), py::arg("a1"), py::arg("r2"), py::arg("a2"), py::kw_only(),
      py::arg("geometric") = false,
      "Orbifold of a pair of K3 surfaces. geometric=True uses the Lefschetz-consistent fixed locus for p >= 13.");

  m.def(
      "enumerate",
      [](int p, int dim) {
        py::gil_scoped_release release;
        auto t = bv::enumerate(p, dim);
        py::gil_scoped_acquire acquire;
        return as_python(bv::io::to_json(t));
      },
      py::arg("p"), py::arg("dim") = 4, "All inputs grouped into families with equal diamonds.");

  m.def("p2_matrix", &bv::p2_matrix, py::arg("p"));
  m.def(
      "shift_counts",
      [](int p, int r1, int a1, int r2, int a2) {
        const auto c = bv::shift_counts(p, bv::fixed_locus(lookup(p, r1, a1)).point_types,
                                        bv::fixed_locus(lookup(p, r2, a2)).point_types);
        return py::make_tuple(c.n1, c.n2, c.n3);
      },
      py::arg("p"), py::arg("r1"), py::arg("a1"), py::arg("r2"), py::arg("a2"));

  m.def("mirror_check", [] { return as_python(bv::io::to_json(bv::mirror_check_p2())); });
  m.def(
      "mirror_search", [](int p, int dim) { return as_python(bv::io::to_json(bv::mirror_search(p, dim))); },
      py::arg("p"), py::arg("dim") = 4);
  m.def(
      "crepant_survey",
      [](int p) {
        py::list out;
        for (const auto& [s, ok] : bv::crepant_survey(p)) {
          py::dict d = spec_dict(s);
          d["crepant"] = ok;
          out.append(d);
        }
        return out;
      },
      py::arg("p"));
  m.def("verify", [] { return as_python(bv::io::to_json(bv::run_reproduction_checks())); },
        "Run every reproduction check; returns {'passed': bool, 'checks': [...]}.");

  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const std::overflow_error& x) {
      PyErr_SetString(PyExc_OverflowError, x.what());
    } catch (const std::domain_error& x) {
      PyErr_SetString(PyExc_ValueError, x.what());
    }
  });
}
