#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcup/cup.hpp"
#include "pcup/discriminant.hpp"
#include "pcup/geom.hpp"
#include "pcup/io.hpp"
#include "pcup/subdivision.hpp"

namespace py = pybind11;
using namespace pcup;

namespace {

py::object fraction(const Rat& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

Rat to_rat(const py::handle& h) { return parse_rat(py::str(h).cast<std::string>()); }

Vec to_vec(const py::sequence& s) {
  Vec v;
  for (auto h : s) v.push_back(to_rat(h));
  return v;
}

py::list from_vec(const Vec& v) {
  py::list out;
  for (const auto& r : v) out.append(fraction(r));
  return out;
}

std::vector<Vec> to_points(const py::sequence& s) {
  std::vector<Vec> out;
  for (auto p : s) out.push_back(to_vec(p.cast<py::sequence>()));
  return out;
}

// Complexes and cochains cross the boundary as JSON text or plain objects.
Json to_json_value(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_json(h.cast<std::string>());
  return parse_json(py::module_::import("json").attr("dumps")(h).cast<std::string>());
}

py::object from_json_value(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object value_to_python(const RingElement& e) {
  if (e.ring().kind == Ring::Kind::scalar) return fraction(e.value().coeff(0));
  py::dict out;
  for (const auto& [blade, c] : e.value().terms()) {
    py::tuple idx = py::cast(blade_indices(blade));
    out[idx] = fraction(c);
  }
  return out;
}

py::dict point_class(const PointClass& c) {
  py::dict d;
  d["kind"] = to_string(c.kind);
  py::list hs;
  for (const auto& h : c.hyperplanes) hs.append(from_vec(h));
  d["hyperplanes"] = hs;
  d["uncommon"] = c.uncommon;
  d["convenient"] = c.convenient;
  return d;
}

}  // namespace

PYBIND11_MODULE(_pcup, m) {
  m.doc() = "Parameterized cup products on polyhedral complexes";

  // Held for the life of the interpreter.
  static py::handle error_type =
      py::exception<Error>(m, "PcupError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("kind") = to_string(e.kind());
      if (const auto* nc = dynamic_cast<const NotConvenient*>(&e)) {
        const auto& r = nc->report();
        inst.attr("witness") = py::make_tuple(r.cell, r.delta, r.lambda, r.p, r.q);
      }
      py::set_error(error_type, inst);
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      raise(e);
    }
  });

  py::class_<PComplex>(m, "Complex")
      .def_static("from_json", [](const py::object& j) { return complex_from_json(to_json_value(j)); },
                  "Build and validate a complex from JSON text or an equivalent dict.")
      .def_static("load", [](const std::string& path) { return complex_from_json(load_json(path)); })
      .def_static("polytope",
                  [](const py::sequence& pts, bool drop_interior) {
                    const auto points = to_points(pts);
                    if (points.empty()) throw Error(ErrorKind::invalid_cell, "no points");
                    return polytope_complex(points.front().size(), points, drop_interior);
                  },
                  py::arg("points"), py::arg("drop_interior") = false)
      .def("to_json", [](const PComplex& x) { return from_json_value(to_json(x)); })
      .def_property_readonly("ambient_dim", &PComplex::ambient_dim)
      .def_property_readonly("top_dim", &PComplex::top_dim)
      .def("__len__", &PComplex::size)
      .def("cells_of_dim", &PComplex::cells_of_dim)
      .def("cell_vertices", [](const PComplex& x, CellId c) { return x.cell(c).vertices; })
      .def("find", &PComplex::find)
      .def("is_simplicial", &PComplex::is_simplicial)
      .def("cohomology_rank", &cohomology_rank);

  py::class_<Cochain>(m, "Cochain")
      .def_static("from_json",
                  [](const py::object& j, std::size_t ambient_dim) {
                    return cochain_from_json(to_json_value(j), ambient_dim);
                  },
                  py::arg("data"), py::arg("ambient_dim"))
      .def("to_json", [](const Cochain& c) { return from_json_value(to_json(c)); })
      .def_property_readonly("degree", &Cochain::degree)
      .def("values", [](const Cochain& c) {
        py::dict out;
        for (const auto& [id, v] : c.values()) out[py::int_(id)] = value_to_python(v);
        return out;
      })
      .def("is_zero", &Cochain::is_zero)
      .def("__add__", [](const Cochain& a, const Cochain& b) { return a + b; })
      .def("__sub__", [](const Cochain& a, const Cochain& b) { return a - b; })
      .def("__neg__", [](const Cochain& a) { return -a; })
      .def("__eq__", [](const Cochain& a, const Cochain& b) { return a == b; });

  m.def("coboundary", &coboundary);
  m.def("is_cocycle", &is_cocycle);
  m.def("is_coboundary", &is_coboundary);
  m.def("unit_cochain", [](const PComplex& x, bool exterior) {
    return unit_cochain(x, exterior ? Ring::exterior(static_cast<int>(x.ambient_dim())) : Ring::scalar());
  }, py::arg("complex"), py::arg("exterior") = true);
  m.def("vol_cocycle", &vol_cocycle);

  m.def("cup", [](const PComplex& x, const Cochain& a, const Cochain& b, const py::sequence& v) {
    return cup(x, a, b, to_vec(v));
  });
  m.def("cech_cup", &cech_cup);
  m.def("ascending_order", [](const PComplex& x, const py::sequence& v) { return ascending_order(x, to_vec(v)); });
  m.def("is_convenient", [](const PComplex& x, const py::sequence& v) {
    const auto r = is_convenient(x, to_vec(v));
    py::dict d;
    d["convenient"] = r.convenient;
    if (!r.convenient) d["witness"] = py::make_tuple(r.cell, r.delta, r.lambda, r.p, r.q);
    return d;
  });
  m.def("sample_convenient", [](const PComplex& x, std::uint64_t seed) {
    return from_vec(sample_convenient(x, seed));
  }, py::arg("complex"), py::arg("seed") = 1);

  m.def("discriminant", [](const PComplex& x) {
    py::list out;
    for (const auto& h : discriminant(x)) out.append(from_vec(h.normal));
    return out;
  });
  m.def("classify_point", [](const PComplex& x, const py::sequence& u) {
    return point_class(classify_point(x, to_vec(u)));
  });
  m.def("wall_crossing_delta", [](const PComplex& x, const Cochain& a, const Cochain& b,
                                  const py::sequence& u, const py::sequence& v) {
    return wall_crossing_delta(x, a, b, to_vec(u), to_vec(v));
  });
  m.def("same_component", [](const PComplex& x, const py::sequence& u, const py::sequence& v) {
    return same_component(x, to_vec(u), to_vec(v));
  });

  m.def("volume", [](const py::sequence& pts, std::uint64_t seed) {
    const auto points = to_points(pts);
    if (points.empty()) throw Error(ErrorKind::invalid_cell, "no points");
    const PComplex x = polytope_complex(points.front().size(), points, true);
    if (x.top_dim() != static_cast<int>(x.ambient_dim())) return fraction(0);
    return fraction(volume_by_cup(x, sample_convenient(x, seed)));
  }, py::arg("points"), py::arg("seed") = 1);
  m.def("mixed_volume", [](const py::sequence& summands, std::uint64_t seed) {
    std::vector<std::vector<Vec>> s;
    for (auto p : summands) s.push_back(to_points(p.cast<py::sequence>()));
    return fraction(mixed_volume(s, seed));
  }, py::arg("summands"), py::arg("seed") = 1);
  m.def("in_R", &in_R);

  m.def("restrict", [](const PComplex& fine, const PComplex& coarse, const Cochain& r) {
    return res(r, build_subdivision(fine, coarse));
  });
  m.def("subdivision_defect", [](const PComplex& fine, const PComplex& coarse, const Cochain& a,
                                 const Cochain& b, const py::sequence& v) {
    const Defect d = subdivision_defect(a, b, to_vec(v), build_subdivision(fine, coarse));
    return py::make_tuple(d.defect, d.witness ? py::cast(*d.witness) : py::none());
  });
}
