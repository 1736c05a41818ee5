// Python bindings for the commint core library.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commint/catalog.hpp"
#include "commint/theorems.hpp"

namespace py = pybind11;
using namespace commint;

namespace {

py::int_ to_py(const Integer& value) {
  return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(value.get_str().c_str(), nullptr, 10)));
}

Integer from_py(const py::int_& value) { return Integer(py::str(value).cast<std::string>()); }

py::list to_py(const std::vector<Integer>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

CharPoly poly_from_py(const std::vector<py::int_>& coefficients) {
  CharPoly poly;
  for (const auto& c : coefficients) poly.coefficients.push_back(from_py(c));
  return poly;
}

py::list to_py(const Spectrum& spectrum) {
  py::list out;
  for (const auto& e : spectrum.pairs) out.append(py::make_tuple(e.value, e.multiplicity));
  return out;
}

py::dict to_py(const Prediction& prediction) {
  py::dict params;
  for (const auto& [key, value] : prediction.params) params[py::str(key)] = value;
  py::dict out;
  out["source"] = prediction.source;
  out["params"] = params;
  out["spectrum"] = to_py(prediction.spectrum);
  return out;
}

std::string tag_kind(SmallGroupTag::Kind kind) {
  switch (kind) {
    case SmallGroupTag::Kind::ZpxZp: return "ZpxZp";
    case SmallGroupTag::Kind::Dihedral: return "Dihedral";
    case SmallGroupTag::Kind::Other: break;
  }
  return "Other";
}

}  // namespace

PYBIND11_MODULE(_commint, m) {
  m.doc() = "Commuting graphs of finite groups: centralizers, spectra, and closed-form predictions.";

  static py::handle error = py::exception<Error>(m, "Error").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = error(py::str(e.what()));
      instance.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  py::class_<FiniteGroup>(m, "Group")
      .def_static("from_table", &FiniteGroup::from_cayley_table, py::arg("table"),
                  py::arg("names") = std::vector<std::string>{})
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul)
      .def("inverse", &FiniteGroup::inverse)
      .def("commute", &FiniteGroup::commute)
      .def("name", &FiniteGroup::name)
      .def_property_readonly("names", &FiniteGroup::names)
      .def("table", &FiniteGroup::table)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("element_order", &FiniteGroup::element_order)
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "<commint.Group order=" + std::to_string(g.order()) + ">"; });

  m.def("build", [](const std::string& spec) { return build(parse_family(spec)); }, py::arg("spec"),
        "Builds a catalog family such as 'dihedral:6', 'heis:3' or 'prod:dicyclic:2,z3'.");
  m.def("read_cayley_text", [](const std::string& text) {
    std::istringstream in(text);
    return read_cayley_text(in);
  });
  m.def("write_cayley_text", &write_cayley_text);
  m.def("catalog", [] {
    py::list out;
    for (const auto& e : list_catalog()) {
      py::dict d;
      d["name"] = e.name;
      d["spec"] = e.spec.to_string();
      d["grid"] = e.grid;
      out.append(d);
    }
    return out;
  });

  m.def("center", [](const FiniteGroup& g) { return center(g).members; });
  m.def("centralizer", [](const FiniteGroup& g, Element x) { return centralizer(g, x).members; });
  m.def("centralizer_count", &centralizer_count);
  m.def("quotient_by_center", [](const FiniteGroup& g) {
    auto q = quotient_by_center(g);
    return py::make_tuple(std::move(q.group), std::move(q.coset_of));
  });
  m.def("recognize_small", [](const FiniteGroup& g) {
    const auto tag = recognize_small(g);
    return py::make_tuple(tag_kind(tag.kind), tag.parameter);
  });
  m.def("max_noncommuting_set", &max_noncommuting_set);

  py::class_<CommutingGraph>(m, "CommutingGraph")
      .def_static("from_group", &CommutingGraph::build, py::arg("group"))
      .def_static("from_adjacency", &CommutingGraph::from_adjacency, py::arg("matrix"),
                  py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("vertex_count", &CommutingGraph::vertex_count)
      .def_property_readonly("edge_count", &CommutingGraph::edge_count)
      .def_property_readonly("vertices", &CommutingGraph::vertices)
      .def_property_readonly("labels", &CommutingGraph::labels)
      .def("edges", &CommutingGraph::edges)
      .def("degree", &CommutingGraph::degree)
      .def("adjacent", &CommutingGraph::adjacent)
      .def("components", [](const CommutingGraph& g) { return connected_components(g); })
      .def("clique_sizes",
           [](const CommutingGraph& g) -> std::optional<std::vector<std::size_t>> {
             auto d = clique_decomposition(g);
             if (!d.all_cliques) return std::nullopt;
             return d.component_sizes;
           })
      .def("to_dot", &export_dot, py::arg("title") = "commuting");

  m.def("char_poly", [](const CommutingGraph& g) { return to_py(char_poly(g).coefficients); },
        "Characteristic polynomial coefficients, constant term first.");
  m.def("char_poly", [](const std::vector<std::vector<int>>& a) { return to_py(char_poly(a).coefficients); });
  m.def(
      "integer_spectrum",
      [](const std::vector<py::int_>& coefficients, std::int64_t bound) {
        const auto roots = integer_spectrum(poly_from_py(coefficients), bound);
        py::dict out;
        out["spectrum"] = to_py(roots.spectrum);
        out["complete"] = roots.spectrum.complete;
        out["remainder"] = to_py(roots.remainder.coefficients);
        return out;
      },
      py::arg("coefficients"), py::arg("bound"));
  m.def("is_integral", [](const CommutingGraph& g) {
    const auto r = is_integral(g);
    py::dict out;
    out["integral"] = r.integral;
    out["spectrum"] = to_py(r.spectrum);
    out["char_poly"] = to_py(r.char_poly.coefficients);
    out["remainder"] = to_py(r.remainder.coefficients);
    return out;
  });
  m.def("clique_union_spectrum", [](const std::vector<std::size_t>& sizes) { return to_py(clique_union_spectrum(sizes)); });

  m.def("predict_zpzp", [](std::int64_t p, std::int64_t z) { return to_py(predict_zpzp(p, z)); });
  m.def("predict_order_p_cubed", [](std::int64_t p) { return to_py(predict_order_p_cubed(p)); });
  m.def("predict_dihedral_quotient", [](std::int64_t n, std::int64_t z) { return to_py(predict_dihedral_quotient(n, z)); });
  m.def("predict_family", [](const std::string& spec) { return to_py(predict_family(parse_family(spec))); });

  m.def(
      "_verify_json",
      [](const FiniteGroup& g, const std::string& name, const std::optional<std::string>& family) {
        std::optional<FamilySpec> spec;
        if (family) spec = parse_family(*family);
        return to_json(verify_group(g, name, spec)).dump();
      },
      py::arg("group"), py::arg("name"), py::arg("family") = std::nullopt);
  m.def("_corollaries_json", [](const FiniteGroup& g) { return to_json(verify_centralizer_corollaries(g)).dump(); });
}
