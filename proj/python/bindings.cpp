#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dehnfill/bounds.hpp"
#include "dehnfill/constants.hpp"
#include "dehnfill/error.hpp"
#include "dehnfill/farey.hpp"
#include "dehnfill/manifold.hpp"
#include "dehnfill/render.hpp"
#include "dehnfill/serialize.hpp"

namespace py = pybind11;
using namespace dehnfill;

namespace {

// Reports cross the boundary as plain dicts built from the canonical JSON.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

ManifoldData dataset(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_manifold(o.cast<std::string>());
  return manifold_from_json(from_py(o));
}

std::array<Slope, 3> base_order(const std::vector<std::string>& v) {
  if (v.size() != 3) throw Error(ErrorKind::parse, "base order needs three slopes");
  return {Slope::parse(v[0]), Slope::parse(v[1]), Slope::parse(v[2])};
}

FareyTriangle triangle(const std::vector<std::string>& v) {
  auto b = base_order(v);
  return FareyTriangle(b[0], b[1], b[2]);
}

}  // namespace

PYBIND11_MODULE(_dehnfill, m) {
  m.doc() = "Slope norms and complexity bounds for even Dehn fillings";

  py::register_exception<Error>(m, "DehnfillError", PyExc_ValueError);

  m.def("normalize_slope", [](const std::string& s) { return Slope::parse(s).str(); });

  m.def(
      "slope_from_pattern",
      [](const std::vector<std::string>& order, const std::vector<std::string>& pattern) {
        if (pattern.size() != 3) throw Error(ErrorKind::parse, "pattern needs three entries");
        Pattern p{Integer::parse(pattern[0]), Integer::parse(pattern[1]), Integer::parse(pattern[2])};
        return slope_from_pattern(base_order(order), p).str();
      },
      py::arg("base_order"), py::arg("pattern"));

  m.def("validate", [](const py::object& d) { return to_py(to_json(validate(dataset(d)))); });
  m.def("resolve_patterns", [](const py::object& d) { return to_py(to_json(resolve_patterns(dataset(d)))); });
  m.def("canonical_dataset", [](const py::object& d) { return canonical_dump(to_json(dataset(d))); });

  m.def("slope_norm", [](const py::object& d, const std::string& s) {
    return to_py(to_json(slope_norm(dataset(d), Slope::parse(s))));
  });
  m.def("bounds", [](const py::object& d, const std::string& s) {
    return to_py(to_json(bounds_report(dataset(d), Slope::parse(s))));
  });
  m.def("layering_plan", [](const py::object& d, const std::string& s) {
    return to_py(to_json(layering_plan(dataset(d), Slope::parse(s))));
  });
  m.def(
      "family",
      [](const py::object& d, const std::string& alpha, const std::string& beta, std::int64_t kmin,
         std::int64_t kmax) {
        return to_py(to_json(family_fan(dataset(d), SignedPair::parse(alpha), SignedPair::parse(beta), kmin, kmax)));
      },
      py::arg("dataset"), py::arg("alpha"), py::arg("beta"), py::arg("kmin"), py::arg("kmax"));
  m.def("render", [](const py::object& d, unsigned depth, const std::string& format) {
    if (format != "dot" && format != "svg") throw Error(ErrorKind::parse, "format must be dot or svg");
    return render(dataset(d), depth, format == "svg" ? RenderFormat::svg : RenderFormat::dot);
  });

  m.def("tree_distance", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return tree_distance(triangle(a), triangle(b));
  });
  m.def(
      "even_distance",
      [](const std::string& a, const std::string& b, std::pair<int, int> ec) {
        return even_distance(Slope::parse(a), Slope::parse(b), EvenClass(ec.first, ec.second));
      },
      py::arg("a"), py::arg("b"), py::arg("even_class") = std::pair<int, int>{0, 1});
  m.def(
      "canonical_triangle",
      [](const std::string& a, std::pair<int, int> ec) {
        return to_py(to_json(canonical_triangle(Slope::parse(a), EvenClass(ec.first, ec.second))));
      },
      py::arg("alpha"), py::arg("even_class") = std::pair<int, int>{0, 1});

  m.def("basic_gap", [](std::int64_t n) { return to_py(to_json(basic_gap(n))); });
  m.def("fib_min_ell", &fib_min_ell);
  m.def("ideal_gap", [](std::int64_t n) { return to_py(to_json(ideal_gap(n))); });
  m.def("knotbasic_gap", [](std::int64_t n) { return to_py(to_json(knotbasic_gap(n))); });
  m.def(
      "constantgap",
      [](std::int64_t n, const std::string& variant) {
        if (variant != "proof" && variant != "statement") {
          throw Error(ErrorKind::parse, "variant must be proof or statement");
        }
        return to_py(to_json(constantgap_params(n, variant == "proof" ? M0Variant::proof : M0Variant::statement)));
      },
      py::arg("n"), py::arg("variant") = "proof");
}
