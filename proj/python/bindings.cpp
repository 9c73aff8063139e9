#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "demyanov/dynamics.hpp"
#include "demyanov/family_io.hpp"
#include "demyanov/svg.hpp"

namespace py = pybind11;
using namespace demyanov;

namespace {

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.to_string());
}

// ints, Fractions and "p/q" strings all print as a literal Rational::parse accepts
Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj)) {
    throw py::type_error("coordinates must be exact (int, Fraction or str), not float");
  }
  return Rational::parse(py::str(obj).cast<std::string>());
}

Point to_point(const py::handle& obj) {
  auto seq = obj.cast<py::sequence>();
  if (seq.size() != 2) throw py::value_error("a point is a pair (x, y)");
  return {to_rational(seq[0]), to_rational(seq[1])};
}

py::tuple from_point(const Point& p) { return py::make_tuple(to_fraction(p.x), to_fraction(p.y)); }

Direction to_direction(const py::handle& obj) {
  auto seq = obj.cast<py::sequence>();
  if (seq.size() != 2) throw py::value_error("a direction is a pair (a, b)");
  auto to_int = [](const py::handle& v) {
    if (!py::isinstance<py::int_>(v)) throw py::type_error("direction components must be int");
    return Integer(py::str(v).cast<std::string>(), 10);
  };
  return Direction(to_int(seq[0]), to_int(seq[1]));
}

py::tuple from_direction(const Direction& d) {
  py::object as_int = py::module_::import("builtins").attr("int");
  return py::make_tuple(as_int(d.a().get_str()), as_int(d.b().get_str()));
}

py::list from_directions(const std::vector<Direction>& ds) {
  py::list out;
  for (const Direction& d : ds) out.append(from_direction(d));
  return out;
}

Polytope hull_of(const py::iterable& points) {
  std::vector<Point> pts;
  for (const py::handle& p : points) pts.push_back(to_point(p));
  return convex_hull(pts);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Demyanov converter for planar polytope families.";

  auto& base_error = py::register_exception<Error>(m, "Error");
  py::register_exception<EmptyInput>(m, "EmptyInput", base_error.ptr());
  py::register_exception<DegenerateSector>(m, "DegenerateSector", base_error.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base_error.ptr());
  py::register_exception<GenerationFailed>(m, "GenerationFailed", base_error.ptr());
  py::register_exception<ClaimViolated>(m, "ClaimViolated", base_error.ptr());
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base_error.ptr());

  py::class_<Polytope>(m, "Polytope")
      .def(py::init(&hull_of), py::arg("points"), "Convex hull of the given points.")
      .def_property_readonly("vertices",
                             [](const Polytope& p) {
                               py::list out;
                               for (const Point& v : p.vertices()) out.append(from_point(v));
                               return out;
                             })
      .def_property_readonly("is_point", &Polytope::is_point)
      .def_property_readonly("is_segment", &Polytope::is_segment)
      .def_property_readonly("is_polygon", &Polytope::is_polygon)
      .def("__len__", &Polytope::size)
      .def("__eq__", [](const Polytope& a, const Polytope& b) { return a == b; })
      .def("__lt__", [](const Polytope& a, const Polytope& b) { return a < b; })
      .def("__hash__", [](const Polytope& p) { return digest(Collection({p})); })
      .def("__repr__", [](const Polytope& p) { return "Polytope(" + to_string(p) + ")"; });

  py::class_<Collection>(m, "Collection")
      .def(py::init<std::vector<Polytope>>(), py::arg("members"))
      .def_property_readonly("members", &Collection::members)
      .def("digest", [](const Collection& c) { return digest(c); })
      .def("__len__", &Collection::size)
      .def("__contains__", &Collection::contains)
      .def("__iter__", [](const Collection& c) { return py::make_iterator(c.begin(), c.end()); },
           py::keep_alive<0, 1>())
      .def("__eq__", [](const Collection& a, const Collection& b) { return a == b; })
      .def("__hash__", [](const Collection& c) { return digest(c); })
      .def("__repr__", [](const Collection& c) {
        return "Collection(" + std::to_string(c.size()) + " members)";
      });

  py::class_<CycleResult>(m, "CycleResult")
      .def_readonly("preperiod", &CycleResult::preperiod)
      .def_readonly("cycle_length", &CycleResult::cycle_length)
      .def_readonly("trajectory", &CycleResult::trajectory)
      .def_readonly("digests", &CycleResult::digests);

  py::class_<SearchReport>(m, "SearchReport")
      .def_readonly("instances_run", &SearchReport::instances_run)
      .def_readonly("histogram", &SearchReport::histogram)
      .def_readonly("cap_exceeded", &SearchReport::cap_exceeded)
      .def_property_readonly("max_L_witness", [](const SearchReport& r) -> py::object {
        if (!r.max_L_witness) return py::none();
        const SearchWitness& w = *r.max_L_witness;
        return py::make_tuple(w.family, w.seed, w.cycle_length);
      });

  m.def("convex_hull", &hull_of, py::arg("points"));
  m.def("support_value",
        [](const Polytope& p, const py::handle& g) {
          return to_fraction(support_value(p, to_direction(g)));
        },
        py::arg("polytope"), py::arg("g"));
  m.def("exposed_face",
        [](const Polytope& p, const py::handle& g) { return exposed_face(p, to_direction(g)); },
        py::arg("polytope"), py::arg("g"));
  m.def("reflect_y", py::overload_cast<const Polytope&>(&reflect_y), py::arg("polytope"));
  m.def("reflect_y", py::overload_cast<const Collection&>(&reflect_y), py::arg("omega"));
  m.def("edge_normals", [](const Polytope& p) { return from_directions(edge_normals(p)); },
        py::arg("polytope"));
  m.def("fan_rays", [](const Collection& c) { return from_directions(fan_rays(c)); },
        py::arg("omega"));
  m.def("test_directions",
        [](const Collection& c) {
          py::list out;
          for (const FanCell& cell : test_directions(c)) {
            py::dict d;
            d["kind"] = cell.kind == CellKind::Ray ? "ray" : "sector";
            d["bounds"] = from_directions(cell.bounds);
            d["representative"] = from_direction(cell.representative);
            out.append(d);
          }
          return out;
        },
        py::arg("omega"));
  m.def("converter_image",
        [](const Collection& c, const py::handle& g) { return converter_image(c, to_direction(g)); },
        py::arg("omega"), py::arg("g"));
  m.def("demyanov_convert", &demyanov_convert, py::arg("omega"));
  m.def("sampled_convert", &sampled_convert, py::arg("omega"), py::arg("bound"));

  m.def("builtin_counterexample", &builtin_counterexample);
  m.def("iterate_until_cycle", &iterate_until_cycle, py::arg("omega0"), py::arg("cap") = kDefaultCap,
        py::call_guard<py::gil_scoped_release>());
  auto verdict_dict = [](const ClaimVerdict& v) {
    py::dict d;
    d["omegas"] = v.omegas;
    d["preperiod"] = v.preperiod;
    d["cycle_length"] = v.cycle_length;
    py::list checks;
    for (const ClaimCheck& c : v.checks) checks.append(py::make_tuple(c.relation, c.passed));
    d["checks"] = checks;
    d["passed"] = v.passed();
    return d;
  };
  m.def("evaluate_counterexample_claim", [verdict_dict] { return verdict_dict(evaluate_counterexample_claim()); });
  m.def("verify_counterexample_claim", [verdict_dict] { return verdict_dict(verify_counterexample_claim()); });
  m.def("random_family",
        [](std::size_t num_polytopes, std::size_t max_vertices, long coord_bound,
           std::uint64_t seed) {
          return random_family(num_polytopes, max_vertices, coord_bound, seed);
        },
        py::arg("num_polytopes"), py::arg("max_vertices"), py::arg("coord_bound"),
        py::arg("seed"));
  m.def("search_cycles",
        [](std::size_t num_polytopes, std::size_t max_vertices, long coord_bound,
           std::size_t num_instances, std::size_t cap, std::uint64_t base_seed,
           unsigned threads) {
          py::gil_scoped_release release;
          return search_cycles(FamilyParams{num_polytopes, max_vertices, coord_bound, {}},
                               num_instances, cap, base_seed, threads);
        },
        py::arg("num_polytopes") = 4, py::arg("max_vertices") = 4, py::arg("coord_bound") = 3,
        py::arg("num_instances") = 100, py::arg("cap") = kDefaultCap, py::arg("base_seed") = 0,
        py::arg("threads") = 0);

  m.def("parse_family", [](const std::string& text) { return parse_family(text); },
        py::arg("text"));
  m.def("serialize_family", &serialize_family, py::arg("omega"));
  m.def("render_svg",
        [](const Collection& c, int panel_size, int margin, int columns, int style_offset) {
          return render_svg(c, RenderSpec{panel_size, margin, columns, style_offset});
        },
        py::arg("omega"), py::arg("panel_size") = 200, py::arg("margin") = 16,
        py::arg("columns") = 4, py::arg("style_offset") = 0);
}
