#include "surfcalc/bundles.hpp"
#include "surfcalc/criteria.hpp"
#include "surfcalc/errors.hpp"
#include "surfcalc/positivity.hpp"
#include "surfcalc/qdivisor.hpp"
#include "surfcalc/render.hpp"
#include "surfcalc/seshadri.hpp"
#include "surfcalc/surface_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace surfcalc;

// Structured results cross the boundary as JSON text; rationals stay exact as "p/q" strings.
namespace {

SurfaceModel load(const std::string& path) {
  SurfaceModel model = read_surface(path);
  require_valid(model);
  return model;
}

SurfaceModel from_json_text(const std::string& text) {
  SurfaceModel model = parse_surface(nlohmann::json::parse(text));
  require_valid(model);
  return model;
}

std::string reider(const SurfaceModel& s, const std::string& l, const std::optional<std::string>& point,
                   std::int64_t bound, bool very_ample) {
  const DivisorClass cls = parse_class(l);
  const auto report = very_ample ? reider_very_ample(s, cls, bound, point) : reider_freeness(s, cls, point, bound);
  return to_json(report).dump();
}

std::string zariski(const SurfaceModel& s, const std::string& d) {
  const auto z = zariski_decompose(s, parse_class(d));
  Json out;
  out["positive_part"] = class_to_json(z.positive);
  Json neg = Json::array();
  for (const auto& [name, coeff] : z.negative) neg.push_back({{"curve", name}, {"coefficient", rational_json(coeff)}});
  out["negative_part"] = std::move(neg);
  return out.dump();
}

std::vector<std::string> strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

ResolutionData resolution(const std::vector<std::vector<std::int64_t>>& gram,
                          const std::map<std::string, std::vector<std::int64_t>>& incidence) {
  ResolutionData res;
  res.exceptional_gram = gram;
  for (const auto& [name, row] : incidence) res.incidence[name] = row;
  return res;
}

std::string matsusaka(const std::string& a, const std::string& b) {
  const auto r = matsusaka_thresholds(parse_rational(a), parse_rational(b));
  Json out;
  out["m_free"] = r.m_free;
  out["m_very_ample"] = r.m_very_ample;
  out["rho_at_m_free"] = rational_json(r.rho(r.m_free));
  out["star_condition"] = r.star_condition(r.m_free);
  out["notes"] = r.notes;
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-rational linear series toolkit for algebraic surfaces";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<SurfaceModel>(m, "Surface")
      .def_static("load", &load, py::arg("path"))
      .def_static("from_json", &from_json_text, py::arg("text"))
      .def_property_readonly("name", [](const SurfaceModel& s) { return s.name; })
      .def_property_readonly("rank", &SurfaceModel::rank)
      .def_property_readonly("curves",
                             [](const SurfaceModel& s) {
                               std::vector<std::string> names;
                               for (const auto& c : s.curves) names.push_back(c.name);
                               return names;
                             })
      .def("to_json", [](const SurfaceModel& s) { return surface_to_json(s).dump(); })
      .def("validate", [](const SurfaceModel& s) { return to_json(validate_surface(s)).dump(); })
      .def("intersect",
           [](const SurfaceModel& s, const std::string& a, const std::string& b) {
             return to_string(intersect(s, parse_class(a), parse_class(b)));
           })
      .def("euler_characteristic",
           [](const SurfaceModel& s, const std::string& d) { return to_string(euler_characteristic(s, parse_class(d))); })
      .def("is_nef", [](const SurfaceModel& s, const std::string& d) { return is_nef_on_table(s, parse_class(d)).nef; })
      .def("is_ample", [](const SurfaceModel& s, const std::string& d) { return is_ample_on_table(s, parse_class(d)); })
      .def("qdivisor_class",
           [](const SurfaceModel& s, const std::string& text) { return class_of(s, parse_qdivisor(text, s)).str(); });

  m.def("reider", &reider, py::arg("surface"), py::arg("line_bundle"), py::arg("point") = std::nullopt,
        py::arg("bound") = 3, py::arg("very_ample") = false);
  m.def(
      "seshadri",
      [](const SurfaceModel& s, const std::string& l, const std::string& point, std::int64_t bound) {
        return to_json(seshadri_at_point(s, parse_class(l), point, bound)).dump();
      },
      py::arg("surface"), py::arg("line_bundle"), py::arg("point"), py::arg("bound") = 3);
  m.def("zariski", &zariski, py::arg("surface"), py::arg("divisor"));
  m.def(
      "mumford_pullback",
      [](const std::vector<std::vector<std::int64_t>>& gram,
         const std::map<std::string, std::vector<std::int64_t>>& incidence, const std::string& divisor) {
        return strings(mumford_pullback(resolution(gram, incidence), divisor));
      },
      py::arg("gram"), py::arg("incidence"), py::arg("divisor"));
  m.def(
      "mumford_intersect",
      [](const std::vector<std::vector<std::int64_t>>& gram,
         const std::map<std::string, std::vector<std::int64_t>>& incidence, const std::string& first,
         const std::string& second, const std::string& base) {
        return to_string(mumford_intersect(resolution(gram, incidence), first, second, parse_rational(base)));
      },
      py::arg("gram"), py::arg("incidence"), py::arg("first"), py::arg("second"), py::arg("base") = "0");
  m.def("matsusaka", &matsusaka, py::arg("a"), py::arg("b"));
  m.def(
      "cusp_bound",
      [](std::int64_t d) {
        const auto c = cusp_bound(d);
        return py::make_tuple(c.k_min, c.bound);
      },
      py::arg("degree"));
  m.def(
      "discriminant",
      [](const SurfaceModel& s, const std::string& c1, std::int64_t c2) {
        return to_string(discriminant(s, ChernData(2, parse_class(c1), Integer(c2))));
      },
      py::arg("surface"), py::arg("c1"), py::arg("c2"));
  m.def(
      "pluricanonical_status",
      [](std::int64_t k2, std::int64_t mult) {
        const auto st = pluricanonical_status(k2, mult);
        return py::make_tuple(guarantee_name(st.free), guarantee_name(st.embedding_away_from_minus2));
      },
      py::arg("k_squared"), py::arg("m"));
  m.def("k3_end_euler", &k3_end_euler, py::arg("r"), py::arg("d"), py::arg("g"));
}
