// Thin bindings: angles and chords travel as "p/q" strings, structured
// results as JSON text that the Python package decodes.
#include "lamkit/io.hpp"
#include "lamkit/render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lamkit;

namespace {

std::string orbit(int d, const std::string& angle) {
  auto info = orbit_info(d, Angle::parse(angle));
  json j;
  j["preperiod"] = info.preperiod;
  j["period"] = info.period;
  json o = json::array();
  for (const auto& x : info.orbit) o.push_back(x.str());
  j["orbit"] = o;
  return j.dump();
}

LaminationSlice quadratic(const std::string& rotation, int depth) {
  return canonical_quadratic(rotation == "0" ? mpq_class(0) : Angle::parse(rotation).value(), depth);
}

std::string check_slice(const std::string& text) {
  auto s = slice_from_json(json::parse(text));
  json j;
  auto put = [&](const char* name, const Report& r) {
    j[name] = {{"ok", r.ok}, {"checked", r.checked}, {"violations", r.violations}};
  };
  put("unlinked", check_unlinked(s));
  put("sibling", check_sibling_invariant(s));
  put("forward", check_forward_invariant(s));
  put("period", check_period_matching(s));
  return j.dump();
}

std::string cubioid_check(const std::string& text, int bound) {
  auto cs = certified_from_json(json::parse(text));
  json j;
  j["cubioid"] = to_json(is_cubioid_member(cs, bound));
  j["periodic_leaves"] = to_json(corollary_check(cs, bound));
  return j.dump();
}

std::string witness(const std::string& text) {
  auto w = main_theorem_witness(certified_from_json(json::parse(text)));
  json j;
  j["gap"] = to_json(w.gap, 0);
  j["case"] = w.theorem_case;
  j["source"] = w.source;
  j["projected"] = to_json(w.projected);
  return j.dump();
}

std::string render(const std::string& text, int size, bool straight, bool fill_gaps,
                   const std::vector<std::string>& highlight) {
  RenderSpec spec;
  spec.size = size;
  spec.style = straight ? GeodesicStyle::Straight : GeodesicStyle::Hyperbolic;
  spec.fill_gaps = fill_gaps;
  spec.highlight = highlight;
  return render_svg(certified_from_json(json::parse(text)), spec);
}

PsiCoding coding(const std::string& gap, bool vassal_gap) {
  QuadGap u = parse_gap(gap);
  return vassal_gap ? PsiCoding::of_vassal(u) : PsiCoding::of_gap(u);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "LamkitError", PyExc_ValueError);

  m.def("sigma", [](int d, const std::string& a) { return sigma(d, Angle::parse(a)).str(); });
  m.def("orbit", &orbit);
  m.def("chords_linked", [](const std::string& a, const std::string& b) {
    return chords_linked(Chord::parse(a), Chord::parse(b));
  });
  m.def("classify_rotational", [](const std::string& vertices) {
    return to_json(rotational_set_from_vertices(parse_angle_list(vertices))).dump();
  });
  m.def("rotational_sets", [](int d, int q) {
    json a = json::array();
    for (const auto& g : rotational_sets(d, q)) a.push_back(to_json(g));
    return a.dump();
  });
  m.def("gap", [](const std::string& gap, int depth) { return to_json(parse_gap(gap), depth).dump(); });
  m.def("canonical_quadgap", [](const std::string& gap, int depth) {
    return to_json(certify_quadgap(parse_gap(gap), depth)).dump();
  });
  m.def("canonical_rotational", [](const std::string& vertices, int depth) {
    return to_json(certify_rotational(rotational_set_from_vertices(parse_angle_list(vertices)), depth)).dump();
  });
  m.def("canonical_quadratic", [](const std::string& rotation, int depth) {
    return to_json(quadratic(rotation, depth)).dump();
  });
  m.def("tune", [](const std::string& gap, const std::string& rotation, int depth) {
    return to_json(tune(parse_gap(gap), quadratic(rotation, depth), depth)).dump();
  });
  m.def("check_slice", &check_slice);
  m.def("cubioid_check", &cubioid_check);
  m.def("witness", &witness);
  m.def("render_svg", &render);
  m.def("psi_project", [](const std::string& gap, const std::string& x, bool vassal_gap) {
    return psi_project(coding(gap, vassal_gap), Angle::parse(x)).str();
  });
  m.def("psi_lift", [](const std::string& gap, const std::string& t, bool vassal_gap) {
    return psi_lift(coding(gap, vassal_gap), Angle::parse(t)).str();
  });
}
