#include "lamkit/io.hpp"

#include <fstream>
#include <sstream>

namespace lamkit {

namespace {

json chord_list(const std::vector<Chord>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(c.str());
  return a;
}

json angle_list(const std::vector<Angle>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

std::vector<Angle> angles_from(const json& j) {
  std::vector<Angle> out;
  for (const auto& x : j) out.push_back(Angle::parse(x.get<std::string>()));
  return out;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json to_json(const LaminationSlice& s) {
  json j;
  j["degree"] = s.degree;
  j["depth"] = s.depth;
  j["leaves"] = chord_list(s.chords());
  j["generators"] = chord_list(s.generators);
  return j;
}

LaminationSlice slice_from_json(const json& j) {
  return guarded("slice", [&] {
    LaminationSlice s;
    s.degree = j.at("degree").get<int>();
    s.depth = j.value("depth", 0);
    for (const auto& c : j.at("leaves"))
      s.leaves.push_back({Chord::parse(c.get<std::string>()), 0, LeafOrigin::Pullback});
    if (j.contains("generators"))
      for (const auto& c : j.at("generators")) s.generators.push_back(Chord::parse(c.get<std::string>()));
    s.normalize();
    return s;
  });
}

json to_json(const GapDescriptor& g) {
  json j;
  j["kind"] = to_string(g.kind);
  j["label"] = g.label;
  switch (g.kind) {
    case GapDescriptor::Kind::Finite:
      j["vertices"] = angle_list(g.finite->vertices());
      j["rotational"] = g.rotational;
      break;
    case GapDescriptor::Kind::QuadGap:
    case GapDescriptor::Kind::Vassal:
      j["gap"] = to_json(*g.quad, 0);
      break;
    case GapDescriptor::Kind::Attached:
      j["vertices"] = angle_list(g.rot_vertices);
      j["hole"] = g.hole_index;
      break;
    case GapDescriptor::Kind::Lifted:
      j["gap"] = to_json(*g.quad, 0);
      j["vertices"] = angle_list(g.rot_vertices);
      j["hole"] = g.hole_index;
      break;
  }
  return j;
}

GapDescriptor descriptor_from_json(const json& j) {
  return guarded("metadata", [&] {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite")
      return GapDescriptor::of_finite(FiniteGap(angles_from(j.at("vertices"))),
                                      j.value("rotational", false), j.value("label", ""));
    if (kind == "quadgap") return GapDescriptor::of_quad(quadgap_from_json(j.at("gap")));
    if (kind == "vassal") return GapDescriptor::of_vassal(quadgap_from_json(j.at("gap")));
    if (kind == "attached")
      return GapDescriptor::of_attached(
          rotational_set_from_vertices(angles_from(j.at("vertices")), 3),
          j.at("hole").get<size_t>());
    if (kind == "lifted")
      return GapDescriptor::of_lifted(quadgap_from_json(j.at("gap")),
                                      rotational_set_from_vertices(angles_from(j.at("vertices")), 2),
                                      j.at("hole").get<size_t>());
    throw ParseError("unknown gap kind '" + kind + "'");
  });
}

json to_json(const CertifiedSlice& s) {
  json j = to_json(s.slice);
  json m = json::array();
  for (const auto& g : s.metadata) m.push_back(to_json(g));
  j["metadata"] = m;
  return j;
}

CertifiedSlice certified_from_json(const json& j) {
  CertifiedSlice cs;
  cs.slice = slice_from_json(j);
  if (j.contains("metadata"))
    for (const auto& g : j.at("metadata")) cs.metadata.push_back(descriptor_from_json(g));
  return cs;
}

json to_json(const QuadGap& u, int depth) {
  json j;
  j["major"] = u.major().str();
  j["type"] = to_string(u.type);
  j["period"] = u.period;
  json edges = json::array();
  for (const auto& e : gap_edges(u, depth))
    if (e.depth > 0) edges.push_back(e.chord.str());
  j["edges"] = edges;
  if (u.is_periodic()) {
    auto v = vassal(u, depth);
    json vj;
    vj["period"] = v.period;
    json supports = json::array();
    for (int i = 0; i < v.cycle.period(); ++i) supports.push_back(v.cycle.support(i).str());
    vj["supports"] = supports;
    json ve = json::array();
    for (const auto& e : v.edges) ve.push_back(e.chord.str());
    vj["edges"] = ve;
    j["vassal"] = vj;
  }
  return j;
}

QuadGap parse_gap(std::string_view text) {
  if (text == "Fa") return QuadGap::Fa();
  if (text == "Fb") return QuadGap::Fb();
  Chord c = Chord::parse(text);
  mpq_class gap = c.hi().value() - c.lo().value();
  if (gap == mpq_class(1, 3) || gap == mpq_class(2, 3))
    return build_quad_gap(CriticalChord::from(c));
  return QuadGap::from_major(c);
}

QuadGap quadgap_from_json(const json& j) {
  return guarded("gap", [&] {
    std::string type = j.at("type").get<std::string>();
    if (type == "Fa" || type == "Fb") return parse_gap(type);
    Chord m = Chord::parse(j.at("major").get<std::string>());
    if (type == "regular") return QuadGap::regular(CriticalChord::from(m));
    if (type == "periodic") return QuadGap::from_major(m);
    throw ParseError("unknown gap type '" + type + "'");
  });
}

json to_json(const RotationalSet& g) {
  json j;
  j["vertices"] = angle_list(g.gap.vertices());
  j["rotation"] = g.rotation.get_str();
  j["period"] = g.period;
  j["orbits"] = g.orbit_count;
  j["type"] = to_string(classify_rotational(g));
  json maj = json::array();
  for (const auto& m : majors(g.gap, g.degree)) maj.push_back(m.edge.str());
  j["majors"] = maj;
  return j;
}

json to_json(const MembershipReport& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["diagnostic"] = r.diagnostic;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IoError", "cannot write " + path);
  out << text;
}

}  // namespace lamkit
