#include "lamkit/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace lamkit {

namespace {

const double kPi = std::acos(-1.0);

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Point {
  double x, y;
};

// SVG y grows downwards, so angles run counterclockwise on screen.
Point at(const Angle& t, double c, double r) {
  double a = 2 * kPi * t.to_double();
  return {c + r * std::cos(a), c - r * std::sin(a)};
}

std::string pt(const Point& p) { return num(p.x) + " " + num(p.y); }

// Endpoints ordered so that the positive arc from the first to the second
// is the shorter one (length < 1/2), plus a flag for the diameter case.
struct Oriented {
  Angle s, t;
  double turn;  // length of the positive arc s -> t
  bool diameter;
};

Oriented orient(const Chord& c) {
  mpq_class len = c.hi().value() - c.lo().value();
  Oriented o{c.lo(), c.hi(), len.get_d(), len == mpq_class(1, 2)};
  if (len > mpq_class(1, 2)) {
    o.s = c.hi();
    o.t = c.lo();
    o.turn = 1 - len.get_d();
  }
  return o;
}

std::string lens_path(const Chord& chord, double c, double r, GeodesicStyle style) {
  Oriented o = orient(chord);
  Point q = at(o.s, c, r);
  return geodesic_path(chord, c, r, style) + " A " + num(r) + " " + num(r) + " 0 0 1 " + pt(q) +
         " Z";
}

}  // namespace

std::string geodesic_path(const Chord& chord, double c, double r, GeodesicStyle style) {
  Oriented o = orient(chord);
  Point p = at(o.s, c, r), q = at(o.t, c, r);
  if (o.diameter || style == GeodesicStyle::Straight) return "M " + pt(p) + " L " + pt(q);
  double radius = r * std::tan(kPi * o.turn);
  return "M " + pt(p) + " A " + num(radius) + " " + num(radius) + " 0 0 1 " + pt(q);
}

namespace {

std::string document(const LaminationSlice& s, const RenderSpec& spec,
                     const std::vector<Chord>& highlighted) {
  double size = spec.size;
  double c = size / 2, r = size / 2 - 4 * spec.stroke_width - 2;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.size
      << "\" height=\"" << spec.size << "\" viewBox=\"0 0 " << spec.size << " " << spec.size
      << "\">\n";
  out << "<title>sigma_" << s.degree << " lamination, depth " << s.depth << ", " << s.size()
      << " leaves</title>\n";
  if (spec.background) out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (spec.fill_gaps && !s.leaves.empty()) {
    out << "<path class=\"gaps\" fill=\"#d6e4f0\" fill-rule=\"evenodd\" stroke=\"none\" d=\"";
    for (size_t i = 0; i < s.leaves.size(); ++i)
      out << (i ? " " : "") << lens_path(s.leaves[i].chord, c, r, spec.style);
    out << "\"/>\n";
  }
  out << "<circle class=\"boundary\" cx=\"" << num(c) << "\" cy=\"" << num(c) << "\" r=\""
      << num(r) << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
      << num(2 * spec.stroke_width) << "\"/>\n";
  out << "<g class=\"leaves\" fill=\"none\" stroke=\"black\" stroke-width=\""
      << num(spec.stroke_width) << "\">\n";
  for (const auto& l : s.leaves)
    out << "<path class=\"leaf\" d=\"" << geodesic_path(l.chord, c, r, spec.style) << "\"/>\n";
  out << "</g>\n";
  if (!highlighted.empty()) {
    out << "<g class=\"highlight\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\""
        << num(2 * spec.stroke_width) << "\">\n";
    for (const auto& h : highlighted)
      out << "<path d=\"" << geodesic_path(h, c, r, spec.style) << "\"/>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_svg(const LaminationSlice& s, const RenderSpec& spec) {
  return document(s, spec, {});
}

std::string render_svg(const CertifiedSlice& cs, const RenderSpec& spec) {
  std::set<Chord> hl;
  for (const auto& g : cs.metadata) {
    if (std::find(spec.highlight.begin(), spec.highlight.end(), g.label) == spec.highlight.end())
      continue;
    if (g.kind == GapDescriptor::Kind::Finite) {
      for (const auto& e : g.finite->edges()) hl.insert(e);
      continue;
    }
    auto cyc = realize(g);
    if (!cyc) continue;
    hl.insert(cyc->attachment.begin(), cyc->attachment.end());
    if (cyc->fatou)
      for (const auto& e : cyc->fatou->edges(0, std::min(cs.slice.depth, 4))) hl.insert(e.chord);
  }
  return document(cs.slice, spec, std::vector<Chord>(hl.begin(), hl.end()));
}

}  // namespace lamkit
