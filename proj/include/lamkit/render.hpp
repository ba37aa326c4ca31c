#pragma once

#include "lamkit/cubioid.hpp"

#include <string>
#include <vector>

namespace lamkit {

enum class GeodesicStyle { Hyperbolic, Straight };

struct RenderSpec {
  int size = 800;  // pixels, square canvas
  double stroke_width = 0.6;
  GeodesicStyle style = GeodesicStyle::Hyperbolic;
  std::vector<std::string> highlight;  // metadata labels drawn on top
  bool background = true;
  bool fill_gaps = false;
};

/// SVG 1.1 document. Coordinates are rounded to 6 decimals, so output is a
/// pure function of the inputs. Leaves are drawn in canonical order, one
/// <path class="leaf"> each.
std::string render_svg(const LaminationSlice& s, const RenderSpec& spec = {});
std::string render_svg(const CertifiedSlice& s, const RenderSpec& spec = {});

/// Path data of one geodesic in a disk of radius r centred at (c, c).
std::string geodesic_path(const Chord& chord, double c, double r, GeodesicStyle style);

}  // namespace lamkit
