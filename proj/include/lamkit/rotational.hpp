#pragma once

#include "lamkit/lamination.hpp"

#include <string>
#include <vector>

namespace lamkit {

struct RotationalOrbit {
  std::vector<Angle> orbit;  // sorted
  mpq_class rotation;
};

/// All sigma_d orbits of exact period q on which sigma_d acts as a nonzero
/// rotation of the cyclic order.
std::vector<RotationalOrbit> rotational_orbits(int d, int q);

enum class RotType { A, B, C, D };
std::string to_string(RotType t);

struct RotationalSet {
  FiniteGap gap;
  int degree = 3;
  mpq_class rotation;
  int orbit_count = 1;
  int period = 1;
  bool diameter = false;  // {0,1/2}, admitted by convention as type D

  /// Hole i maps onto hole hole_image(i) (or collapses, never for these).
  size_t hole_image(size_t i) const;
  /// Hole indices of the cycle through hole i.
  std::vector<size_t> hole_cycle(size_t i) const;
  std::string str() const { return gap.str(); }
};

/// Throws NotRotational, NotAlternating or PeriodMismatch.
RotationalSet build_rotational_set(const std::vector<std::vector<Angle>>& orbits, int d = 3);
/// Splits the vertices into orbits and calls the above.
RotationalSet rotational_set_from_vertices(const std::vector<Angle>& vertices, int d = 3);

RotType classify_rotational(const RotationalSet& g);

/// Every one- or two-orbit rotational set of exact period q (sigma_d).
std::vector<RotationalSet> rotational_sets(int d, int q);

struct AttachedFatouGap {
  Chord edge;
  size_t hole_index = 0;
  int period = 1;
  bool critical = false;
  FatouCycle cycle;  // member 0 sits on `edge`
  std::vector<FatouCycle::Edge> edges;
};

/// One gap per hole of G, in hole order.
std::vector<AttachedFatouGap> attached_fatou_gaps(const RotationalSet& g, int depth);

/// Number of sheets of the first return map on the attached gap: the
/// product of the local degrees along its cycle.
int return_degree(const AttachedFatouGap& f);

}  // namespace lamkit
