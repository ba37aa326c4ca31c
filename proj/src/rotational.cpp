#include "lamkit/rotational.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lamkit {

std::string to_string(RotType t) {
  switch (t) {
    case RotType::A: return "A";
    case RotType::B: return "B";
    case RotType::C: return "C";
    case RotType::D: return "D";
  }
  return "?";
}

std::vector<RotationalOrbit> rotational_orbits(int d, int q) {
  mpz_class n = ipow(d, static_cast<unsigned long>(q)) - 1;
  long nn = n.get_si();
  std::vector<RotationalOrbit> out;
  std::set<Angle> used;
  for (long j = 0; j < nn; ++j) {
    Angle x(j, nn);
    if (used.count(x)) continue;
    auto info = orbit_info(d, x);
    if (info.preperiod != 0 || info.period != q) continue;
    for (const auto& y : info.orbit) used.insert(y);
    if (q < 2) continue;
    try {
      FiniteGap g(info.orbit);
      mpq_class r = rotation_number(g, d);
      if (sgn(r) != 0) out.push_back({g.vertices(), r});
    } catch (const Error&) {
    }
  }
  std::sort(out.begin(), out.end(), [](const RotationalOrbit& a, const RotationalOrbit& b) {
    return a.orbit.front() < b.orbit.front();
  });
  return out;
}

size_t RotationalSet::hole_image(size_t i) const {
  Arc h = gap.hole(i);
  Angle s = sigma(degree, h.start);
  for (size_t j = 0; j < gap.size(); ++j)
    if (gap.vertices()[j] == s) return j;
  throw Error("NotInvariant", "hole image does not start at a vertex");
}

std::vector<size_t> RotationalSet::hole_cycle(size_t i) const {
  std::vector<size_t> out{i};
  for (size_t j = hole_image(i); j != i; j = hole_image(j)) out.push_back(j);
  return out;
}

namespace {

bool alternate(const std::vector<Angle>& x, const std::vector<Angle>& y) {
  std::vector<std::pair<Angle, int>> all;
  for (const auto& a : x) all.emplace_back(a, 0);
  for (const auto& a : y) all.emplace_back(a, 1);
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i].second == all[(i + 1) % all.size()].second) return false;
  return true;
}

}  // namespace

RotationalSet build_rotational_set(const std::vector<std::vector<Angle>>& orbits, int d) {
  if (orbits.empty() || orbits.size() > 2)
    throw Error("NotRotational", "a rotational set has one or two orbits");
  std::vector<OrbitInfo> infos;
  for (const auto& o : orbits) {
    if (o.empty()) throw Error("NotRotational", "empty orbit");
    auto info = orbit_info(d, o.front());
    if (info.preperiod != 0) throw Error("NotRotational", o.front().str() + " is not periodic");
    std::set<Angle> want(o.begin(), o.end()), got(info.orbit.begin(), info.orbit.end());
    if (want != got) throw Error("NotRotational", "vertices do not form one orbit");
    infos.push_back(info);
  }
  std::vector<Angle> all;
  for (const auto& info : infos) all.insert(all.end(), info.orbit.begin(), info.orbit.end());
  RotationalSet g;
  g.degree = d;
  g.orbit_count = static_cast<int>(orbits.size());
  g.period = infos.front().period;
  if (orbits.size() == 2) {
    if (infos[0].period != infos[1].period)
      throw Error("PeriodMismatch", "orbits have periods " + std::to_string(infos[0].period) +
                                        " and " + std::to_string(infos[1].period));
    if (!alternate(infos[0].orbit, infos[1].orbit))
      throw Error("NotAlternating", "the two orbits do not alternate");
  }
  g.gap = FiniteGap(all);
  if (d == 3 && g.gap == FiniteGap({Angle(0, 1), Angle(1, 2)})) {
    g.diameter = true;
    g.rotation = 0;
    return g;
  }
  try {
    g.rotation = rotation_number(g.gap, d);
  } catch (const Error& e) {
    throw Error("NotRotational", e.what());
  }
  if (sgn(g.rotation) == 0) throw Error("NotRotational", "rotation number is zero");
  if (orbits.size() == 2) {
    for (const auto& info : infos)
      if (rotation_number(FiniteGap(info.orbit), d) != g.rotation)
        throw Error("NotRotational", "orbits rotate differently");
  }
  if (!g.gap.is_invariant(d)) throw Error("NotRotational", "hull is not invariant");
  return g;
}

RotationalSet rotational_set_from_vertices(const std::vector<Angle>& vertices, int d) {
  std::set<Angle> left(vertices.begin(), vertices.end());
  std::vector<std::vector<Angle>> orbits;
  while (!left.empty()) {
    auto info = orbit_info(d, *left.begin());
    std::vector<Angle> o;
    for (const auto& y : info.orbit) {
      if (!left.erase(y)) throw Error("NotRotational", "vertex set is not sigma-closed");
      o.push_back(y);
    }
    if (info.preperiod != 0) throw Error("NotRotational", "preperiodic vertex");
    orbits.push_back(o);
  }
  return build_rotational_set(orbits, d);
}

RotType classify_rotational(const RotationalSet& g) {
  if (g.diameter) return RotType::D;
  std::vector<size_t> maj;
  mpq_class bound(1, g.degree);
  for (size_t i = 0; i < g.gap.size(); ++i)
    if (g.gap.hole(i).length() >= bound) maj.push_back(i);
  if (maj.size() == 1) return RotType::A;
  if (maj.size() != 2) throw Error("NotRotational", "unexpected number of majors");
  auto cyc = g.hole_cycle(maj[0]);
  return std::find(cyc.begin(), cyc.end(), maj[1]) != cyc.end() ? RotType::B : RotType::D;
}

std::vector<RotationalSet> rotational_sets(int d, int q) {
  auto orbits = rotational_orbits(d, q);
  std::vector<RotationalSet> out;
  for (const auto& o : orbits) out.push_back(build_rotational_set({o.orbit}, d));
  for (size_t i = 0; i < orbits.size(); ++i)
    for (size_t j = i + 1; j < orbits.size(); ++j) {
      if (orbits[i].rotation != orbits[j].rotation) continue;
      if (!alternate(orbits[i].orbit, orbits[j].orbit)) continue;
      try {
        out.push_back(build_rotational_set({orbits[i].orbit, orbits[j].orbit}, d));
      } catch (const Error&) {
      }
    }
  return out;
}

std::vector<AttachedFatouGap> attached_fatou_gaps(const RotationalSet& g, int depth) {
  std::vector<AttachedFatouGap> out;
  mpq_class bound(1, g.degree);
  for (size_t i = 0; i < g.gap.size(); ++i) {
    AttachedFatouGap f;
    f.edge = g.gap.edge(i);
    f.hole_index = i;
    auto cyc = g.hole_cycle(i);
    f.period = static_cast<int>(cyc.size());
    std::vector<Arc> supports;
    for (size_t j : cyc) supports.push_back(g.gap.hole(j).closure());
    f.critical = g.gap.hole(i).length() >= bound;
    f.cycle = FatouCycle(g.degree, std::move(supports));
    f.edges = f.cycle.edges(0, depth);
    out.push_back(std::move(f));
  }
  return out;
}

int return_degree(const AttachedFatouGap& f) {
  // a hole of length L maps onto the next hole wrapping floor(d*L) extra times
  int deg = 1;
  for (int j = 0; j < f.cycle.period(); ++j) {
    const Arc& s = f.cycle.support(j);
    mpq_class len = s.length() * f.cycle.degree();
    mpz_class whole;
    mpz_fdiv_q(whole.get_mpz_t(), len.get_num_mpz_t(), len.get_den_mpz_t());
    deg *= static_cast<int>(whole.get_si()) + 1;
  }
  return deg;
}

}  // namespace lamkit
