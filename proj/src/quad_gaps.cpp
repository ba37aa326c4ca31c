#include "lamkit/quad_gaps.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lamkit {

namespace {

const mpq_class kThird(1, 3);

}  // namespace

CriticalChord CriticalChord::from(const Chord& c) {
  mpq_class gap = c.hi().value() - c.lo().value();
  CriticalChord out;
  out.chord = c;
  out.image = sigma(3, c.lo());
  if (gap == kThird) {
    out.short_arc = Arc::open(c.lo(), c.hi());
    out.long_arc = Arc::open(c.hi(), c.lo());
  } else if (gap == 2 * kThird) {
    out.short_arc = Arc::open(c.hi(), c.lo());
    out.long_arc = Arc::open(c.lo(), c.hi());
  } else {
    throw Error("NotCritical", c.str() + " does not have endpoints 1/3 apart");
  }
  out.co_critical = out.long_arc.start + kThird;
  return out;
}

bool pi_membership(const CriticalChord& c, const Angle& x) {
  Arc closed = c.long_arc.closure();
  for (const auto& y : orbit_info(3, x).orbit)
    if (!closed.contains(y)) return false;
  return true;
}

std::string to_string(CriticalKind k) {
  switch (k) {
    case CriticalKind::RegularCritical: return "regular";
    case CriticalKind::Caterpillar: return "caterpillar";
    case CriticalKind::PeriodicType: return "periodic";
    case CriticalKind::BoundaryDegenerate: return "boundary-degenerate";
  }
  return "?";
}

Classification classify_critical_chord(const CriticalChord& c) {
  Arc closed = c.long_arc.closure();
  auto info = orbit_info(3, c.image);
  bool touches = false;
  for (size_t i = 0; i < info.orbit.size(); ++i) {
    const Angle& y = info.orbit[i];
    if (!closed.contains(y)) return {CriticalKind::PeriodicType, static_cast<int>(i) + 1};
    if (!c.long_arc.contains(y)) touches = true;
  }
  if (!touches) return {CriticalKind::RegularCritical, 0};
  if (is_periodic(3, c.chord.lo()) || is_periodic(3, c.chord.hi()))
    return {CriticalKind::Caterpillar, 0};
  return {CriticalKind::BoundaryDegenerate, 0};
}

std::string to_string(GapType t) {
  switch (t) {
    case GapType::RegularCritical: return "regular";
    case GapType::Periodic: return "periodic";
    case GapType::Fa: return "Fa";
    case GapType::Fb: return "Fb";
  }
  return "?";
}

Chord QuadGap::sibling_major() const { return Chord(b - kThird, a + kThird); }

FatouCycle QuadGap::cycle() const { return FatouCycle(3, {Arc::closed(b, a)}); }

std::string QuadGap::label() const {
  if (type == GapType::Fa || type == GapType::Fb) return to_string(type);
  return "U(" + major().str() + ")";
}

QuadGap QuadGap::Fa() {
  QuadGap u;
  u.type = GapType::Fa;
  u.period = 1;
  u.a = Angle(1, 2);
  u.b = Angle(0, 1);
  return u;
}

QuadGap QuadGap::Fb() {
  QuadGap u;
  u.type = GapType::Fb;
  u.period = 1;
  u.a = Angle(0, 1);
  u.b = Angle(1, 2);
  return u;
}

QuadGap QuadGap::regular(const CriticalChord& c) {
  QuadGap u;
  u.type = GapType::RegularCritical;
  u.period = 0;
  u.a = c.short_arc.start;
  u.b = c.short_arc.end;
  u.seed = c;
  return u;
}

QuadGap QuadGap::from_major(const Chord& m) {
  if (m == Chord(Angle(0, 1), Angle(1, 2)))
    throw Error("AmbiguousMajor", "the diameter is the major of both Fa and Fb");
  if (!is_periodic_type_major(m))
    throw Error("NotPeriodicTypeMajor", m.str() + " is not a periodic-type major");
  QuadGap u;
  u.type = GapType::Periodic;
  u.period = orbit_info(3, m.lo()).period;
  if (ccw_dist(m.lo(), m.hi()) < mpq_class(1, 2)) {
    u.a = m.lo();
    u.b = m.hi();
  } else {
    u.a = m.hi();
    u.b = m.lo();
  }
  return u;
}

QuadGap build_quad_gap(const CriticalChord& c, int period_limit) {
  auto cls = classify_critical_chord(c);
  switch (cls.kind) {
    case CriticalKind::RegularCritical: return QuadGap::regular(c);
    case CriticalKind::Caterpillar:
      throw Error("CaterpillarInput", c.chord.str() + " has a periodic endpoint");
    case CriticalKind::BoundaryDegenerate:
      throw Error("BoundaryDegenerate", c.chord.str() + " orbit touches its own endpoint");
    case CriticalKind::PeriodicType: break;
  }
  int k = cls.period;
  if (k > period_limit)
    throw Error("PeriodLimit", "period " + std::to_string(k) + " exceeds the search limit");
  // sigma^k-fixed angles are j/(3^k-1); take the closest ones inside
  // the closed long arc, walking in from each end.
  mpz_class n = ipow(3, static_cast<unsigned long>(k)) - 1;
  const Angle& s = c.long_arc.start;
  const Angle& e = c.long_arc.end;
  mpz_class js, je;
  mpz_class num = s.num() * n;
  mpz_cdiv_q(js.get_mpz_t(), num.get_mpz_t(), s.den().get_mpz_t());
  num = e.num() * n;
  mpz_fdiv_q(je.get_mpz_t(), num.get_mpz_t(), e.den().get_mpz_t());
  Angle x(mpq_class(js, n)), y(mpq_class(je, n));
  Arc closed = c.long_arc.closure();
  if (!closed.contains(x) || !closed.contains(y) || ccw_dist(s, x) > ccw_dist(s, y))
    throw Error("ValidationFailed", "no periodic major inside L(" + c.chord.str() + ")");
  QuadGap u;
  u.period = k;
  u.a = y;
  u.b = x;
  u.seed = c;
  Chord m = u.major();
  if (m == Chord(Angle(0, 1), Angle(1, 2))) {
    u.type = u.a.is_zero() ? GapType::Fb : GapType::Fa;
  } else {
    u.type = GapType::Periodic;
  }
  for (const auto& p : {u.a, u.b})
    if (orbit_info(3, p).period != k || orbit_info(3, p).preperiod != 0)
      throw Error("ValidationFailed", p.str() + " does not have exact period " + std::to_string(k));
  Arc hole = u.major_hole();
  for (const auto& p : {u.a, u.b})
    for (const auto& q : orbit_info(3, p).orbit)
      if (hole.contains(q))
        throw Error("ValidationFailed", "orbit of " + p.str() + " enters the major hole");
  return u;
}

std::vector<FatouCycle::Edge> gap_edges(const QuadGap& u, int depth) {
  return u.cycle().edges(0, depth);
}

FatouCycle vassal_cycle(const QuadGap& u) {
  if (!u.is_periodic())
    throw Error("RegularCriticalInput", "regular critical gaps have no vassal");
  std::vector<Arc> supports;
  Angle a = u.a, b = u.b;
  for (int j = 0; j < u.period; ++j) {
    supports.push_back(Arc::closed(a, b));
    a = sigma(3, a);
    b = sigma(3, b);
  }
  return FatouCycle(3, std::move(supports));
}

VassalGap vassal(const QuadGap& u, int depth) {
  VassalGap v;
  v.cycle = vassal_cycle(u);
  v.owner = u;
  v.period = u.period;
  v.a2 = u.a + kThird;
  v.b2 = u.b - kThird;
  v.edges = v.cycle.edges(0, depth);
  return v;
}

CaterpillarGap caterpillar_edges(const QuadGap& u, Side side, int depth) {
  if (!u.is_periodic())
    throw Error("RegularCriticalInput", "caterpillars hang off periodic majors only");
  mpz_class scale = ipow(3, static_cast<unsigned long>(u.period));
  CaterpillarGap g;
  g.head = u.major();
  // inverse branch of sigma^k fixing the far endpoint of the major
  std::function<Angle(const Angle&)> back;
  if (side == Side::B) {
    g.critical_edge = Chord(u.b - kThird, u.b);
    back = [&](const Angle& y) { return u.a + ccw_dist(u.a, y) / mpq_class(scale); };
  } else {
    g.critical_edge = Chord(u.a, u.a + kThird);
    back = [&](const Angle& y) { return u.b - ccw_dist(y, u.b) / mpq_class(scale); };
  }
  Chord cur = g.critical_edge;
  for (int r = 0; r < depth; ++r) {
    g.edges.push_back(cur);
    cur = Chord(back(cur.lo()), back(cur.hi()));
  }
  return g;
}

Wings wings(const QuadGap& u) {
  return {Arc::closed(u.a, u.b - kThird), Arc::closed(u.a + kThird, u.b)};
}

namespace {

// Arc behind leaf l away from the rest of the orbit; nullopt when the other
// leaves sit on both sides.
std::optional<Arc> hole_behind(const Chord& l, const std::vector<Chord>& orbit) {
  Arc up = Arc::open(l.lo(), l.hi());
  bool inside = false, outside = false;
  for (const auto& m : orbit) {
    if (m == l) continue;
    (up.contains(m.lo()) ? inside : outside) = true;
  }
  if (inside && outside) return std::nullopt;
  return inside ? Arc::open(l.hi(), l.lo()) : up;
}

bool semi_laminational(const std::vector<Chord>& orbit, const std::vector<Arc>& holes) {
  for (size_t i = 0; i < orbit.size(); ++i) {
    Arc img = Arc::open(sigma(3, holes[i].start), sigma(3, holes[i].end));
    Chord next = sigma(3, orbit[i]);
    auto it = std::find(orbit.begin(), orbit.end(), next);
    if (it == orbit.end()) return false;
    if (img != holes[static_cast<size_t>(it - orbit.begin())]) return false;
  }
  return true;
}

}  // namespace

bool is_periodic_type_major(const Chord& l) {
  if (l.degenerate()) return false;
  auto ia = orbit_info(3, l.lo()), ib = orbit_info(3, l.hi());
  if (ia.preperiod != 0 || ib.preperiod != 0)
    throw Error("NotPeriodic", l.str() + " has a preperiodic endpoint");
  std::vector<Chord> orbit;
  Chord cur = l;
  do {
    orbit.push_back(cur);
    cur = sigma(3, cur);
  } while (cur != l && orbit.size() < 4096);
  if (cur != l) return false;
  // endpoints must be fixed by the return map of the leaf
  if (sigma_n(3, l.lo(), static_cast<int>(orbit.size())) != l.lo()) return false;
  for (size_t i = 0; i < orbit.size(); ++i)
    for (size_t j = i + 1; j < orbit.size(); ++j)
      if (orbit[i].shares_endpoint(orbit[j]) || chords_cross(orbit[i], orbit[j])) return false;

  auto accept = [&](const std::vector<Arc>& holes) {
    if (!semi_laminational(orbit, holes)) return false;
    mpq_class mine = holes[0].length();
    if (mine <= kThird) return false;
    for (const auto& h : holes)
      if (h.length() > mine) return false;
    return true;
  };
  if (orbit.size() == 1) {
    return accept({Arc::open(l.lo(), l.hi())}) || accept({Arc::open(l.hi(), l.lo())});
  }
  std::vector<Arc> holes;
  for (const auto& m : orbit) {
    auto h = hole_behind(m, orbit);
    if (!h) return false;
    holes.push_back(*h);
  }
  return accept(holes);
}

std::vector<QuadGap> periodic_type_gaps(int k) {
  mpz_class n = ipow(3, static_cast<unsigned long>(k)) - 1;
  long nn = n.get_si();
  std::vector<Angle> pts;
  for (long j = 0; j < nn; ++j) {
    Angle x(j, nn);
    if (orbit_info(3, x).period == k) pts.push_back(x);
  }
  std::vector<QuadGap> out;
  std::set<Chord> seen;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      Chord m(pts[i], pts[j]);
      if (!is_periodic_type_major(m)) continue;
      if (m == Chord(Angle(0, 1), Angle(1, 2))) {
        out.push_back(QuadGap::Fa());
        out.push_back(QuadGap::Fb());
      } else {
        out.push_back(QuadGap::from_major(m));
      }
    }
  return out;
}

}  // namespace lamkit
