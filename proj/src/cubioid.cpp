#include "lamkit/cubioid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lamkit {

namespace {

mpz_class pow2(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace

PsiCoding::PsiCoding(std::shared_ptr<const FatouCycle> cycle) : cycle_(std::move(cycle)) {
  region_ = std::make_shared<FatouRegion>(cycle_, 0, "coded");
  int n = cycle_->period();
  scale_ = mpq_class(ipow(3, static_cast<unsigned long>(n)));
  const Arc& s0 = cycle_->support(0);
  if (s0.start != s0.end && sigma_n(3, s0.start, n) == s0.start &&
      sigma_n(3, s0.end, n) == s0.end) {
    anchor_edge_ = true;
    a_end_ = s0.start;
    a_begin_ = s0.end;
  } else {
    mpz_class big = ipow(3, static_cast<unsigned long>(n)) - 1;
    if (big > 2000000) throw Error("PeriodLimit", "return period too large for a fixed-point scan");
    long nn = big.get_si();
    std::vector<Angle> fixed;
    for (long j = 0; j < nn; ++j) {
      Angle x(j, nn);
      if (s0.contains(x) && in_base(x)) fixed.push_back(x);
    }
    if (fixed.size() != 1)
      throw Error("NotQuadratic", "expected one fixed base point, found " +
                                      std::to_string(fixed.size()));
    a_end_ = a_begin_ = fixed.front();
  }
  std::set<Angle> anchor{a_end_, a_begin_};
  std::set<Angle> co;
  unsigned long count = ipow(3, static_cast<unsigned long>(n)).get_ui();
  for (const auto& p : anchor)
    for (unsigned long m = 0; m < count; ++m) {
      Angle x(mpq_class((p.value() + m) / scale_));
      if (!anchor.count(x) && s0.contains(x) && in_base(x)) co.insert(x);
    }
  co_.assign(co.begin(), co.end());
  std::sort(co_.begin(), co_.end(),
            [&](const Angle& x, const Angle& y) { return cut(x) < cut(y); });
  if (co_.empty() || co_.size() > 2)
    throw Error("NotQuadratic", "return map is not two-to-one on the base");
}

PsiCoding PsiCoding::of_gap(const QuadGap& u) {
  return PsiCoding(std::make_shared<FatouCycle>(u.cycle()));
}

PsiCoding PsiCoding::of_vassal(const QuadGap& u) {
  return PsiCoding(std::make_shared<FatouCycle>(vassal_cycle(u)));
}

PsiCoding PsiCoding::for_tuning(const QuadGap& u) {
  return u.is_periodic() ? of_vassal(u) : of_gap(u);
}

int PsiCoding::bit(const Angle& x) const {
  if (x == co_.front()) return anchor_edge_ && co_.size() == 2 ? 0 : 1;
  return cut(x) < cut(co_.front()) ? 0 : 1;
}

Angle PsiCoding::project(const Angle& x) const {
  if (!in_base(x)) throw Error("NotInBase", x.str() + " is not on the coded gap");
  std::map<Angle, size_t> seen;
  std::vector<int> bits;
  Angle y = x;
  while (!seen.count(y)) {
    seen.emplace(y, bits.size());
    bits.push_back(bit(y));
    y = return_map(y);
  }
  size_t m = seen[y];
  size_t p = bits.size() - m;
  mpz_class pre = 0, per = 0;
  for (size_t i = 0; i < m; ++i) pre = pre * 2 + bits[i];
  for (size_t i = m; i < bits.size(); ++i) per = per * 2 + bits[i];
  mpz_class two_m = pow2(m);
  mpq_class v = mpq_class(pre, two_m) + mpq_class(per, two_m * (pow2(p) - 1));
  v.canonicalize();
  return Angle(v);
}

// Preimage of y under the return map, walked back through the supports, on
// the side of the cut given by w.
Angle PsiCoding::branch(int w, const Angle& y) const {
  int n = cycle_->period();
  std::vector<Angle> cur{y};
  for (int j = n - 1; j >= 0; --j) {
    std::vector<Angle> next;
    for (const auto& z : cur)
      for (const auto& x : preimages(3, z))
        if (cycle_->support(j).contains(x)) next.push_back(x);
    cur = std::move(next);
  }
  std::optional<Angle> best;
  for (const auto& x : cur)
    if (bit(x) == w && (!best || cut(x) < cut(*best))) best = x;
  if (!best) throw Error("NotInBase", "no branch " + std::to_string(w) + " over " + y.str());
  return *best;
}

Angle PsiCoding::lift(const Angle& t) const {
  mpz_class den = t.den();
  unsigned long m = mpz_scan1(den.get_mpz_t(), 0);
  mpz_class odd = den >> m;
  unsigned long p = 1;
  if (odd != 1) {
    mpz_class r = 2 % odd;
    while (r != 1) {
      r = (r * 2) % odd;
      ++p;
    }
  }
  std::vector<int> digits;
  mpq_class x = t.value();
  for (unsigned long i = 0; i < m + p; ++i) {
    x *= 2;
    int d = x >= 1 ? 1 : 0;
    x -= d;
    digits.push_back(d);
  }
  // The periodic part is the fixed point of B = branch(e_0) o ... o branch(e_{p-1}).
  // B has slope 3^{-np}, so its fixed point is M/(3^{np}-1) where M is read
  // off B on the affine piece containing it; iterating B finds that piece.
  auto apply = [&](Angle z) {
    for (size_t i = m + p; i-- > m;) z = branch(digits[i], z);
    return z;
  };
  mpz_class big = ipow(3, static_cast<unsigned long>(cycle_->period()) * p);
  Angle z = a_end_;
  for (int iter = 0;; ++iter) {
    Angle bz = apply(z);
    if (bz == z) break;
    if (iter > 64) throw Error("LiftFailed", "no periodic point for " + t.str());
    mpq_class shift = bz.value() * big - z.value();
    mpz_class mm;
    mpz_fdiv_q(mm.get_mpz_t(), shift.get_num_mpz_t(), shift.get_den_mpz_t());
    z = Angle(mpq_class(mm, big - 1));
    if (apply(z) == z) break;
    z = bz;
  }
  for (size_t i = m; i-- > 0;) z = branch(digits[i], z);
  return z;
}

Angle psi_project(const PsiCoding& coding, const Angle& x) { return coding.project(x); }
Angle psi_lift(const PsiCoding& coding, const Angle& t) { return coding.lift(t); }

std::string to_string(GapDescriptor::Kind k) {
  switch (k) {
    case GapDescriptor::Kind::Finite: return "finite";
    case GapDescriptor::Kind::QuadGap: return "quadgap";
    case GapDescriptor::Kind::Vassal: return "vassal";
    case GapDescriptor::Kind::Attached: return "attached";
    case GapDescriptor::Kind::Lifted: return "lifted";
  }
  return "?";
}

GapDescriptor GapDescriptor::of_finite(const FiniteGap& g, bool rotational, std::string label) {
  GapDescriptor d;
  d.kind = Kind::Finite;
  d.finite = g;
  d.rotational = rotational;
  d.label = std::move(label);
  return d;
}

GapDescriptor GapDescriptor::of_quad(const QuadGap& u) {
  GapDescriptor d;
  d.kind = Kind::QuadGap;
  d.quad = u;
  d.label = u.label();
  return d;
}

GapDescriptor GapDescriptor::of_vassal(const QuadGap& u) {
  GapDescriptor d;
  d.kind = Kind::Vassal;
  d.quad = u;
  d.label = "V(" + u.label() + ")";
  return d;
}

GapDescriptor GapDescriptor::of_attached(const RotationalSet& g, size_t hole) {
  GapDescriptor d;
  d.kind = Kind::Attached;
  d.rot_vertices = g.gap.vertices();
  d.hole_index = hole;
  d.label = "attached " + g.gap.edge(hole).str();
  return d;
}

GapDescriptor GapDescriptor::of_lifted(const QuadGap& host, const RotationalSet& g2,
                                       size_t hole) {
  GapDescriptor d;
  d.kind = Kind::Lifted;
  d.quad = host;
  d.rot_vertices = g2.gap.vertices();
  d.hole_index = hole;
  d.label = "lifted " + g2.gap.edge(hole).str() + " in " + host.label();
  return d;
}

std::optional<GapCycle> realize(const GapDescriptor& g) {
  GapCycle c;
  switch (g.kind) {
    case GapDescriptor::Kind::Finite: return std::nullopt;
    case GapDescriptor::Kind::QuadGap: {
      c.fatou = std::make_shared<FatouCycle>(g.quad->cycle());
      c.period = 1;
      c.critical = true;
      c.attachment = {g.quad->major()};
      return c;
    }
    case GapDescriptor::Kind::Vassal: {
      c.fatou = std::make_shared<FatouCycle>(vassal_cycle(*g.quad));
      c.period = c.fatou->period();
      c.critical = true;
      for (int j = 0; j < c.period; ++j) c.attachment.push_back(c.fatou->outer_edge(j));
      return c;
    }
    case GapDescriptor::Kind::Attached: {
      auto rs = rotational_set_from_vertices(g.rot_vertices, 3);
      auto all = attached_fatou_gaps(rs, 0);
      const auto& f = all.at(g.hole_index);
      c.fatou = std::make_shared<FatouCycle>(f.cycle);
      c.period = f.period;
      c.critical = f.critical;
      for (size_t h : rs.hole_cycle(g.hole_index)) c.attachment.push_back(rs.gap.edge(h));
      return c;
    }
    case GapDescriptor::Kind::Lifted: {
      auto coding = PsiCoding::for_tuning(*g.quad);
      auto g2 = rotational_set_from_vertices(g.rot_vertices, 2);
      int n = coding.return_period();
      auto cyc = g2.hole_cycle(g.hole_index);
      c.period = n * static_cast<int>(cyc.size());
      c.critical = g2.gap.hole(g.hole_index).length() >= mpq_class(1, 2);
      for (size_t h : cyc) {
        Arc hole = g2.gap.hole(h);
        Chord l(coding.lift(hole.start), coding.lift(hole.end));
        for (int r = 0; r < n; ++r) c.attachment.push_back(sigma_n(3, l, r));
      }
      return c;
    }
  }
  return std::nullopt;
}

CertifiedSlice certify_quadgap(const QuadGap& u, int depth) {
  CertifiedSlice cs;
  cs.slice = canonical_lam_quadgap(u, depth);
  cs.metadata.push_back(GapDescriptor::of_quad(u));
  if (u.is_periodic()) cs.metadata.push_back(GapDescriptor::of_vassal(u));
  return cs;
}

CertifiedSlice certify_rotational(const RotationalSet& g, int depth) {
  CertifiedSlice cs;
  cs.slice = canonical_lam_rotational(g, depth);
  cs.metadata.push_back(GapDescriptor::of_finite(g.gap, !g.diameter, "G " + g.gap.str()));
  for (size_t i = 0; i < g.gap.size(); ++i)
    cs.metadata.push_back(GapDescriptor::of_attached(g, i));
  return cs;
}

namespace {

// Union-find over angles.
class Components {
 public:
  size_t id(const Angle& a) {
    auto [it, fresh] = ids_.emplace(a, parent_.size());
    if (fresh) parent_.push_back(parent_.size());
    return it->second;
  }
  size_t find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(const Angle& a, const Angle& b) {
    size_t x = find(id(a)), y = find(id(b));
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }
  size_t root(const Angle& a) { return find(id(a)); }

 private:
  std::map<Angle, size_t> ids_;
  std::vector<size_t> parent_;
};

std::map<size_t, std::pair<std::set<Angle>, std::vector<Chord>>> components_of(
    const std::vector<Chord>& leaves) {
  Components uf;
  for (const auto& c : leaves) uf.join(c.lo(), c.hi());
  std::map<size_t, std::pair<std::set<Angle>, std::vector<Chord>>> out;
  for (const auto& c : leaves) {
    auto& slot = out[uf.root(c.lo())];
    slot.first.insert(c.lo());
    slot.first.insert(c.hi());
    slot.second.push_back(c);
  }
  return out;
}

// A tuning region: admits a chord through the base gap when its projection
// is admitted by the sigma_2 regions.
class LiftedRegion : public Region {
 public:
  LiftedRegion(std::shared_ptr<const FatouRegion> base, PsiCoding coding,
               std::vector<RegionPtr> quad)
      : base_(std::move(base)), coding_(std::move(coding)), quad_(std::move(quad)) {}

  bool admits(const Chord& c) const override {
    if (base_->admits(c)) return true;
    auto rep = [&](const Angle& x) {
      auto h = coding_.hole_of(x);
      return h ? h->start : x;
    };
    Chord pc(coding_.project(rep(c.lo())), coding_.project(rep(c.hi())));
    if (pc.degenerate()) return false;
    return std::all_of(quad_.begin(), quad_.end(),
                       [&](const RegionPtr& r) { return r->admits(pc); });
  }
  std::string label() const override { return "tuned " + base_->label(); }

 private:
  std::shared_ptr<const FatouRegion> base_;
  PsiCoding coding_;
  std::vector<RegionPtr> quad_;
};

std::vector<PeriodicClass> rotational_classes(const LaminationSlice& q) {
  std::vector<PeriodicClass> out;
  for (auto& c : periodic_classes(q))
    if (c.invariant && sgn(c.rotation) != 0) out.push_back(std::move(c));
  return out;
}

}  // namespace

std::vector<PeriodicClass> periodic_classes(const LaminationSlice& s) {
  std::vector<Chord> per;
  for (const auto& l : s.leaves)
    if (orbit_shape(s.degree, l.chord.lo()).first == 0 &&
        orbit_shape(s.degree, l.chord.hi()).first == 0)
      per.push_back(l.chord);
  std::vector<PeriodicClass> out;
  for (auto& [root, comp] : components_of(per)) {
    PeriodicClass pc;
    pc.vertices.assign(comp.first.begin(), comp.first.end());
    pc.leaves = comp.second;
    std::sort(pc.leaves.begin(), pc.leaves.end());
    pc.period = orbit_shape(s.degree, pc.vertices.front()).second;
    std::set<Angle> img;
    for (const auto& v : pc.vertices) img.insert(sigma(s.degree, v));
    pc.invariant = img == comp.first;
    pc.rotation = 0;
    if (pc.invariant && pc.vertices.size() >= 2) {
      try {
        pc.rotation = rotation_number(FiniteGap(pc.vertices), s.degree);
      } catch (const Error&) {
      }
    }
    out.push_back(std::move(pc));
  }
  std::sort(out.begin(), out.end(), [](const PeriodicClass& a, const PeriodicClass& b) {
    return a.vertices.front() < b.vertices.front();
  });
  return out;
}

int period_bound(const LaminationSlice& s) {
  int g = 1;
  for (const auto& c : s.generators)
    for (const auto& a : {c.lo(), c.hi()}) {
      auto [pre, per] = orbit_shape(s.degree, a);
      if (pre == 0) g = std::max(g, per);
    }
  return 2 * g + 6;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Member: return "member";
    case Verdict::NonMember: return "non-member";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

CertifiedSlice tune(const QuadGap& u, const LaminationSlice& quad, int depth) {
  if (quad.degree != 2) throw Error("NotCardioidMember", "tuning needs a sigma_2 lamination");
  if (quad.leaves.empty()) return certify_quadgap(u, depth);
  auto rot = rotational_classes(quad);
  if (rot.size() != 1)
    throw Error("NotCardioidMember", "expected exactly one rotational set, found " +
                                         std::to_string(rot.size()));
  mpq_class pq = rot.front().rotation;
  auto g2 = quadratic_rotational_set(pq);
  if (g2.gap.vertices() != rot.front().vertices)
    throw Error("NotCardioidMember", "rotational class is not the sigma_2 rotational set");

  PsiCoding coding = PsiCoding::for_tuning(u);
  std::vector<Chord> seeds = quadgap_seeds(u);
  std::set<Chord> lifted;
  for (const auto& l : rot.front().leaves) {
    Chord c(coding.lift(l.lo()), coding.lift(l.hi()));
    while (!c.degenerate() && lifted.insert(c).second) c = sigma(3, c);
  }
  seeds.insert(seeds.end(), lifted.begin(), lifted.end());

  auto regions = quadgap_regions(u);
  size_t tuned = u.is_periodic() ? 1 : 0;
  auto base = std::dynamic_pointer_cast<const FatouRegion>(regions[tuned]);
  regions[tuned] = std::make_shared<LiftedRegion>(base, coding, quadratic_regions(pq));

  CertifiedSlice cs;
  cs.slice = pullback_engine(3, seeds, regions, depth);
  for (auto& l : cs.slice.leaves)
    if (lifted.count(l.chord) && l.depth == 0) l.origin = LeafOrigin::Lifted;
  cs.metadata.push_back(GapDescriptor::of_quad(u));
  if (u.is_periodic()) cs.metadata.push_back(GapDescriptor::of_vassal(u));
  std::vector<Angle> verts;
  for (const auto& v : g2.gap.vertices()) verts.push_back(coding.lift(v));
  bool invariant = coding.return_period() == 1;
  cs.metadata.push_back(GapDescriptor::of_finite(FiniteGap(verts), invariant,
                                                 "lifted " + g2.gap.str()));
  for (size_t i = 0; i < g2.gap.size(); ++i)
    cs.metadata.push_back(GapDescriptor::of_lifted(u, g2, i));
  return cs;
}

namespace {

// Drops collapsing components and everything that eventually lands in one.
void clean(LaminationSlice& q) {
  std::set<Chord> leaves;
  for (const auto& l : q.leaves) leaves.insert(l.chord);
  std::set<Chord> bad;
  for (auto& [root, comp] : components_of(q.chords())) {
    std::set<Angle> img;
    for (const auto& v : comp.first) img.insert(sigma(2, v));
    if (img.size() < comp.first.size()) bad.insert(comp.second.begin(), comp.second.end());
  }
  if (bad.empty()) return;
  std::vector<Leaf> kept;
  for (const auto& l : q.leaves) {
    Chord c = l.chord;
    bool drop = false;
    for (size_t step = 0; step <= leaves.size() && !c.degenerate(); ++step) {
      if (bad.count(c)) {
        drop = true;
        break;
      }
      c = sigma(2, c);
      if (!leaves.count(c)) break;
    }
    if (!drop) kept.push_back(l);
  }
  q.leaves = std::move(kept);
}

void require_coexistence(const QuadGap& u, const LaminationSlice& s) {
  LaminationSlice both;
  both.degree = 3;
  std::set<Chord> edges;
  for (const auto& e : gap_edges(u, std::min(s.depth, 6))) edges.insert(e.chord);
  both.leaves = s.leaves;
  for (const auto& e : edges) both.leaves.push_back({e, 0, LeafOrigin::Generator});
  both.normalize();
  auto rep = check_unlinked(both);
  if (rep.ok) return;
  for (const auto& v : rep.violations) {
    auto x = v.find(" x ");
    Chord a = Chord::parse(v.substr(0, x)), b = Chord::parse(v.substr(x + 3));
    if (edges.count(a) || edges.count(b))
      throw Error("NotCoexisting", "leaf crosses an edge of " + u.label() + ": " + v);
  }
}

}  // namespace

LaminationSlice project_lamination(const QuadGap& u, const LaminationSlice& s) {
  require_coexistence(u, s);
  PsiCoding coding = PsiCoding::for_tuning(u);
  LaminationSlice q;
  q.degree = 2;
  q.depth = s.depth / coding.return_period();
  for (const auto& l : s.leaves) {
    if (!coding.in_base(l.chord.lo()) || !coding.in_base(l.chord.hi())) continue;
    Chord pc(coding.project(l.chord.lo()), coding.project(l.chord.hi()));
    if (!pc.degenerate()) q.leaves.push_back({pc, l.depth, LeafOrigin::Pullback});
  }
  q.normalize();
  clean(q);
  // generators: the leaves whose images are not leaves below them
  for (const auto& c : rotational_classes(q))
    q.generators.insert(q.generators.end(), c.leaves.begin(), c.leaves.end());
  return q;
}

int intrinsic_depth(const Chord& c, const FiniteGap& g, int limit) {
  Chord x = c;
  for (int i = 0; i <= limit; ++i) {
    if (g.is_edge(x)) return i;
    if (x.degenerate()) return -1;
    x = sigma(2, x);
  }
  return -1;
}

MembershipReport car_membership(const LaminationSlice& q,
                                const std::vector<GapDescriptor>& metadata, int bound) {
  if (q.degree != 2) return {Verdict::NonMember, "not a sigma_2 lamination"};
  if (bound <= 0) bound = period_bound(q);
  std::set<std::vector<Angle>> rot;
  for (const auto& c : periodic_classes(q)) {
    if (c.period > bound)
      return {Verdict::Inconclusive, "DepthInsufficient: periodic class of period " +
                                         std::to_string(c.period) + " exceeds bound " +
                                         std::to_string(bound)};
    if (c.invariant && sgn(c.rotation) != 0) rot.insert(c.vertices);
  }
  for (const auto& m : metadata)
    if (m.kind == GapDescriptor::Kind::Finite && m.rotational) rot.insert(m.finite->vertices());
  if (rot.size() > 1)
    return {Verdict::NonMember, std::to_string(rot.size()) + " rotational sets"};
  if (rot.empty()) {
    if (!q.leaves.empty())
      return {Verdict::Member, "no rotational set; leaves present without one"};
    return {Verdict::Member, "empty"};
  }
  FiniteGap g(*rot.begin());
  mpq_class pq = rotation_number(g, 2);
  auto canon = canonical_quadratic(pq, q.depth);
  int limit = 4 * static_cast<int>(q.leaves.size()) + 64;
  std::set<Chord> mine, theirs;
  for (const auto& l : q.leaves) {
    int k = intrinsic_depth(l.chord, g, limit);
    if (k < 0) return {Verdict::NonMember, l.chord.str() + " is not a pullback of " + g.str()};
    if (k <= q.depth) mine.insert(l.chord);
  }
  for (const auto& l : canon.leaves) theirs.insert(l.chord);
  if (mine != theirs) {
    std::vector<Chord> diff;
    std::set_symmetric_difference(mine.begin(), mine.end(), theirs.begin(), theirs.end(),
                                  std::back_inserter(diff));
    return {Verdict::NonMember, "differs from the canonical lamination of rotation " +
                                    pq.get_str() + " at " + diff.front().str() + " (" +
                                    std::to_string(diff.size()) + " leaves)"};
  }
  return {Verdict::Member, "canonical lamination of rotation " + pq.get_str()};
}

namespace {

struct Scan {
  std::vector<PeriodicClass> classes;
  std::vector<std::pair<GapDescriptor, GapCycle>> cycles;
  std::optional<MembershipReport> early;
};

Scan scan(const CertifiedSlice& cs, int bound) {
  Scan sc;
  const auto& s = cs.slice;
  if (bound <= 0) bound = period_bound(s);
  sc.classes = periodic_classes(s);
  std::set<std::vector<Angle>> rot;
  for (const auto& c : sc.classes) {
    if (c.period > bound) {
      sc.early = MembershipReport{Verdict::Inconclusive,
                                  "DepthInsufficient: periodic class of period " +
                                      std::to_string(c.period) + " exceeds bound " +
                                      std::to_string(bound)};
      return sc;
    }
    if (c.invariant && sgn(c.rotation) != 0) rot.insert(c.vertices);
  }
  for (const auto& m : cs.metadata)
    if (m.kind == GapDescriptor::Kind::Finite && m.rotational) rot.insert(m.finite->vertices());
  if (rot.size() > 1) {
    std::string names;
    for (const auto& v : rot) names += " " + FiniteGap(v).str();
    sc.early = MembershipReport{Verdict::NonMember, "TwoRotationalSets:" + names};
    return sc;
  }
  for (const auto& m : cs.metadata)
    if (auto c = realize(m)) sc.cycles.emplace_back(m, *c);
  return sc;
}

bool consistent(const GapCycle& c, const LaminationSlice& s) {
  return std::all_of(c.attachment.begin(), c.attachment.end(),
                     [&](const Chord& e) { return s.contains(e); });
}

}  // namespace

MembershipReport is_cubioid_member(const CertifiedSlice& cs, int bound) {
  auto sc = scan(cs, bound);
  if (sc.early) return *sc.early;
  for (const auto& cls : sc.classes) {
    bool found = false;
    for (const auto& [desc, cyc] : sc.cycles) {
      if (cyc.period != cls.period || !consistent(cyc, cs.slice)) continue;
      for (const auto& e : cyc.attachment)
        if (std::binary_search(cls.leaves.begin(), cls.leaves.end(), e)) found = true;
      if (found) break;
    }
    if (!found)
      return {Verdict::NonMember, "NoAttachedGap: class " + FiniteGap(cls.vertices).str() +
                                      " of period " + std::to_string(cls.period) +
                                      " has no attached Fatou cycle of that period"};
  }
  return {Verdict::Member, std::to_string(sc.classes.size()) + " periodic classes checked"};
}

MembershipReport corollary_check(const CertifiedSlice& cs, int bound) {
  auto sc = scan(cs, bound);
  if (sc.early) return *sc.early;
  size_t n = 0;
  for (const auto& cls : sc.classes)
    for (const auto& l : cls.leaves) {
      ++n;
      bool found = false;
      for (const auto& [desc, cyc] : sc.cycles) {
        if (cyc.period != cls.period) continue;
        if (std::find(cyc.attachment.begin(), cyc.attachment.end(), l) != cyc.attachment.end()) {
          found = true;
          break;
        }
      }
      if (!found)
        return {Verdict::NonMember, "NoAttachedGap: leaf " + l.str() + " of period " +
                                        std::to_string(cls.period) +
                                        " has no attached Fatou gap of that period"};
    }
  return {Verdict::Member, std::to_string(n) + " periodic leaves checked"};
}

namespace {

struct Candidate {
  QuadGap gap;
  std::string source;
};

std::vector<Candidate> witness_candidates(const CertifiedSlice& cs) {
  std::vector<Candidate> out;
  auto push = [&](const QuadGap& u, const std::string& src) {
    for (const auto& c : out)
      if (c.gap == u) return;
    out.push_back({u, src});
  };
  for (const auto& m : cs.metadata)
    if (m.kind == GapDescriptor::Kind::QuadGap) push(*m.quad, "metadata");
  const auto& s = cs.slice;
  Chord diameter(Angle(0, 1), Angle(1, 2));
  for (const auto& cls : periodic_classes(s))
    for (const auto& l : cls.leaves) {
      bool ok = false;
      try {
        ok = is_periodic_type_major(l);
      } catch (const Error&) {
      }
      if (!ok) continue;
      if (l == diameter) {
        push(QuadGap::Fa(), "periodic leaf");
        push(QuadGap::Fb(), "periodic leaf");
      } else {
        push(QuadGap::from_major(l), "periodic leaf");
      }
    }
  for (const auto& l : s.leaves) {
    if (!sigma(3, l.chord).degenerate()) continue;
    auto cc = CriticalChord::from(l.chord);
    if (classify_critical_chord(cc).kind == CriticalKind::RegularCritical)
      push(QuadGap::regular(cc), "critical leaf");
  }
  // regular critical chords through non-periodic base points of critical gaps
  std::set<Chord> chords;
  for (const auto& m : cs.metadata) {
    auto cyc = realize(m);
    if (!cyc || !cyc->fatou || !cyc->fatou->critical(0)) continue;
    std::set<Angle> verts;
    for (const auto& e : cyc->attachment) {
      verts.insert(e.lo());
      verts.insert(e.hi());
    }
    for (const auto& v : verts)
      for (int mm = 1; mm <= 4; ++mm)
        for (const auto& x : preimages(3, v, mm)) {
          if (!cyc->fatou->in_basis(x, 0) || is_periodic(3, x)) continue;
          for (const auto& y : {x + mpq_class(1, 3), x - mpq_class(1, 3)}) {
            if (!cyc->fatou->in_basis(y, 0) || is_periodic(3, y)) continue;
            Chord c(x, y);
            auto cc = CriticalChord::from(c);
            if (classify_critical_chord(cc).kind == CriticalKind::RegularCritical)
              chords.insert(c);
          }
        }
  }
  for (const auto& c : chords) push(QuadGap::regular(CriticalChord::from(c)), "critical gap");
  return out;
}

std::optional<Witness> try_candidate(const CertifiedSlice& cs, const Candidate& cand) {
  const auto& s = cs.slice;
  Witness w;
  w.gap = cand.gap;
  w.source = cand.source;
  try {
    w.projected = project_lamination(cand.gap, s);
  } catch (const Error& e) {
    if (e.code() == "NotCoexisting") return std::nullopt;
    throw;
  }
  bool edges_are_leaves = true;
  for (const auto& e : gap_edges(cand.gap, std::min(s.depth, 3)))
    if (!s.contains(e.chord)) {
      edges_are_leaves = false;
      break;
    }
  if (edges_are_leaves) {
    w.theorem_case = 2;
  } else {
    if (cand.gap.is_periodic()) return std::nullopt;
    w.theorem_case = 1;
  }
  auto car = car_membership(w.projected);
  if (car.verdict != Verdict::Member) return std::nullopt;
  return w;
}

}  // namespace

Witness main_theorem_witness(const CertifiedSlice& cs) {
  auto cands = witness_candidates(cs);
  for (const auto& c : cands)
    if (auto w = try_candidate(cs, c)) return *w;
  throw Error("NoWitnessFound", "tried " + std::to_string(cands.size()) +
                                    " candidate gaps, none coexists with a cardioid projection");
}

std::vector<Witness> all_witnesses(const CertifiedSlice& cs) {
  std::vector<Witness> out;
  for (const auto& c : witness_candidates(cs))
    if (auto w = try_candidate(cs, c)) out.push_back(std::move(*w));
  return out;
}

}  // namespace lamkit
