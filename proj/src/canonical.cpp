#include "lamkit/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lamkit {

namespace {

// Endpoint index of committed leaves for the linking test.
class EndpointIndex {
 public:
  void add(const Chord& c) {
    ends_.emplace(c.lo(), c.hi());
    ends_.emplace(c.hi(), c.lo());
  }

  bool links(const Chord& c) const {
    const Angle& lo = c.lo();
    const Angle& hi = c.hi();
    if (!(lo < Angle(1, 2)) || !(lo.plus(1, 2) < hi)) {  // short side is [lo, hi]
      auto it = ends_.upper_bound(lo), end = ends_.lower_bound(hi);
      for (; it != end; ++it)
        if (it->second < lo || it->second > hi) return true;
      return false;
    }
    auto outside = [&](const Angle& q) { return lo < q && q < hi; };
    for (auto it = ends_.upper_bound(hi); it != ends_.end(); ++it)
      if (outside(it->second)) return true;
    for (auto it = ends_.begin(), end = ends_.lower_bound(lo); it != end; ++it)
      if (outside(it->second)) return true;
    return false;
  }

 private:
  std::multimap<Angle, Angle> ends_;
};

}  // namespace

LaminationSlice pullback_engine(int d, const std::vector<Chord>& seeds,
                                const std::vector<RegionPtr>& regions, int depth) {
  LaminationSlice s;
  s.degree = d;
  s.depth = depth;
  std::set<Chord> have;
  for (const auto& c : seeds)
    if (!c.degenerate()) have.insert(c);
  for (const auto& c : have) {
    Chord img = sigma(d, c);
    if (!img.degenerate() && !have.count(img))
      throw Error("SeedNotForwardInvariant", "image of seed " + c.str() + " is not a seed");
  }
  EndpointIndex index;
  std::vector<Chord> frontier(have.begin(), have.end());
  for (const auto& c : frontier) {
    index.add(c);
    s.leaves.push_back({c, 0, LeafOrigin::Generator});
  }
  s.generators = frontier;

  for (int gen = 1; gen <= depth && !frontier.empty(); ++gen) {
    std::set<Chord> cand;
    for (const auto& l : frontier) {
      auto pa = preimages(d, l.lo()), pb = preimages(d, l.hi());
      for (const auto& x : pa)
        for (const auto& y : pb) {
          Chord c(x, y);
          if (!c.degenerate() && !have.count(c)) cand.insert(c);
        }
    }
    std::vector<Chord> next;
    for (const auto& c : cand) {
      bool ok = std::all_of(regions.begin(), regions.end(),
                            [&](const RegionPtr& r) { return r->admits(c); });
      if (!ok || index.links(c)) continue;
      index.add(c);
      have.insert(c);
      next.push_back(c);
      s.leaves.push_back({c, gen, LeafOrigin::Pullback});
    }
    frontier = std::move(next);
  }
  s.normalize();
  return s;
}

std::vector<RegionPtr> quadgap_regions(const QuadGap& u) {
  std::vector<RegionPtr> out;
  out.push_back(std::make_shared<FatouRegion>(std::make_shared<FatouCycle>(u.cycle()), 0,
                                              u.label()));
  if (u.is_periodic())
    out.push_back(std::make_shared<FatouRegion>(std::make_shared<FatouCycle>(vassal_cycle(u)),
                                                0, "V(" + u.label() + ")"));
  return out;
}

std::vector<Chord> quadgap_seeds(const QuadGap& u) {
  std::vector<Chord> out{u.major()};
  if (u.is_periodic())
    for (Chord c = sigma(3, u.major()); c != u.major(); c = sigma(3, c)) out.push_back(c);
  return out;
}

LaminationSlice canonical_lam_quadgap(const QuadGap& u, int depth) {
  return pullback_engine(3, quadgap_seeds(u), quadgap_regions(u), depth);
}

namespace {

std::vector<RegionPtr> rotational_regions_impl(const RotationalSet& g, SharedVertexPolicy policy) {
  std::vector<RegionPtr> out;
  out.push_back(std::make_shared<FiniteGapRegion>(g.gap, policy));
  for (auto& f : attached_fatou_gaps(g, 0)) {
    if (!f.critical) continue;
    out.push_back(std::make_shared<FatouRegion>(std::make_shared<FatouCycle>(f.cycle), 0,
                                                "attached " + f.edge.str()));
  }
  return out;
}

}  // namespace

std::vector<RegionPtr> rotational_regions(const RotationalSet& g, SharedVertexPolicy policy) {
  return rotational_regions_impl(g, policy);
}

LaminationSlice canonical_lam_rotational(const RotationalSet& g, int depth,
                                         SharedVertexPolicy policy) {
  auto edges = g.gap.edges();
  return pullback_engine(g.degree, edges, rotational_regions_impl(g, policy), depth);
}

RotationalSet quadratic_rotational_set(const mpq_class& pq) {
  mpq_class r = pq;
  r.canonicalize();
  if (sgn(r) <= 0 || r >= 1) throw Error("NotRotational", "rotation number must be in (0,1)");
  int q = static_cast<int>(r.get_den().get_si());
  if (q > 30) throw Error("PeriodLimit", "rotation denominator too large");
  for (const auto& o : rotational_orbits(2, q))
    if (o.rotation == r) return build_rotational_set({o.orbit}, 2);
  throw Error("NotRotational", "no sigma_2 orbit with rotation " + r.get_str());
}

std::vector<RegionPtr> quadratic_regions(const mpq_class& pq) {
  if (sgn(pq) == 0) return {std::make_shared<WholeDiskRegion>()};
  return rotational_regions_impl(quadratic_rotational_set(pq), SharedVertexPolicy::EdgesOnly);
}

LaminationSlice canonical_quadratic(const mpq_class& pq, int depth) {
  if (sgn(pq) == 0) {
    LaminationSlice s;
    s.degree = 2;
    s.depth = depth;
    return s;
  }
  auto g = quadratic_rotational_set(pq);
  return pullback_engine(2, g.gap.edges(), quadratic_regions(pq), depth);
}

}  // namespace lamkit
