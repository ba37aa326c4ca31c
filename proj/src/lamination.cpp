#include "lamkit/lamination.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lamkit {

void LaminationSlice::normalize() {
  std::vector<Leaf> kept;
  kept.reserve(leaves.size());
  for (auto& l : leaves)
    if (!l.chord.degenerate()) kept.push_back(std::move(l));
  std::sort(kept.begin(), kept.end(), [](const Leaf& a, const Leaf& b) {
    if (a.chord != b.chord) return a.chord < b.chord;
    return a.depth < b.depth;
  });
  kept.erase(std::unique(kept.begin(), kept.end(),
                         [](const Leaf& a, const Leaf& b) { return a.chord == b.chord; }),
             kept.end());
  leaves = std::move(kept);
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
}

bool LaminationSlice::contains(const Chord& c) const {
  auto it = std::lower_bound(leaves.begin(), leaves.end(), c,
                             [](const Leaf& l, const Chord& x) { return l.chord < x; });
  return it != leaves.end() && it->chord == c;
}

std::vector<Chord> LaminationSlice::chords() const {
  std::vector<Chord> out;
  out.reserve(leaves.size());
  for (const auto& l : leaves) out.push_back(l.chord);
  return out;
}

FiniteGap::FiniteGap(std::vector<Angle> vertices) : v_(std::move(vertices)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  if (v_.size() < 2) throw Error("TooFewVertices", "a gap needs at least two distinct vertices");
}

Arc FiniteGap::hole(size_t i) const { return Arc::open(v_[i], v_[(i + 1) % v_.size()]); }

std::vector<Chord> FiniteGap::edges() const {
  std::vector<Chord> out;
  for (size_t i = 0; i < v_.size(); ++i) out.push_back(edge(i));
  return out;
}

std::optional<size_t> FiniteGap::hole_index_of(const Angle& x) const {
  auto it = std::lower_bound(v_.begin(), v_.end(), x);
  if (it != v_.end() && *it == x) return std::nullopt;
  if (it == v_.begin() || it == v_.end()) return v_.size() - 1;
  return static_cast<size_t>(it - v_.begin()) - 1;
}

bool FiniteGap::has_vertex(const Angle& x) const {
  return std::binary_search(v_.begin(), v_.end(), x);
}

bool FiniteGap::is_edge(const Chord& c) const {
  for (size_t i = 0; i < v_.size(); ++i)
    if (edge(i) == c) return true;
  return false;
}

bool FiniteGap::is_invariant(int d) const {
  std::set<Angle> image;
  for (const auto& v : v_) {
    Angle w = sigma(d, v);
    if (!has_vertex(w)) return false;
    image.insert(w);
  }
  if (image.size() != v_.size()) return false;
  for (size_t i = 0; i < v_.size(); ++i) {
    Angle a = sigma(d, v_[i]), b = sigma(d, v_[(i + 1) % v_.size()]);
    if (a == b) continue;
    auto k = hole_index_of(arc_midpoint(a, b));
    if (!k || hole(*k) != Arc::open(a, b)) return false;
  }
  return true;
}

std::string FiniteGap::str() const {
  std::string s = "{";
  for (size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + v_[i].str();
  return s + "}";
}

std::vector<Arc> holes(const FiniteGap& g) {
  std::vector<Arc> out;
  for (size_t i = 0; i < g.size(); ++i) out.push_back(g.hole(i));
  return out;
}

std::vector<Major> majors(const FiniteGap& g, int d) {
  std::vector<Major> out;
  mpq_class bound(1, d);
  for (size_t i = 0; i < g.size(); ++i) {
    Arc h = g.hole(i);
    if (h.length() >= bound) out.push_back({g.edge(i), h, i});
  }
  return out;
}

mpq_class rotation_number(const FiniteGap& g, int d) {
  const auto& v = g.vertices();
  size_t m = v.size();
  std::vector<size_t> perm(m);
  std::set<size_t> hit;
  for (size_t i = 0; i < m; ++i) {
    Angle w = sigma(d, v[i]);
    auto it = std::lower_bound(v.begin(), v.end(), w);
    if (it == v.end() || *it != w)
      throw Error("NotInvariant", "image of " + v[i].str() + " is not a vertex");
    perm[i] = static_cast<size_t>(it - v.begin());
    hit.insert(perm[i]);
  }
  if (hit.size() != m) throw Error("NotInvariant", "sigma is not a bijection of the vertices");
  size_t shift = (perm[0] + m) % m;
  for (size_t i = 0; i < m; ++i)
    if (perm[i] != (i + shift) % m)
      throw Error("OrderNotPreserved", "vertex permutation is not a cyclic rotation");
  mpq_class r(static_cast<long>(shift), static_cast<long>(m));
  r.canonicalize();
  return r;
}

std::vector<Chord> invariant_leaves(int d) {
  long q = d * d - 1;
  std::vector<Chord> out;
  for (long i = 0; i < q; ++i)
    for (long j = i + 1; j < q; ++j) {
      Angle a(i, q), b(j, q);
      Chord c(a, b);
      if (sigma(d, c) == c) out.push_back(c);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::string> crossing_pairs(const std::vector<Leaf>& leaves) {
  std::vector<std::string> out;
  for (size_t i = 0; i < leaves.size(); ++i)
    for (size_t j = i + 1; j < leaves.size(); ++j)
      if (chords_cross(leaves[i].chord, leaves[j].chord))
        out.push_back(leaves[i].chord.str() + " x " + leaves[j].chord.str());
  return out;
}

// Non-crossing chords nest like parentheses once endpoint ties are ordered:
// closings before openings, inner chords closing first.
bool nests(const std::vector<Leaf>& leaves) {
  struct Event {
    const Angle* at;
    bool opening;
    const Angle* other;
    size_t id;
  };
  std::vector<Event> ev;
  ev.reserve(2 * leaves.size());
  for (size_t i = 0; i < leaves.size(); ++i) {
    const auto& c = leaves[i].chord;
    ev.push_back({&c.lo(), true, &c.hi(), i});
    ev.push_back({&c.hi(), false, &c.lo(), i});
  }
  std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
    if (*a.at != *b.at) return *a.at < *b.at;
    if (a.opening != b.opening) return !a.opening;
    if (!a.opening) return *a.other > *b.other;
    return *a.other > *b.other;
  });
  std::vector<size_t> stack;
  for (const auto& e : ev) {
    if (e.opening) {
      stack.push_back(e.id);
    } else {
      if (stack.empty() || stack.back() != e.id) return false;
      stack.pop_back();
    }
  }
  return true;
}

}  // namespace

Report check_unlinked(const LaminationSlice& s) {
  Report r;
  r.checked = s.leaves.size();
  if (!nests(s.leaves)) {
    r.violations = crossing_pairs(s.leaves);
    r.ok = r.violations.empty();
  }
  return r;
}

Report check_forward_invariant(const LaminationSlice& s) {
  Report r;
  for (const auto& l : s.leaves) {
    ++r.checked;
    Chord img = sigma(s.degree, l.chord);
    if (!img.degenerate() && !s.contains(img)) {
      r.ok = false;
      r.violations.push_back(l.chord.str() + " -> " + img.str() + " missing");
    }
  }
  return r;
}

namespace {

bool disjoint(const Chord& a, const Chord& b) {
  return !a.shares_endpoint(b) && !chords_cross(a, b);
}

bool pick_disjoint(const std::vector<Chord>& pool, std::vector<Chord>& chosen, size_t from,
                   size_t need) {
  if (chosen.size() == need) return true;
  for (size_t i = from; i < pool.size(); ++i) {
    bool ok = std::all_of(chosen.begin(), chosen.end(),
                          [&](const Chord& c) { return disjoint(c, pool[i]); });
    if (!ok) continue;
    chosen.push_back(pool[i]);
    if (pick_disjoint(pool, chosen, i + 1, need)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Report check_sibling_invariant(const LaminationSlice& s) {
  Report r;
  std::map<Chord, std::vector<Chord>> by_image;
  for (const auto& l : s.leaves) by_image[sigma(s.degree, l.chord)].push_back(l.chord);
  for (const auto& l : s.leaves) {
    if (l.depth >= s.depth) {
      ++r.frontier_exempt;
      continue;
    }
    Chord img = sigma(s.degree, l.chord);
    if (img.degenerate()) continue;
    ++r.checked;
    const auto& group = by_image[img];
    std::vector<Chord> pool;
    for (const auto& c : group)
      if (c != l.chord) pool.push_back(c);
    std::vector<Chord> chosen{l.chord};
    if (!pick_disjoint(pool, chosen, 0, static_cast<size_t>(s.degree))) {
      r.ok = false;
      r.violations.push_back(l.chord.str() + " has " + std::to_string(group.size()) +
                             " leaves over " + img.str() + ", need " +
                             std::to_string(s.degree) + " disjoint");
    }
  }
  return r;
}

Report check_period_matching(const LaminationSlice& s) {
  Report r;
  for (const auto& l : s.leaves) {
    auto a = orbit_shape(s.degree, l.chord.lo());
    auto b = orbit_shape(s.degree, l.chord.hi());
    if (a.first != 0 && b.first != 0) continue;
    ++r.checked;
    if (a != b) {
      r.ok = false;
      r.violations.push_back(l.chord.str() + " periods " + std::to_string(a.second) + "/" +
                             std::to_string(b.second));
    }
  }
  return r;
}

bool FiniteGapRegion::admits(const Chord& c) const {
  if (c.degenerate()) return true;
  auto hx = g_.hole_index_of(c.lo());
  auto hy = g_.hole_index_of(c.hi());
  if (hx && hy) return *hx == *hy;
  if (!hx && !hy) return g_.is_edge(c);
  if (policy_ == SharedVertexPolicy::EdgesOnly) return false;
  size_t h = hx ? *hx : *hy;
  const Angle& other = hx ? c.hi() : c.lo();
  return g_.hole(h).closure().contains(other);
}

Arc pullback_component(int d, const Arc& J, const Angle& x) {
  // nearest preimages of the endpoints on either side of x
  auto before = [&](const Angle& t, bool strict) {
    auto pre = preimages(d, t, 1);
    auto it = strict ? std::lower_bound(pre.begin(), pre.end(), x)
                     : std::upper_bound(pre.begin(), pre.end(), x);
    return it == pre.begin() ? pre.back() : *std::prev(it);
  };
  auto after = [&](const Angle& t, bool strict) {
    auto pre = preimages(d, t, 1);
    auto it = strict ? std::upper_bound(pre.begin(), pre.end(), x)
                     : std::lower_bound(pre.begin(), pre.end(), x);
    return it == pre.end() ? pre.front() : *it;
  };
  if (J.start == J.end) {  // circle minus a point
    if (sigma(d, x) == J.start)
      return Arc{before(J.start, true), x, J.include_start, J.include_end, false};
    return Arc{before(J.start, false), after(J.start, true), J.include_start, J.include_end,
               false};
  }
  return Arc{before(J.start, false), after(J.end, false), J.include_start, J.include_end, false};
}

FatouCycle::FatouCycle(int d, std::vector<Arc> supports) : d_(d), s_(std::move(supports)) {
  if (s_.empty()) throw Error("EmptyCycle", "a Fatou cycle needs at least one support");
  for (auto& a : s_) a = a.closure();
}

Arc FatouCycle::outer_hole(int j) const {
  const Arc& s = support(j);
  return Arc::open(s.end, s.start);
}

Chord FatouCycle::outer_edge(int j) const {
  const Arc& s = support(j);
  return Chord(s.start, s.end);
}

std::optional<Arc> FatouCycle::hole_of(const Angle& x, int j) const {
  std::vector<Angle> path;
  std::set<std::pair<Angle, size_t>> seen;
  Angle y = x;
  size_t i = idx(j);
  std::optional<Arc> h;
  for (;;) {
    if (!s_[i].contains(y)) {
      h = outer_hole(static_cast<int>(i));
      break;
    }
    if (!seen.emplace(y, i).second) return std::nullopt;
    path.push_back(y);
    y = sigma(d_, y);
    i = (i + 1) % s_.size();
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) h = pullback_component(d_, *h, *it);
  return h;
}

bool FatouCycle::admits(const Chord& c, int j) const {
  if (c.degenerate()) return true;
  if (auto hx = hole_of(c.lo(), j)) return hx->closure().contains(c.hi());
  if (auto hy = hole_of(c.hi(), j)) return hy->closure().contains(c.lo());
  return has_edge(c, j);
}

bool FatouCycle::has_edge(const Chord& c, int j) const {
  if (c.degenerate()) return false;
  for (auto [a, b] : {std::pair{c.lo(), c.hi()}, std::pair{c.hi(), c.lo()}}) {
    auto h = hole_of(arc_midpoint(a, b), j);
    if (h && h->start == a && h->end == b) return true;
  }
  return false;
}

bool FatouCycle::critical(int j) const { return support(j).length() >= mpq_class(1, d_); }

std::vector<FatouCycle::Edge> FatouCycle::edges(int j, int depth) const {
  size_t n = s_.size();
  std::vector<std::vector<Arc>> level(n);
  for (size_t i = 0; i < n; ++i) level[i] = {outer_hole(static_cast<int>(i))};
  std::vector<Edge> out;
  auto emit = [&](int t) {
    for (const auto& h : level[idx(j)]) out.push_back({Chord(h.start, h.end), h, t});
  };
  emit(0);
  for (int t = 1; t <= depth; ++t) {
    std::vector<std::vector<Arc>> next(n);
    for (size_t i = 0; i < n; ++i) {
      for (const auto& h : level[(i + 1) % n]) {
        auto ps = preimages(d_, h.start, 1), pe = preimages(d_, h.end, 1);
        bool wraps = !(h.start < h.end);
        for (int k = 0; k < d_; ++k) {
          Arc comp = Arc::open(ps[k], pe[wraps ? (k + 1) % d_ : k]);
          if (s_[i].contains_arc(comp.closure())) next[i].push_back(comp);
        }
      }
    }
    level = std::move(next);
    emit(t);
  }
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    if (a.chord != b.chord) return a.chord < b.chord;
    return a.depth < b.depth;
  });
  return out;
}

const std::optional<Arc>& FatouRegion::lookup(const Angle& x) const {
  const FatouCycle& fc = *cycle_;
  int n = fc.period();
  int i0 = ((member_ % n) + n) % n;
  std::lock_guard<std::mutex> lock(mu_);
  if (memo_.empty()) memo_.resize(static_cast<size_t>(n));
  if (auto it = memo_[i0].find(x); it != memo_[i0].end()) return it->second;
  std::vector<std::pair<int, Angle>> path;
  std::set<std::pair<int, Angle>> seen;
  Angle y = x;
  int i = i0;
  std::optional<Arc> h;
  bool basis = false;
  for (;;) {
    if (auto it = memo_[i].find(y); it != memo_[i].end()) {
      if (!it->second) basis = true;
      h = it->second;
      break;
    }
    if (!fc.support(i).contains(y)) {
      h = fc.outer_hole(i);
      memo_[i].emplace(y, h);
      break;
    }
    if (!seen.emplace(i, y).second) {
      basis = true;
      break;
    }
    path.emplace_back(i, y);
    y = sigma(fc.degree(), y);
    i = (i + 1) % n;
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (!basis) h = pullback_component(fc.degree(), *h, it->second);
    memo_[it->first][it->second] = basis ? std::nullopt : h;
  }
  return memo_[i0].find(x)->second;
}

std::optional<Arc> FatouRegion::hole_of(const Angle& x) const { return lookup(x); }

namespace {

bool closure_contains(const Arc& a, const Angle& x) {
  return x == a.start || x == a.end || a.contains(x);
}

}  // namespace

bool FatouRegion::admits(const Chord& c) const {
  if (c.degenerate()) return true;
  if (const auto& hx = lookup(c.lo())) return closure_contains(*hx, c.hi());
  if (const auto& hy = lookup(c.hi())) return closure_contains(*hy, c.lo());
  return cycle_->has_edge(c, member_);
}

}  // namespace lamkit
