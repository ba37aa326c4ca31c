#include <doctest.h>

#include "lamkit/quad_gaps.hpp"

#include <set>

using namespace lamkit;

namespace {

Angle A(const char* s) { return Angle::parse(s); }

}  // namespace

TEST_CASE("critical chords") {
  auto c = CriticalChord::parse("1/3-2/3");
  CHECK(pi_membership(c, Angle()));
  CHECK_FALSE(pi_membership(c, A("1/2")));
  CHECK(pi_membership(c, A("1/9")));
  CHECK_THROWS_AS(CriticalChord::parse("1/3-1/2"), Error);
  CHECK(classify_critical_chord(c).kind == CriticalKind::RegularCritical);
  CHECK(classify_critical_chord(CriticalChord::parse("1/6-1/2")).kind == CriticalKind::Caterpillar);
  auto p = classify_critical_chord(CriticalChord::parse("1/12-5/12"));
  CHECK(p.kind == CriticalKind::PeriodicType);
  CHECK(p.period == 1);
}

TEST_CASE("building quadratic gaps") {
  auto u = build_quad_gap(CriticalChord::parse("1/12-5/12"));
  CHECK(u.major() == Chord::parse("0-1/2"));
  CHECK((u.type == GapType::Fa || u.type == GapType::Fb));
  for (const auto& g : periodic_type_gaps(2)) CHECK(g.major_hole().length() == mpq_class(3, 8));
  auto r = build_quad_gap(CriticalChord::parse("1/3-2/3"));
  CHECK(r.type == GapType::RegularCritical);
  CHECK(r.sibling_major() == r.major());
}

TEST_CASE("gap edges") {
  auto u = build_quad_gap(CriticalChord::parse("1/3-2/3"));
  std::set<Chord> e1;
  for (const auto& e : gap_edges(u, 1)) e1.insert(e.chord);
  CHECK(e1 == std::set<Chord>{Chord::parse("1/3-2/3"), Chord::parse("1/9-2/9"), Chord::parse("7/9-8/9")});
  auto c = CriticalChord::parse("1/3-2/3");
  for (const auto& e : gap_edges(QuadGap::Fa(), 4)) {
    for (const Angle& x : {e.chord.lo(), e.chord.hi()}) {
      Angle y = x;
      for (int i = 0; i < 12; ++i, y = sigma(3, y)) CHECK(!(A("1/2") < y));
    }
  }
}

TEST_CASE("property: regular critical layers against exhaustive enumeration") {
  // layer n: 2^n edges of hole length 3^-(n+1); oracle takes every chord
  // between sigma^n preimages of the major endpoints with that length and
  // both endpoints in the base
  auto c = CriticalChord::parse("1/3-2/3");
  auto u = QuadGap::regular(c);
  auto edges = gap_edges(u, 5);
  for (int n = 0; n <= 5; ++n) {
    std::set<Chord> got;
    for (const auto& e : edges)
      if (e.depth == n) {
        got.insert(e.chord);
        CHECK(e.hole.length() == mpq_class(1, ipow(3, n + 1)));
      }
    CHECK(got.size() == (1u << n));
    std::set<Chord> oracle;
    mpq_class len(1, ipow(3, n + 1));
    for (const auto& x : preimages(3, c.chord.lo(), n))
      for (const auto& y : preimages(3, c.chord.hi(), n)) {
        Chord ch(x, y);
        mpq_class l = ch.hi().value() - ch.lo().value();
        if (l != len && 1 - l != len) continue;
        if (pi_membership(c, x) && pi_membership(c, y)) oracle.insert(ch);
      }
    CHECK(got == oracle);
  }
}

TEST_CASE("vassal") {
  auto vb = vassal(QuadGap::Fb(), 6);
  auto fa = gap_edges(QuadGap::Fa(), 6);
  REQUIRE(vb.edges.size() == fa.size());
  for (size_t i = 0; i < fa.size(); ++i) CHECK(vb.edges[i].chord == fa[i].chord);
  CHECK(Chord(vb.b2, vb.a2) == Chord::parse("1/6-1/3"));
  auto u = QuadGap::from_major(Chord::parse("7/8-1/4"));
  auto v = vassal(u, 4);
  std::set<Chord> lower;
  for (const auto& e : v.edges)
    if (e.depth < 4) lower.insert(e.chord);
  for (const auto& e : v.edges)
    if (e.depth > 0) CHECK(lower.count(sigma_n(3, e.chord, v.period)) == 1);
}

TEST_CASE("caterpillar") {
  // side b of the diameter, b = 1/2: inverse branch x -> x/3 from 1/6
  auto g = caterpillar_edges(QuadGap::Fb(), Side::B, 3);
  CHECK(g.head == Chord::parse("0-1/2"));
  CHECK(g.critical_edge == Chord::parse("1/6-1/2"));
  REQUIRE(g.edges.size() >= 3);
  CHECK(g.edges[0] == g.critical_edge);
  CHECK(g.edges[1] == Chord::parse("1/18-1/6"));
  CHECK(g.edges[2] == Chord::parse("1/54-1/18"));
}

TEST_CASE("wings and periodic-type majors") {
  auto w = wings(QuadGap::Fa());
  CHECK((w.right.length() == mpq_class(1, 6) || w.left.length() == mpq_class(1, 6)));
  auto r = wings(QuadGap::regular(CriticalChord::parse("1/3-2/3")));
  CHECK(r.right.degenerate());
  auto u = wings(QuadGap::from_major(Chord::parse("7/8-1/4")));
  CHECK(u.right == Arc::closed(A("7/8"), A("11/12")));
  CHECK(is_periodic_type_major(Chord::parse("7/8-1/4")));
  CHECK_FALSE(is_periodic_type_major(Chord::parse("1/8-3/8")));
  CHECK(is_periodic_type_major(Chord::parse("0-1/2")));
  CHECK_THROWS_AS(is_periodic_type_major(Chord::parse("1/3-2/3")), Error);
  CHECK_THROWS_AS(QuadGap::from_major(Chord::parse("0-1/2")), Error);
}
