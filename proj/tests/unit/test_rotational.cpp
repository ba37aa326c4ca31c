#include <doctest.h>

#include "lamkit/canonical.hpp"
#include "lamkit/rotational.hpp"

#include <set>

using namespace lamkit;

namespace {

std::vector<Angle> L(const char* s) { return parse_angle_list(s); }

}  // namespace

TEST_CASE("rotational orbits") {
  auto o3 = rotational_orbits(3, 3);
  bool found = false;
  for (const auto& o : o3)
    if (o.orbit == L("7/26,11/26,21/26")) {
      found = true;
      CHECK(o.rotation == mpq_class(2, 3));
    }
  CHECK(found);
  auto o2 = rotational_orbits(2, 3);
  int one_third = 0;
  for (const auto& o : o2)
    if (o.rotation == mpq_class(1, 3)) {
      ++one_third;
      CHECK(o.orbit == L("1/7,2/7,4/7"));
    }
  CHECK(one_third == 1);
  CHECK(rotational_orbits(3, 1).empty());
}

TEST_CASE("worked rotational sets") {
  auto d = build_rotational_set({L("7/26,21/26,11/26"), L("4/13,10/13,12/13")});
  CHECK(d.gap.size() == 6);
  CHECK(classify_rotational(d) == RotType::D);
  auto b = rotational_set_from_vertices(L("7/26,11/26,21/26"));
  CHECK(classify_rotational(b) == RotType::B);
  auto a = rotational_set_from_vertices(L("1/26,3/26,9/26"));
  CHECK(classify_rotational(a) == RotType::A);
  auto m = majors(a.gap, 3);
  REQUIRE(m.size() == 1);
  CHECK(m[0].hole.contains(Angle()));
  CHECK(m[0].hole.contains(Angle(1, 2)));
  CHECK_THROWS_AS(rotational_set_from_vertices(L("1/7,2/7,4/7")), Error);
}

TEST_CASE("attached gaps") {
  auto a = rotational_set_from_vertices(L("1/26,3/26,9/26"));
  auto att = attached_fatou_gaps(a, 2);
  REQUIRE(att.size() == 3);
  int critical = 0;
  for (const auto& f : att)
    if (f.critical) {
      ++critical;
      CHECK(f.edge == Chord::parse("1/26-9/26"));
      CHECK(f.period == 3);
    }
  CHECK(critical == 1);

  // the critical gap at a major of a type D set is the vassal of the
  // periodic-type gap with that major
  auto d = build_rotational_set({L("7/26,21/26,11/26"), L("4/13,10/13,12/13")});
  auto m1 = Chord::parse("7/26-12/13");
  auto u = QuadGap::from_major(m1);
  auto v = vassal(u, 5);
  bool matched = false;
  for (const auto& f : attached_fatou_gaps(d, 5))
    if (f.edge == m1) {
      matched = true;
      REQUIRE(f.edges.size() == v.edges.size());
      for (size_t i = 0; i < f.edges.size(); ++i) CHECK(f.edges[i].chord == v.edges[i].chord);
    }
  CHECK(matched);
}

TEST_CASE("property: majors of generated gaps") {
  for (int q = 2; q <= 5; ++q)
    for (const auto& g : rotational_sets(3, q)) {
      CHECK(g.gap.is_invariant(3));
      auto m = majors(g.gap, 3);
      std::set<Chord> major_edges;
      for (const auto& x : m) major_edges.insert(x.edge);
      for (const auto& e : g.gap.edges()) {
        Chord c = e;
        for (int i = 0; i < q && !major_edges.count(c); ++i) c = sigma(3, c);
        CHECK_MESSAGE(major_edges.count(c) == 1, std::string(g.str() + " edge " + e.str()));
      }
      for (size_t i = 0; i < g.gap.size(); ++i) {
        Arc h = g.gap.hole(i).closure();
        bool is_major = std::any_of(m.begin(), m.end(), [&](const Major& x) { return x.index == i; });
        CHECK_MESSAGE(is_major == (h.contains(Angle()) || h.contains(Angle(1, 2))), g.str());
      }
    }
}

TEST_CASE("quadratic rotational sets") {
  CHECK(quadratic_rotational_set(mpq_class(1, 3)).gap.vertices() == L("1/7,2/7,4/7"));
  CHECK(quadratic_rotational_set(mpq_class(1, 2)).gap.vertices() == L("1/3,2/3"));
}
