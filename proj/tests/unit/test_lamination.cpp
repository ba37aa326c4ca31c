#include <doctest.h>

#include "lamkit/lamination.hpp"
#include "lamkit/rotational.hpp"

using namespace lamkit;

namespace {

Angle A(const char* s) { return Angle::parse(s); }

LaminationSlice slice_of(std::vector<const char*> chords, int depth = 0) {
  LaminationSlice s;
  s.depth = depth;
  for (auto c : chords) s.leaves.push_back({Chord::parse(c), 0, LeafOrigin::Generator});
  s.normalize();
  return s;
}

FiniteGap ex41() {
  return FiniteGap(parse_angle_list("7/26,4/13,11/26,10/13,21/26,12/13"));
}

}  // namespace

TEST_CASE("holes of a finite gap") {
  FiniteGap g(parse_angle_list("1/26,3/26,9/26"));
  auto h = holes(g);
  REQUIRE(h.size() == 3);
  CHECK(h[0] == Arc::open(A("1/26"), A("3/26")));
  CHECK(h[1] == Arc::open(A("3/26"), A("9/26")));
  CHECK(h[2] == Arc::open(A("9/26"), A("1/26")));
  auto d = holes(FiniteGap(parse_angle_list("0,1/2")));
  REQUIRE(d.size() == 2);
  CHECK(d[0].length() == mpq_class(1, 2));
  CHECK(d[1].length() == mpq_class(1, 2));
}

TEST_CASE("majors") {
  auto m = majors(ex41(), 3);
  REQUIRE(m.size() == 2);
  CHECK(((m[0].edge == Chord::parse("7/26-12/13") && m[1].edge == Chord::parse("11/26-10/13")) ||
         (m[1].edge == Chord::parse("7/26-12/13") && m[0].edge == Chord::parse("11/26-10/13"))));
  auto a = majors(FiniteGap(parse_angle_list("1/26,3/26,9/26")), 3);
  REQUIRE(a.size() == 1);
  CHECK(a[0].edge == Chord::parse("1/26-9/26"));
  CHECK(a[0].hole.length() > mpq_class(2, 3));
  CHECK(majors(FiniteGap(parse_angle_list("0,1/2")), 3).size() == 2);
}

TEST_CASE("rotation numbers") {
  CHECK(rotation_number(FiniteGap(parse_angle_list("7/26,11/26,21/26")), 3) == mpq_class(2, 3));
  CHECK(rotation_number(FiniteGap(parse_angle_list("0,1/2")), 3) == 0);
  CHECK(rotation_number(FiniteGap(parse_angle_list("1/7,2/7,4/7")), 2) == mpq_class(1, 3));
  CHECK_THROWS_AS(rotation_number(FiniteGap(parse_angle_list("1/7,2/7")), 2), Error);
}

TEST_CASE("invariant leaves of sigma_3") {
  auto v = invariant_leaves(3);
  std::vector<Chord> want = {Chord::parse("0-1/2"), Chord::parse("1/8-3/8"),
                             Chord::parse("1/4-3/4"), Chord::parse("5/8-7/8")};
  std::sort(v.begin(), v.end());
  CHECK(v == want);
}

TEST_CASE("checkers on small fixtures") {
  CHECK(check_unlinked(slice_of({"0-1/2"})).ok);
  CHECK(check_unlinked(slice_of({"0-1/2", "1/4-3/4"})).violations.size() == 1);
  CHECK_FALSE(check_sibling_invariant(slice_of({"1/9-2/9"}, 1)).ok);
  CHECK(check_sibling_invariant(LaminationSlice{}).ok);
  CHECK(check_forward_invariant(slice_of({"0-1/2"})).ok);
  CHECK_FALSE(check_forward_invariant(slice_of({"1/9-2/9"})).ok);
  CHECK(check_period_matching(slice_of({"1/8-3/8"})).ok);
  CHECK_FALSE(check_period_matching(slice_of({"1/8-1/2"})).ok);
}

TEST_CASE("pullback component") {
  // (1/3, 2/3) pulls back to three arcs of length 1/9
  auto c = pullback_component(3, Arc::open(A("1/3"), A("2/3")), A("1/6"));
  CHECK(c == Arc::open(A("1/9"), A("2/9")));
  // circle minus 0 pulls back to the arc between consecutive preimages of 0
  auto w = pullback_component(3, Arc::open(Angle(), Angle()), A("1/2"));
  CHECK(w == Arc::open(A("1/3"), A("2/3")));
  auto e = pullback_component(3, Arc::open(Angle(), Angle()), A("1/3"));
  CHECK(e == Arc::open(Angle(), A("1/3")));
}

TEST_CASE("property: pullback component maps onto the arc") {
  std::vector<Arc> arcs = {Arc::open(A("1/5"), A("4/7")), Arc::open(A("5/6"), A("1/10")),
                           Arc::open(A("2/9"), A("2/9"))};
  for (const auto& J : arcs)
    for (int k = 0; k < 210; ++k) {
      Angle x(k, 210);
      if (!J.contains(sigma(3, x))) continue;
      Arc c = pullback_component(3, J, x);
      CHECK(c.contains(x));
      CHECK(c.length() * 3 == J.length());
      CHECK(sigma(3, c.start) == J.start);
      CHECK(sigma(3, c.end) == J.end);
    }
}
