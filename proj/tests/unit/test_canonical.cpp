#include <doctest.h>

#include "lamkit/canonical.hpp"

#include <set>

using namespace lamkit;

namespace {

void check_all(const LaminationSlice& s) {
  CHECK(check_unlinked(s).ok);
  CHECK(check_sibling_invariant(s).ok);
  CHECK(check_forward_invariant(s).ok);
  CHECK(check_period_matching(s).ok);
}

}  // namespace

TEST_CASE("engine basics") {
  auto e = pullback_engine(3, {}, {}, 4);
  CHECK(e.size() == 0);
  auto q = pullback_engine(2, {Chord::parse("1/3-2/3")},
                           {std::make_shared<FiniteGapRegion>(FiniteGap(parse_angle_list("1/3,2/3")))}, 3);
  CHECK(q.contains(Chord::parse("1/6-5/6")));
  CHECK_THROWS_AS(pullback_engine(3, {Chord::parse("1/9-2/9")}, {}, 1), Error);
}

TEST_CASE("canonical lamination of a regular critical gap") {
  auto u = build_quad_gap(CriticalChord::parse("1/3-2/3"));
  auto s = canonical_lam_quadgap(u, 2);
  CHECK(s.contains(Chord::parse("1/9-2/9")));
  CHECK(s.contains(Chord::parse("7/9-8/9")));
  for (const auto& e : gap_edges(u, 2)) CHECK(s.contains(e.chord));
  for (const auto& l : s.leaves) {
    Chord c = l.chord;
    for (int i = 0; i < 4 && !c.degenerate() && c != u.major(); ++i) c = sigma(3, c);
    CHECK(c == u.major());
  }
  check_all(s);
}

TEST_CASE("canonical lamination of Fb carries the Fa edges") {
  auto s = canonical_lam_quadgap(QuadGap::Fb(), 4);
  for (const auto& e : gap_edges(QuadGap::Fa(), 4)) CHECK(s.contains(e.chord));
  check_all(s);
}

TEST_CASE("property: canonical laminations pass every checker") {
  for (const auto& u : periodic_type_gaps(2)) check_all(canonical_lam_quadgap(u, 5));
  for (int q = 2; q <= 3; ++q)
    for (const auto& g : rotational_sets(3, q)) {
      check_all(canonical_lam_rotational(g, 5));
      check_all(canonical_lam_rotational(g, 5, SharedVertexPolicy::Closure));
    }
  for (const auto& pq : {mpq_class(1, 3), mpq_class(1, 2), mpq_class(2, 5)}) {
    auto s = canonical_quadratic(pq, 6);
    CHECK(s.degree == 2);
    check_all(s);
  }
  CHECK(canonical_quadratic(0, 5).size() == 0);
}

TEST_CASE("canonical rotational slices contain the gap edges") {
  auto g = rotational_set_from_vertices(parse_angle_list("7/26,4/13,11/26,10/13,21/26,12/13"));
  auto s = canonical_lam_rotational(g, 4);
  for (const auto& e : g.gap.edges()) CHECK(s.contains(e));
  auto closure = canonical_lam_rotational(g, 4, SharedVertexPolicy::Closure);
  CHECK(closure.size() >= s.size());
}
