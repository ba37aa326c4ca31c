#include <doctest.h>

#include "lamkit/cubioid.hpp"

#include <random>

using namespace lamkit;

namespace {

Angle A(const char* s) { return Angle::parse(s); }

LaminationSlice quad_fixture(std::vector<const char*> chords, int depth) {
  LaminationSlice s;
  s.degree = 2;
  s.depth = depth;
  for (auto c : chords) s.leaves.push_back({Chord::parse(c), 0, LeafOrigin::Generator});
  s.normalize();
  return s;
}

}  // namespace

TEST_CASE("psi coding of Fa") {
  auto psi = PsiCoding::of_gap(QuadGap::Fa());
  CHECK(psi.project(Angle()).is_zero());
  CHECK(psi.project(A("1/2")).is_zero());
  Angle t = psi.project(A("3/8"));
  CHECK((t == A("1/3") || t == A("2/3")));
  CHECK(psi.lift(Angle()).is_zero());
  CHECK(psi.lift(t) == A("3/8"));
  CHECK_THROWS_AS(psi.project(A("3/4")), Error);
  for (long k = 1; k < 7; ++k) {
    Angle y = psi.lift(Angle(k, 7));
    CHECK(orbit_shape(3, y).first == 0);
    Angle z = y;
    for (int i = 0; i < 6; ++i, z = sigma(3, z)) CHECK(!(A("1/2") < z));
  }
}

TEST_CASE("property: psi is monotone, collapses edges and round-trips") {
  for (const auto& coding : {PsiCoding::of_gap(QuadGap::Fa()),
                             PsiCoding::of_gap(QuadGap::from_major(Chord::parse("7/8-1/4"))),
                             PsiCoding::of_vassal(QuadGap::from_major(Chord::parse("7/8-1/4"))),
                             PsiCoding::of_gap(QuadGap::regular(CriticalChord::parse("1/3-2/3")))}) {
    for (const auto& e : coding.cycle().edges(0, 4))
      CHECK(coding.project(e.chord.lo()) == coding.project(e.chord.hi()));
    std::vector<Angle> ts;
    for (long k = 0; k < 64; ++k) ts.push_back(Angle(k, 64));
    for (long k = 0; k < 31; ++k) ts.push_back(Angle(k, 31));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<Angle> lifted;
    for (const auto& t : ts) {
      Angle x = coding.lift(t);
      CHECK(coding.in_base(x));
      CHECK(coding.project(x) == t);
      CHECK(coding.project(coding.return_map(x)) == sigma(2, t));
      lifted.push_back(x);
    }
    // cyclic order from the anchor is preserved
    auto cut = [&](const Angle& x) { return ccw_dist(coding.anchor_end(), x); };
    for (size_t i = 1; i < lifted.size(); ++i) CHECK(cut(lifted[i - 1]) < cut(lifted[i]));
  }
}

TEST_CASE("cardioid membership") {
  CHECK(car_membership(canonical_quadratic(mpq_class(1, 3), 6)));
  CHECK(car_membership(canonical_quadratic(0, 6)));
  auto both = quad_fixture({"1/7-2/7", "2/7-4/7", "1/7-4/7", "3/7-5/7", "5/7-6/7", "3/7-6/7"}, 0);
  CHECK_FALSE(car_membership(both));
}

TEST_CASE("cubioid predicates") {
  auto u = build_quad_gap(CriticalChord::parse("1/3-2/3"));
  CHECK(is_cubioid_member(certify_quadgap(u, 5)));
  auto t = tune(QuadGap::Fb(), canonical_quadratic(mpq_class(1, 3), 5), 5);
  CHECK(is_cubioid_member(t));
  auto b = certify_rotational(rotational_set_from_vertices(parse_angle_list("7/26,11/26,21/26")), 5);
  CHECK(corollary_check(b));
  CertifiedSlice two;
  two.slice.depth = 4;
  for (auto c : {"1/8-3/8", "5/8-7/8"}) two.slice.leaves.push_back({Chord::parse(c), 0, LeafOrigin::Generator});
  auto r = is_cubioid_member(two);
  CHECK(r.verdict == Verdict::NonMember);
  CHECK(r.diagnostic.rfind("TwoRotationalSets", 0) == 0);
  CertifiedSlice bare;
  bare.slice.depth = 4;
  bare.slice.leaves.push_back({Chord::parse("0-1/2"), 0, LeafOrigin::Generator});
  auto c = corollary_check(bare);
  CHECK(c.verdict == Verdict::NonMember);
  CHECK(c.diagnostic.rfind("NoAttachedGap", 0) == 0);
}

TEST_CASE("projection") {
  auto u = build_quad_gap(CriticalChord::parse("1/3-2/3"));
  CHECK(project_lamination(u, canonical_lam_quadgap(u, 4)).size() == 0);
  LaminationSlice bad;
  bad.leaves.push_back({Chord::parse("1/6-1/2"), 0, LeafOrigin::Generator});
  CHECK_THROWS_AS(project_lamination(u, bad), Error);
}

TEST_CASE("witnesses") {
  auto u = build_quad_gap(CriticalChord::parse("1/3-2/3"));
  auto w = main_theorem_witness(certify_quadgap(u, 5));
  CHECK(w.gap == u);
  CHECK(w.theorem_case == 2);
  CHECK(w.projected.size() == 0);

  // without metadata the witness is still U, and it is the only one
  CertifiedSlice stripped{canonical_lam_quadgap(u, 5), {}};
  auto all = all_witnesses(stripped);
  REQUIRE(all.size() >= 1);
  for (const auto& x : all) CHECK(x.gap == u);

  auto g = rotational_set_from_vertices(parse_angle_list("7/26,4/13,11/26,10/13,21/26,12/13"));
  auto wd = main_theorem_witness(certify_rotational(g, 5));
  CHECK(wd.theorem_case == 2);
  CHECK(wd.gap.is_periodic());
  CHECK((wd.gap.major() == Chord::parse("7/26-12/13") || wd.gap.major() == Chord::parse("11/26-10/13")));

  auto q = canonical_quadratic(mpq_class(1, 3), 5);
  auto wt = main_theorem_witness(tune(u, q, 5));
  CHECK(wt.gap == u);
  CHECK(wt.projected.chords() == q.chords());
}
