#pragma once

#include "lamkit/lamination.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lamkit {

/// A sigma_3-critical chord {u, u+1/3}. The short arc H(c) has length 1/3,
/// the long arc L(c) has length 2/3; both are stored open.
struct CriticalChord {
  Chord chord;
  Angle image;
  Arc long_arc;
  Arc short_arc;
  Angle co_critical;  // third preimage of `image`, inside L(c)

  /// Throws NotCritical unless the endpoints differ by exactly 1/3.
  static CriticalChord from(const Chord& c);
  static CriticalChord parse(std::string_view text) { return from(Chord::parse(text)); }
};

/// Whole forward orbit of x stays in the closure of L(c).
bool pi_membership(const CriticalChord& c, const Angle& x);

enum class CriticalKind { RegularCritical, Caterpillar, PeriodicType, BoundaryDegenerate };

struct Classification {
  CriticalKind kind = CriticalKind::RegularCritical;
  int period = 0;  // n_c for PeriodicType
};

Classification classify_critical_chord(const CriticalChord& c);
std::string to_string(CriticalKind k);

enum class GapType { RegularCritical, Periodic, Fa, Fb };
std::string to_string(GapType t);

/// Invariant quadratic gap. The major is {a, b} and the major hole is the
/// open arc (a, b); the gap lives on the closed arc [b, a].
struct QuadGap {
  GapType type = GapType::RegularCritical;
  int period = 0;  // 0 for regular critical
  Angle a;
  Angle b;
  std::optional<CriticalChord> seed;

  Chord major() const { return Chord(a, b); }
  Arc major_hole() const { return Arc::open(a, b); }
  /// {b - 1/3, a + 1/3}; equals the major in the regular critical case.
  Chord sibling_major() const;
  bool is_periodic() const { return type != GapType::RegularCritical; }
  FatouCycle cycle() const;
  std::string label() const;

  static QuadGap Fa();
  static QuadGap Fb();
  /// Periodic-type gap with the given major; the shorter side is the hole.
  /// Throws AmbiguousMajor for the diameter and NotPeriodicTypeMajor when
  /// the chord fails the test below.
  static QuadGap from_major(const Chord& m);
  /// Regular critical gap U(c).
  static QuadGap regular(const CriticalChord& c);

  friend bool operator==(const QuadGap& x, const QuadGap& y) {
    return x.type == y.type && x.period == y.period && x.a == y.a && x.b == y.b;
  }
};

/// U(c) for a regular critical or periodic-type chord. Periodic majors are
/// searched among sigma^k-fixed angles for k up to `period_limit`.
QuadGap build_quad_gap(const CriticalChord& c, int period_limit = 12);

/// Edges of U obtained with at most `depth` sigma-pullbacks of the major.
std::vector<FatouCycle::Edge> gap_edges(const QuadGap& u, int depth);

struct VassalGap {
  QuadGap owner;
  int period = 1;
  Angle a2;  // a'' = a + 1/3
  Angle b2;  // b'' = b - 1/3
  FatouCycle cycle;
  std::vector<FatouCycle::Edge> edges;  // member 0 (the one on the major)
};

/// Cycle of supports [sigma^j a, sigma^j b], j < k.
FatouCycle vassal_cycle(const QuadGap& u);
VassalGap vassal(const QuadGap& u, int depth);

enum class Side { A, B };

struct CaterpillarGap {
  Chord head;
  Chord critical_edge;
  std::vector<Chord> edges;  // l_{-1}, l_{-2}, ...
};

CaterpillarGap caterpillar_edges(const QuadGap& u, Side side, int depth);

struct Wings {
  Arc right;  // [a, b'']
  Arc left;   // [a'', b]
};

Wings wings(const QuadGap& u);

/// Decides whether the periodic chord is the major of a periodic-type gap.
/// Throws NotPeriodic when an endpoint is preperiodic.
bool is_periodic_type_major(const Chord& l);

/// Every periodic-type gap whose major has endpoints of exact period k.
/// The diameter yields both Fa and Fb.
std::vector<QuadGap> periodic_type_gaps(int k);

}  // namespace lamkit
