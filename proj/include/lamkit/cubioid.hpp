#pragma once

#include "lamkit/canonical.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lamkit {

/// Monotone collapse of a degree-two Fatou gap onto the circle that turns
/// the first return map sigma^n into sigma_2. Member 0 of `cycle` is coded.
///
/// The anchor is sent to 0: the outer edge when the return map fixes its
/// endpoints, otherwise the fixed point of the return map in the basis.
/// Going positively from the anchor, bit 0 runs up to the other preimage
/// of the anchor and bit 1 covers the rest.
class PsiCoding {
 public:
  explicit PsiCoding(std::shared_ptr<const FatouCycle> cycle);

  static PsiCoding of_gap(const QuadGap& u);
  static PsiCoding of_vassal(const QuadGap& u);
  /// U itself for regular critical U, the vassal for periodic U.
  static PsiCoding for_tuning(const QuadGap& u);

  const FatouCycle& cycle() const { return *cycle_; }
  std::shared_ptr<const FatouCycle> cycle_ptr() const { return cycle_; }
  int return_period() const { return cycle_->period(); }
  bool anchor_is_edge() const { return anchor_edge_; }
  /// Anchor endpoints: (end of the anchor, start of bit 0). Equal for a
  /// point anchor.
  const Angle& anchor_begin() const { return a_begin_; }
  const Angle& anchor_end() const { return a_end_; }
  /// Other preimage of the anchor: one point or the two ends of an edge,
  /// in the order met going positively from the anchor.
  const std::vector<Angle>& coanchor() const { return co_; }

  bool in_base(const Angle& x) const { return !region_->hole_of(x).has_value(); }
  /// Hole of the coded gap containing x (nullopt on the base).
  std::optional<Arc> hole_of(const Angle& x) const { return region_->hole_of(x); }
  int bit(const Angle& x) const;
  Angle return_map(const Angle& x) const { return sigma_n(3, x, cycle_->period()); }

  /// Throws NotInBase.
  Angle project(const Angle& x) const;
  /// The base point whose itinerary is the binary expansion of t (the
  /// terminating one for dyadic t).
  Angle lift(const Angle& t) const;

 private:
  Angle branch(int w, const Angle& y) const;
  mpq_class cut(const Angle& x) const { return ccw_dist(a_end_, x); }

  std::shared_ptr<const FatouCycle> cycle_;
  std::shared_ptr<const FatouRegion> region_;
  bool anchor_edge_ = false;
  Angle a_begin_;
  Angle a_end_;
  std::vector<Angle> co_;
  mpq_class scale_;  // 3^n
};

Angle psi_project(const PsiCoding& coding, const Angle& x);
Angle psi_lift(const PsiCoding& coding, const Angle& t);

/// Gap metadata carried next to a slice.
struct GapDescriptor {
  enum class Kind { Finite, QuadGap, Vassal, Attached, Lifted };
  Kind kind = Kind::Finite;
  std::string label;
  std::optional<FiniteGap> finite;  // Finite
  bool rotational = false;          // Finite
  std::optional<QuadGap> quad;      // QuadGap, Vassal, Lifted host
  std::vector<Angle> rot_vertices;  // Attached (sigma_3 set) or Lifted (sigma_2 set)
  size_t hole_index = 0;            // Attached, Lifted

  static GapDescriptor of_finite(const FiniteGap& g, bool rotational, std::string label);
  static GapDescriptor of_quad(const QuadGap& u);
  static GapDescriptor of_vassal(const QuadGap& u);
  static GapDescriptor of_attached(const RotationalSet& g, size_t hole);
  static GapDescriptor of_lifted(const QuadGap& host, const RotationalSet& g2, size_t hole);
};

std::string to_string(GapDescriptor::Kind k);

/// A periodic cycle of Fatou gaps as far as the predicates need it.
struct GapCycle {
  int period = 1;
  bool critical = false;
  std::vector<Chord> attachment;        // edge of member j that faces the class
  std::shared_ptr<const FatouCycle> fatou;  // null when not representable by arcs
};

/// Fatou cycles describe themselves; Finite descriptors return nullopt.
std::optional<GapCycle> realize(const GapDescriptor& g);

struct CertifiedSlice {
  LaminationSlice slice;
  std::vector<GapDescriptor> metadata;
};

CertifiedSlice certify_quadgap(const QuadGap& u, int depth);
CertifiedSlice certify_rotational(const RotationalSet& g, int depth);

/// Tunes U by a canonical sigma_2 lamination (or the empty one). Only the
/// rotational set of `quad` is lifted; the rest is pulled back to `depth`.
/// Throws NotCardioidMember.
CertifiedSlice tune(const QuadGap& u, const LaminationSlice& quad, int depth);

/// Projects the slice leaves lying on the tuning base of U and removes
/// grand orbits of critical leaves and quadrilaterals. Throws
/// NotCoexisting.
LaminationSlice project_lamination(const QuadGap& u, const LaminationSlice& s);

/// Periodic classes of a slice: connected components of the endpoint graph
/// restricted to leaves with periodic endpoints.
struct PeriodicClass {
  std::vector<Angle> vertices;  // sorted
  std::vector<Chord> leaves;
  int period = 1;
  bool invariant = false;
  mpq_class rotation;  // meaningful when invariant
};

std::vector<PeriodicClass> periodic_classes(const LaminationSlice& s);

/// Period bound used by the periodic scans: 2 * (generator period) + 6.
int period_bound(const LaminationSlice& s);

enum class Verdict { Member, NonMember, Inconclusive };
std::string to_string(Verdict v);

struct MembershipReport {
  Verdict verdict = Verdict::Member;
  std::string diagnostic;
  explicit operator bool() const { return verdict == Verdict::Member; }
};

/// Steps until sigma_2 maps the leaf onto an edge of g, or -1.
int intrinsic_depth(const Chord& c, const FiniteGap& g, int limit);

/// `bound` overrides period_bound when positive.
MembershipReport car_membership(const LaminationSlice& q,
                                const std::vector<GapDescriptor>& metadata = {}, int bound = 0);
MembershipReport is_cubioid_member(const CertifiedSlice& s, int bound = 0);
MembershipReport corollary_check(const CertifiedSlice& s, int bound = 0);

struct Witness {
  QuadGap gap;
  int theorem_case = 2;
  LaminationSlice projected;
  std::string source;  // which candidate family produced it
};

/// Throws NoWitnessFound.
Witness main_theorem_witness(const CertifiedSlice& s);
/// Every candidate that qualifies, in search order.
std::vector<Witness> all_witnesses(const CertifiedSlice& s);

}  // namespace lamkit
