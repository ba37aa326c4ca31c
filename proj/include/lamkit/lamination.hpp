#pragma once

#include "lamkit/circle.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <map>
#include <vector>

namespace lamkit {

enum class LeafOrigin { Generator, Pullback, Lifted };

struct Leaf {
  Chord chord;
  int depth = 0;  // pullback generation at which the leaf first appeared
  LeafOrigin origin = LeafOrigin::Pullback;
};

/// A finite-depth piece of an invariant lamination. Degenerate leaves are
/// never stored.
struct LaminationSlice {
  int degree = 3;
  int depth = 0;
  std::vector<Leaf> leaves;
  std::vector<Chord> generators;

  /// Sort leaves canonically, drop degenerate and duplicate chords (keeping
  /// the smallest depth).
  void normalize();
  bool contains(const Chord& c) const;
  std::vector<Chord> chords() const;
  size_t size() const { return leaves.size(); }
};

/// Convex hull of finitely many points, given by its cyclically ordered
/// vertices. A two-point set is a 2-gon with two holes.
class FiniteGap {
 public:
  FiniteGap() = default;
  explicit FiniteGap(std::vector<Angle> vertices);

  const std::vector<Angle>& vertices() const { return v_; }
  size_t size() const { return v_.size(); }
  /// Open arc from vertex i to vertex i+1.
  Arc hole(size_t i) const;
  Chord edge(size_t i) const { return Chord(v_[i], v_[(i + 1) % v_.size()]); }
  std::vector<Chord> edges() const;
  /// Index of the hole containing x, or nullopt when x is a vertex.
  std::optional<size_t> hole_index_of(const Angle& x) const;
  bool has_vertex(const Angle& x) const;
  bool is_edge(const Chord& c) const;
  /// sigma_d maps the vertex set onto itself and every hole onto a hole.
  bool is_invariant(int d) const;
  std::string str() const;

  friend bool operator==(const FiniteGap&, const FiniteGap&) = default;

 private:
  std::vector<Angle> v_;
};

std::vector<Arc> holes(const FiniteGap& g);

struct Major {
  Chord edge;
  Arc hole;
  size_t index = 0;
};

/// Edges whose hole has length at least 1/d.
std::vector<Major> majors(const FiniteGap& g, int d);

/// Combinatorial rotation number of sigma_d on the vertices, as p/q in
/// [0,1). Throws NotInvariant or OrderNotPreserved.
mpq_class rotation_number(const FiniteGap& g, int d);

/// All chords whose endpoint set is sigma_d-invariant.
std::vector<Chord> invariant_leaves(int d = 3);

struct Report {
  bool ok = true;
  std::vector<std::string> violations;
  size_t checked = 0;
  size_t frontier_exempt = 0;
};

Report check_unlinked(const LaminationSlice& s);
/// For each leaf below the depth frontier with a non-degenerate image, d
/// pairwise disjoint leaves with that image must be present.
Report check_sibling_invariant(const LaminationSlice& s);
/// The image of every leaf is a leaf of the slice or a point.
Report check_forward_invariant(const LaminationSlice& s);
/// A leaf with a periodic endpoint has both endpoints of the same period.
Report check_period_matching(const LaminationSlice& s);

/// Something a candidate pullback chord must not cross.
class Region {
 public:
  virtual ~Region() = default;
  virtual bool admits(const Chord& c) const = 0;
  virtual std::string label() const = 0;
};

using RegionPtr = std::shared_ptr<const Region>;

enum class SharedVertexPolicy {
  EdgesOnly,  // a chord touching a vertex must be an edge of the gap
  Closure     // any chord inside the closure of one hole is fine
};

class FiniteGapRegion : public Region {
 public:
  FiniteGapRegion(FiniteGap g, SharedVertexPolicy policy = SharedVertexPolicy::EdgesOnly)
      : g_(std::move(g)), policy_(policy) {}
  bool admits(const Chord& c) const override;
  std::string label() const override { return "finite " + g_.str(); }
  const FiniteGap& gap() const { return g_; }

 private:
  FiniteGap g_;
  SharedVertexPolicy policy_;
};

/// Rejects every non-degenerate chord: the critical region of an empty
/// lamination.
class WholeDiskRegion : public Region {
 public:
  bool admits(const Chord& c) const override { return c.degenerate(); }
  std::string label() const override { return "disk"; }
};

/// Component of sigma_d^{-1}(J) that contains x, where sigma_d(x) is in the
/// open arc J.
Arc pullback_component(int d, const Arc& J, const Angle& x);

/// A periodic cycle of infinite gaps F_0 -> F_1 -> ... -> F_{n-1} -> F_0.
/// Member j is described by a closed support arc S_j: its basis is the set
/// of x in S_j whose orbit visits S_{j+1}, S_{j+2}, ... in turn. The open
/// complement of S_j is the outer hole of F_j.
class FatouCycle {
 public:
  FatouCycle() = default;
  FatouCycle(int d, std::vector<Arc> supports);

  int degree() const { return d_; }
  int period() const { return static_cast<int>(s_.size()); }
  const Arc& support(int j) const { return s_[idx(j)]; }
  Arc outer_hole(int j) const;
  Chord outer_edge(int j) const;

  /// The hole of F_j containing x, or nullopt when x is in the basis.
  std::optional<Arc> hole_of(const Angle& x, int j = 0) const;
  bool in_basis(const Angle& x, int j = 0) const { return !hole_of(x, j).has_value(); }
  /// The chord does not separate basis points of F_j.
  bool admits(const Chord& c, int j = 0) const;
  bool has_edge(const Chord& c, int j) const;
  /// Number of sheets of sigma on the support of F_j (1 unless critical).
  bool critical(int j) const;

  struct Edge {
    Chord chord;
    Arc hole;
    int depth = 0;
  };
  /// Edges of F_j obtained with at most `depth` single sigma pullbacks,
  /// in canonical order.
  std::vector<Edge> edges(int j, int depth) const;

  friend bool operator==(const FatouCycle&, const FatouCycle&) = default;

 private:
  size_t idx(int j) const {
    int n = period();
    return static_cast<size_t>(((j % n) + n) % n);
  }
  int d_ = 3;
  std::vector<Arc> s_;
};

/// Region wrapper for one member of a Fatou cycle, with a memo of hole
/// queries (pullback runs ask about the same points many times).
class FatouRegion : public Region {
 public:
  FatouRegion(std::shared_ptr<const FatouCycle> cycle, int member, std::string label)
      : cycle_(std::move(cycle)), member_(member), label_(std::move(label)) {}
  bool admits(const Chord& c) const override;
  std::string label() const override { return label_; }
  std::optional<Arc> hole_of(const Angle& x) const;
  const FatouCycle& cycle() const { return *cycle_; }
  int member() const { return member_; }

 private:
  std::shared_ptr<const FatouCycle> cycle_;
  int member_;
  std::string label_;
  // hole of F_j containing x, memoised per member; entries are never erased
  const std::optional<Arc>& lookup(const Angle& x) const;

  mutable std::mutex mu_;
  mutable std::vector<std::map<Angle, std::optional<Arc>>> memo_;
};

}  // namespace lamkit
