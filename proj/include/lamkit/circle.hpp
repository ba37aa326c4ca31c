#pragma once

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lamkit {

/// Base class for every error raised by the library. The code is a short
/// machine-readable tag, e.g. "NotInvariant".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Raised when input text cannot be parsed.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

/// A point of the circle R/Z, an exact reduced fraction in [0,1). Values
/// whose denominator fits in 62 bits are kept in machine integers; larger
/// ones fall back to GMP.
class Angle {
 public:
  Angle() = default;
  explicit Angle(const mpq_class& q);
  Angle(long num, long den);

  static Angle parse(std::string_view text);

  mpq_class value() const;
  mpz_class num() const;
  mpz_class den() const;
  bool is_zero() const { return !big_ && n_ == 0; }

  /// "p/q" in lowest terms, "0/1" for zero.
  std::string str() const;
  double to_double() const { return approx_; }

  Angle operator+(const mpq_class& delta) const;
  Angle operator-(const mpq_class& delta) const;
  /// this + p/q (mod 1).
  Angle plus(long p, long q) const;

  friend bool operator==(const Angle& a, const Angle& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (!a.big_ || !b.big_) return false;  // the small form is canonical
    return *a.big_ == *b.big_;
  }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    // the cached doubles decide unless the values are very close
    if (a.approx_ < b.approx_ - 1e-12) return std::strong_ordering::less;
    if (a.approx_ > b.approx_ + 1e-12) return std::strong_ordering::greater;
    return exact_cmp(a, b);
  }

 private:
  friend Angle sigma(int d, const Angle& a);
  friend Angle sigma_n(int d, const Angle& a, int n);
  friend std::vector<Angle> preimages(int d, const Angle& x, int n);
  friend Angle arc_midpoint(const Angle& a, const Angle& b);

  /// n/d reduced mod 1; d > 0.
  static Angle make(__int128 n, __int128 d);
  static std::strong_ordering exact_cmp(const Angle& a, const Angle& b);
  void set_big(mpq_class q);

  int64_t n_ = 0;
  int64_t d_ = 1;
  std::shared_ptr<const mpq_class> big_;
  double approx_ = 0;
};

/// (x mod 1) in [0,1) for any rational x.
mpq_class frac(const mpq_class& x);

/// Positive distance travelled from `from` to `to` along the circle, in [0,1).
mpq_class ccw_dist(const Angle& from, const Angle& to);

/// sigma_d(a) = d*a mod 1.
Angle sigma(int d, const Angle& a);
Angle sigma_n(int d, const Angle& a, int n);

struct OrbitInfo {
  int preperiod = 0;
  int period = 1;
  std::vector<Angle> orbit;  // a, sigma(a), ... up to the first repeat
};

OrbitInfo orbit_info(int d, const Angle& a);

/// Preperiod and period without listing the orbit: the preperiod is the
/// number of steps needed to clear the factors shared with d from the
/// denominator, the period is the multiplicative order of d modulo what is
/// left.
std::pair<int, int> orbit_shape(int d, const Angle& a);

/// True iff sigma_d^n(a) == a for some n >= 1.
bool is_periodic(int d, const Angle& a);

/// Positively oriented arc from `start` to `end` with per-endpoint closure.
/// start == end describes either a single point (both ends closed) or the
/// full circle minus that point (both ends open); `full` marks the whole
/// circle.
struct Arc {
  Angle start;
  Angle end;
  bool include_start = false;
  bool include_end = false;
  bool full = false;

  static Arc open(const Angle& s, const Angle& e) { return {s, e, false, false, false}; }
  static Arc closed(const Angle& s, const Angle& e) { return {s, e, true, true, false}; }
  static Arc circle() { return {Angle(), Angle(), true, true, true}; }

  mpq_class length() const;
  bool degenerate() const { return !full && start == end && include_start && include_end; }
  bool contains(const Angle& x) const;
  Arc closure() const;
  Arc interior() const;
  /// True iff every point of `other` lies in this arc.
  bool contains_arc(const Arc& other) const;
  std::string str() const;

  friend bool operator==(const Arc& a, const Arc& b) = default;
};

bool arc_contains(const Arc& arc, const Angle& x);

/// The two arcs share at least one point.
bool arcs_intersect(const Arc& x, const Arc& y);

/// Unordered pair of angles; stored with lo <= hi.
class Chord {
 public:
  Chord() = default;
  Chord(const Angle& a, const Angle& b);

  static Chord parse(std::string_view text);

  const Angle& lo() const { return lo_; }
  const Angle& hi() const { return hi_; }
  bool degenerate() const { return lo_ == hi_; }
  bool has_endpoint(const Angle& x) const { return x == lo_ || x == hi_; }
  bool shares_endpoint(const Chord& o) const {
    return has_endpoint(o.lo_) || has_endpoint(o.hi_);
  }
  /// "p/q-r/s" with the smaller endpoint first.
  std::string str() const;

  friend bool operator==(const Chord& a, const Chord& b) = default;
  friend auto operator<=>(const Chord& a, const Chord& b) {
    if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
    return a.hi_ <=> b.hi_;
  }

 private:
  Angle lo_;
  Angle hi_;
};

Chord sigma(int d, const Chord& c);
Chord sigma_n(int d, const Chord& c, int n);

/// Endpoints strictly alternate around the circle. Shared endpoints do not
/// count. Throws Error("DegenerateChord") on degenerate input.
bool chords_linked(const Chord& c1, const Chord& c2);

/// Same test without the degeneracy check (degenerate chords never link).
bool chords_cross(const Chord& c1, const Chord& c2);

/// All d^n preimages of x under sigma_d^n, in increasing order.
std::vector<Angle> preimages(int d, const Angle& x, int n = 1);

/// Midpoint of the positively oriented arc from a to b.
Angle arc_midpoint(const Angle& a, const Angle& b);

mpz_class ipow(long base, unsigned long exp);

std::vector<Angle> parse_angle_list(std::string_view text);

}  // namespace lamkit
