#include "lamkit/circle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lamkit {

mpq_class frac(const mpq_class& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpq_class r = x - mpq_class(q);
  r.canonicalize();
  return r;
}

namespace {

using i128 = __int128;
constexpr int64_t kSmallMax = int64_t(1) << 62;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits_small(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62;
}

}  // namespace

Angle Angle::make(i128 n, i128 d) {
  i128 r = n % d;
  if (r < 0) r += d;
  i128 g = gcd128(r, d);
  if (g > 1) {
    r /= g;
    d /= g;
  }
  Angle a;
  if (d <= kSmallMax) {
    a.n_ = static_cast<int64_t>(r);
    a.d_ = static_cast<int64_t>(d);
    a.approx_ = static_cast<double>(a.n_) / static_cast<double>(a.d_);
  } else {
    mpq_class q(to_mpz(r), to_mpz(d));
    q.canonicalize();
    a.set_big(q);
  }
  return a;
}

void Angle::set_big(mpq_class q) {
  if (fits_small(q.get_den())) {
    n_ = q.get_num().get_si();
    d_ = q.get_den().get_si();
    big_.reset();
    approx_ = static_cast<double>(n_) / static_cast<double>(d_);
  } else {
    approx_ = q.get_d();
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }
}

Angle::Angle(const mpq_class& q) {
  mpq_class v = q;
  v.canonicalize();
  if (sgn(v) < 0 || cmp(v, 1) >= 0) v = frac(v);
  set_big(std::move(v));
}

Angle::Angle(long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  *this = make(num, den);
}

mpq_class Angle::value() const {
  if (big_) return *big_;
  mpq_class q;
  mpq_set_si(q.get_mpq_t(), n_, static_cast<unsigned long>(d_));
  return q;
}

mpz_class Angle::num() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(n_); }
mpz_class Angle::den() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(d_); }

std::strong_ordering Angle::exact_cmp(const Angle& a, const Angle& b) {
  int c;
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.n_) * b.d_, r = static_cast<i128>(b.n_) * a.d_;
    c = l < r ? -1 : (l > r ? 1 : 0);
  } else {
    c = cmp(a.value(), b.value());
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Angle Angle::operator+(const mpq_class& delta) const {
  if (!big_ && fits_small(delta.get_den()) && fits_small(delta.get_num()))
    return make(static_cast<i128>(n_) * delta.get_den().get_si() +
                    static_cast<i128>(delta.get_num().get_si()) * d_,
                static_cast<i128>(d_) * delta.get_den().get_si());
  return Angle(value() + delta);
}

Angle Angle::operator-(const mpq_class& delta) const { return *this + mpq_class(-delta); }

Angle Angle::plus(long p, long q) const {
  if (!big_) return make(static_cast<i128>(n_) * q + static_cast<i128>(p) * d_, static_cast<i128>(d_) * q);
  return Angle(value() + mpq_class(p, q));
}

Angle Angle::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpq_class q;
  try {
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(s), 1);
    } else {
      mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
      if (d == 0) throw ParseError("zero denominator in '" + s + "'");
      q = mpq_class(n, d);
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("bad angle '" + s + "'");
  }
  q.canonicalize();
  if (sgn(q) < 0 || cmp(q, 1) >= 0) throw ParseError("angle outside [0,1): '" + s + "'");
  return Angle(q);
}

std::string Angle::str() const {
  if (!big_) return std::to_string(n_) + "/" + std::to_string(d_);
  return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

mpq_class ccw_dist(const Angle& from, const Angle& to) {
  mpq_class d = to.value() - from.value();
  if (sgn(d) < 0) d += 1;
  return d;
}

Angle sigma(int d, const Angle& a) {
  if (!a.big_) return Angle::make(static_cast<i128>(a.n_) * d, a.d_);
  mpz_class n = a.num() * d;
  mpz_class den = a.den();
  mpz_class r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t());
  return Angle(mpq_class(r, den));
}

Angle sigma_n(int d, const Angle& a, int n) {
  if (n <= 0) return a;
  if (!a.big_) {
    i128 m = 1 % a.d_, b = d % a.d_;
    for (int e = n; e > 0; e >>= 1) {
      if (e & 1) m = m * b % a.d_;
      b = b * b % a.d_;
    }
    return Angle::make(static_cast<i128>(a.n_) * m, a.d_);
  }
  mpz_class num = a.num() * ipow(d, static_cast<unsigned long>(n));
  mpz_class den = a.den();
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Angle(mpq_class(r, den));
}

OrbitInfo orbit_info(int d, const Angle& a) {
  OrbitInfo info;
  std::map<Angle, int> seen;
  Angle x = a;
  for (int i = 0;; ++i) {
    auto it = seen.find(x);
    if (it != seen.end()) {
      info.preperiod = it->second;
      info.period = i - it->second;
      return info;
    }
    seen.emplace(x, i);
    info.orbit.push_back(x);
    x = sigma(d, x);
  }
}

std::pair<int, int> orbit_shape(int d, const Angle& a) {
  if (a.den() < kSmallMax) {
    int64_t q = a.den().get_si();
    int pre = 0;
    for (;;) {
      int64_t g = std::gcd(q, static_cast<int64_t>(d));
      if (g == 1) break;
      q /= g;
      ++pre;
    }
    if (q == 1) return {pre, 1};
    i128 r = d % q;
    int period = 1;
    while (r != 1) {
      r = r * d % q;
      ++period;
    }
    return {pre, period};
  }
  mpz_class q = a.den();
  mpz_class dd = d;
  int pre = 0;
  for (;;) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), dd.get_mpz_t());
    if (g == 1) break;
    q /= g;
    ++pre;
  }
  if (q == 1) return {pre, 1};
  mpz_class r = dd % q;
  int period = 1;
  while (r != 1) {
    r = (r * d) % q;
    ++period;
  }
  return {pre, period};
}

bool is_periodic(int d, const Angle& a) { return orbit_shape(d, a).first == 0; }

mpq_class Arc::length() const {
  if (full) return 1;
  if (start == end) return include_start && include_end ? mpq_class(0) : mpq_class(1);
  return ccw_dist(start, end);
}

bool Arc::contains(const Angle& x) const {
  if (full) return true;
  if (x == start) return include_start;
  if (x == end) return include_end;
  if (start == end) return !(include_start && include_end);
  if (start < end) return start < x && x < end;
  return start < x || x < end;
}

bool arc_contains(const Arc& arc, const Angle& x) { return arc.contains(x); }

bool arcs_intersect(const Arc& x, const Arc& y) {
  if (x.full || y.full) return true;
  if (x.contains(y.start) || y.contains(x.start)) return true;
  // open starts: an interior point just after the start
  mpq_class lx = x.length(), ly = y.length();
  if (sgn(lx) > 0 && y.contains(arc_midpoint(x.start, x.end))) return true;
  if (sgn(ly) > 0 && x.contains(arc_midpoint(y.start, y.end))) return true;
  return false;
}

Arc Arc::closure() const {
  Arc a = *this;
  if (!full && start == end && !(include_start && include_end)) return circle();
  a.include_start = a.include_end = true;
  return a;
}

Arc Arc::interior() const {
  Arc a = *this;
  if (full) return a;
  a.include_start = a.include_end = false;
  return a;
}

bool Arc::contains_arc(const Arc& o) const {
  if (full) return true;
  if (o.full) return false;
  if (o.degenerate()) return contains(o.start);
  // measure everything as distance travelled from our start
  mpq_class len = length();
  mpq_class s = ccw_dist(start, o.start);
  if (o.include_start ? !contains(o.start) : !(s < len)) return false;
  mpq_class e = s + o.length();
  if (e < len) return true;
  if (e == len) return include_end || !o.include_end;
  return false;
}

std::string Arc::str() const {
  if (full) return "circle";
  return std::string(include_start ? "[" : "(") + start.str() + "," + end.str() +
         (include_end ? "]" : ")");
}

Chord::Chord(const Angle& a, const Angle& b) : lo_(std::min(a, b)), hi_(std::max(a, b)) {}

Chord Chord::parse(std::string_view text) {
  std::string s(text);
  auto dash = s.find('-');
  if (dash == std::string::npos) throw ParseError("chord needs 'p/q-r/s': '" + s + "'");
  return Chord(Angle::parse(s.substr(0, dash)), Angle::parse(s.substr(dash + 1)));
}

std::string Chord::str() const { return lo_.str() + "-" + hi_.str(); }

Chord sigma(int d, const Chord& c) { return Chord(sigma(d, c.lo()), sigma(d, c.hi())); }

Chord sigma_n(int d, const Chord& c, int n) {
  return Chord(sigma_n(d, c.lo(), n), sigma_n(d, c.hi(), n));
}

bool chords_cross(const Chord& c1, const Chord& c2) {
  if (c1.degenerate() || c2.degenerate()) return false;
  if (c1.shares_endpoint(c2)) return false;
  auto inside = [&](const Angle& x) { return c1.lo() < x && x < c1.hi(); };
  return inside(c2.lo()) != inside(c2.hi());
}

bool chords_linked(const Chord& c1, const Chord& c2) {
  if (c1.degenerate() || c2.degenerate())
    throw Error("DegenerateChord", "chords_linked needs non-degenerate chords");
  return chords_cross(c1, c2);
}

mpz_class ipow(long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

std::vector<Angle> preimages(int d, const Angle& x, int n) {
  mpz_class D = ipow(d, static_cast<unsigned long>(n));
  std::vector<Angle> out;
  unsigned long count = D.get_ui();
  out.reserve(count);
  if (!x.big_ && D * x.d_ <= kSmallMax) {
    i128 den = static_cast<i128>(x.d_) * D.get_si();
    for (unsigned long i = 0; i < count; ++i)
      out.push_back(Angle::make(x.n_ + static_cast<i128>(i) * x.d_, den));
    return out;
  }
  for (unsigned long i = 0; i < count; ++i) out.emplace_back((x.value() + i) / D);
  std::sort(out.begin(), out.end());
  return out;
}

Angle arc_midpoint(const Angle& a, const Angle& b) {
  if (!a.big_ && !b.big_) {
    i128 prod = static_cast<i128>(a.d_) * b.d_;
    i128 n = static_cast<i128>(a.n_) * b.d_ + static_cast<i128>(b.n_) * a.d_;
    if (!(a < b)) n += prod;
    return Angle::make(n, 2 * prod);
  }
  mpq_class len = ccw_dist(a, b);
  if (sgn(len) == 0) len = 1;
  return Angle(a.value() + len / 2);
}

std::vector<Angle> parse_angle_list(std::string_view text) {
  std::vector<Angle> out;
  std::string s(text);
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string item = s.substr(pos, comma - pos);
    if (!item.empty()) out.push_back(Angle::parse(item));
    pos = comma + 1;
  }
  return out;
}

}  // namespace lamkit
