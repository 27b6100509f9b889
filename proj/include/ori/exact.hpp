#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ori {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Element of the field Q(sqrt(3)): a + b*sqrt(3) with a, b rational.
// All coordinates, matrix entries and intersection results live here;
// sqrt(3) is irrational, so (a,b) is a canonical representation.
struct ExactScalar {
  Rat a{0};
  Rat b{0};

  ExactScalar() = default;
  ExactScalar(int v) : a(v) {}
  ExactScalar(long v) : a(v) {}
  ExactScalar(Rat ra) : a(std::move(ra)) {}
  ExactScalar(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}

  static ExactScalar sqrt3(const Rat& coeff = Rat(1)) { return ExactScalar(Rat(0), coeff); }
  static ExactScalar ratio(long num, long den) { return ExactScalar(Rat(num, den)); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  // Exact sign of a + b*sqrt(3).
  int sign() const;

  double approx() const;
  std::string str() const;  // "p/q+r/s*sqrt3" normal form

  ExactScalar operator-() const { return ExactScalar(-a, -b); }
  ExactScalar& operator+=(const ExactScalar& o) { a += o.a; b += o.b; return *this; }
  ExactScalar& operator-=(const ExactScalar& o) { a -= o.a; b -= o.b; return *this; }

  friend ExactScalar operator+(ExactScalar l, const ExactScalar& r) { return l += r; }
  friend ExactScalar operator-(ExactScalar l, const ExactScalar& r) { return l -= r; }
  friend ExactScalar operator*(const ExactScalar& l, const ExactScalar& r) {
    return ExactScalar(l.a * r.a + 3 * (l.b * r.b), l.a * r.b + l.b * r.a);
  }
  friend ExactScalar operator/(const ExactScalar& l, const ExactScalar& r);

  friend bool operator==(const ExactScalar& l, const ExactScalar& r) { return l.a == r.a && l.b == r.b; }
  friend bool operator!=(const ExactScalar& l, const ExactScalar& r) { return !(l == r); }
  friend bool operator<(const ExactScalar& l, const ExactScalar& r) { return (l - r).sign() < 0; }
  friend bool operator>(const ExactScalar& l, const ExactScalar& r) { return (l - r).sign() > 0; }
  friend bool operator<=(const ExactScalar& l, const ExactScalar& r) { return (l - r).sign() <= 0; }
  friend bool operator>=(const ExactScalar& l, const ExactScalar& r) { return (l - r).sign() >= 0; }
};

// Parses the str() normal form. Returns nullopt on malformed input.
std::optional<ExactScalar> parse_exact(const std::string& s);

struct ExactPoint {
  ExactScalar x, y;

  ExactPoint() = default;
  ExactPoint(ExactScalar px, ExactScalar py) : x(std::move(px)), y(std::move(py)) {}

  friend ExactPoint operator+(const ExactPoint& p, const ExactPoint& q) { return {p.x + q.x, p.y + q.y}; }
  friend ExactPoint operator-(const ExactPoint& p, const ExactPoint& q) { return {p.x - q.x, p.y - q.y}; }
  friend bool operator==(const ExactPoint& p, const ExactPoint& q) { return p.x == q.x && p.y == q.y; }
  friend bool operator!=(const ExactPoint& p, const ExactPoint& q) { return !(p == q); }
  // Lexicographic by exact value; a total order usable as map key.
  friend bool operator<(const ExactPoint& p, const ExactPoint& q) {
    int c = (p.x - q.x).sign();
    if (c != 0) return c < 0;
    return (p.y - q.y).sign() < 0;
  }
  ExactPoint scaled(const ExactScalar& s) const { return {x * s, y * s}; }
};

inline ExactScalar cross(const ExactPoint& u, const ExactPoint& v) { return u.x * v.y - u.y * v.x; }
inline ExactScalar dot(const ExactPoint& u, const ExactPoint& v) { return u.x * v.x + u.y * v.y; }

// Directions quantized to multiples of 15 degrees, k in [0,24).
// Every such direction has a representative vector in Q(sqrt(3))^2
// because tan of a multiple of 15 degrees lies in Q(sqrt(3)).
struct Dir15 {
  int k = 0;
  Dir15() = default;
  explicit Dir15(int kk) : k(((kk % 24) + 24) % 24) {}
  Dir15 opposite() const { return Dir15(k + 12); }
  friend bool operator==(Dir15 a, Dir15 b) { return a.k == b.k; }
  friend bool operator!=(Dir15 a, Dir15 b) { return a.k != b.k; }
};

// Canonical (non-unit) direction vector for k*15 degrees, correct orientation.
ExactPoint dir_vec(Dir15 d);

// Classifies a nonzero vector as a Dir15 direction, or nullopt if it is not
// a multiple of 15 degrees.
std::optional<Dir15> classify_dir(const ExactPoint& v);

// Counterclockwise angle from d_from to d_to in units of 15 degrees.
// Returns 24 (a full turn) when the directions coincide.
int sector(Dir15 d_from, Dir15 d_to);

// Point at angle k*30 degrees (even Dir15) and given radius; stays in Q(sqrt3)^2.
ExactPoint polar30(int k15, const ExactScalar& radius);

// Orientation-preserving or -reversing rigid motion with entries in Q(sqrt(3)).
// For all isometries arising here (compositions of reflections across
// 15-degree lines plus lattice translations) the matrix angle is a multiple
// of 30 degrees, so entries lie in {0, +-1/2, +-1, +-sqrt3/2}.
struct Isometry {
  ExactScalar m00{1}, m01{0}, m10{0}, m11{1};
  ExactPoint t;
  int orient = 1;  // det(m)

  static Isometry identity() { return {}; }
  static Isometry translation(const ExactPoint& v);
  // Reflection fixing the line through p with direction d.
  static Isometry reflection(const ExactPoint& p, Dir15 d);
  // Rotation about p by k15*15 degrees; k15 must be even.
  static Isometry rotation(const ExactPoint& p, int k15);

  ExactPoint apply(const ExactPoint& p) const {
    return {m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y};
  }
  ExactPoint apply_vec(const ExactPoint& v) const {
    return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
  }
  Dir15 apply_dir(Dir15 d) const;

  // this * o : first apply o, then this.
  Isometry compose(const Isometry& o) const;
  Isometry inverse() const;

  friend bool operator==(const Isometry& a, const Isometry& b) {
    return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11 && a.t == b.t;
  }
};

struct Segment {
  ExactPoint p, q;
  Segment() = default;
  Segment(ExactPoint a, ExactPoint b) : p(std::move(a)), q(std::move(b)) {}
  friend bool operator==(const Segment& a, const Segment& b) { return a.p == b.p && a.q == b.q; }
};

struct IntersectEmpty {};
struct IntersectPoint { ExactPoint at; };
struct IntersectOverlap { Segment part; };
using IntersectResult = std::variant<IntersectEmpty, IntersectPoint, IntersectOverlap>;

// Exact classification of the intersection of two segments (closed sets).
IntersectResult segment_intersect(const Segment& s1, const Segment& s2);

bool point_on_segment(const ExactPoint& pt, const Segment& s);

// Canonical identifier of the supporting line of a segment: direction
// normalized to k in [0,12) plus the exact cross offset. Usable as map key.
struct LineKey {
  int k;             // direction class in [0,12)
  ExactScalar c;     // cross(dir_vec(k), point) for any point on the line
  friend bool operator==(const LineKey& a, const LineKey& b) { return a.k == b.k && a.c == b.c; }
  friend bool operator<(const LineKey& a, const LineKey& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.c < b.c;
  }
};
LineKey line_key(const ExactPoint& p, Dir15 d);
LineKey line_key(const Segment& s);

}  // namespace ori
