#include "ori/exact.hpp"

#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ori {

namespace {

int rat_sign(const Rat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

}  // namespace

int ExactScalar::sign() const {
  int sa = rat_sign(a);
  int sb = rat_sign(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Signs differ: compare |a| against |b|*sqrt(3) via a^2 vs 3 b^2.
  Rat lhs = a * a;
  Rat rhs = 3 * (b * b);
  if (lhs == rhs) {
    // Would mean a = +-b*sqrt3 with both nonzero: impossible over Q.
    assert(false && "sqrt(3) rationality violated");
    return 0;
  }
  return lhs > rhs ? sa : sb;
}

double ExactScalar::approx() const {
  return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(3.0);
}

std::string ExactScalar::str() const {
  std::ostringstream os;
  os << a.convert_to<std::string>();
  if (b != 0) {
    if (b > 0) os << "+";
    os << b.convert_to<std::string>() << "*sqrt3";
  }
  return os.str();
}

std::optional<ExactScalar> parse_exact(const std::string& s) {
  // Forms: "p/q", "p/q+r/s*sqrt3", "p/q-r/s*sqrt3" (integer parts allowed).
  auto parse_rat = [](const std::string& txt) -> std::optional<Rat> {
    if (txt.empty()) return std::nullopt;
    try {
      return Rat(txt);
    } catch (...) {
      return std::nullopt;
    }
  };
  auto star = s.find("*sqrt3");
  if (star == std::string::npos) {
    auto r = parse_rat(s);
    if (!r) return std::nullopt;
    return ExactScalar(*r);
  }
  // Split off the sqrt3 coefficient: scan backwards for its leading sign,
  // skipping the first character (which may itself be a sign).
  std::string head = s.substr(0, star);
  size_t split = std::string::npos;
  for (size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      if (head[i - 1] == '/' ) return std::nullopt;
      split = i;
      break;
    }
  }
  std::string ra = "0", rb;
  if (split == std::string::npos) {
    rb = head;  // pure multiple of sqrt3
  } else {
    ra = head.substr(0, split);
    rb = head.substr(split);
    if (!rb.empty() && rb[0] == '+') rb = rb.substr(1);
  }
  auto pa = parse_rat(ra);
  auto pb = parse_rat(rb);
  if (!pa || !pb) return std::nullopt;
  return ExactScalar(*pa, *pb);
}

ExactScalar operator/(const ExactScalar& l, const ExactScalar& r) {
  if (r.is_zero()) throw std::domain_error("ExactScalar division by zero");
  // (a+b s)/(c+d s) = (a+b s)(c-d s) / (c^2 - 3 d^2)
  Rat denom = r.a * r.a - 3 * (r.b * r.b);
  if (denom == 0) {
    assert(false && "nonzero Q(sqrt3) element with zero norm");
    throw std::domain_error("degenerate divisor");
  }
  ExactScalar num = l * ExactScalar(r.a, -r.b);
  return ExactScalar(num.a / denom, num.b / denom);
}

ExactPoint dir_vec(Dir15 d) {
  // tan of 0,15,30,45,60,75 degrees.
  static const ExactScalar tan15[6] = {
      ExactScalar(0),
      ExactScalar(Rat(2), Rat(-1)),        // 2 - sqrt3
      ExactScalar(Rat(0), Rat(1, 3)),      // sqrt3/3
      ExactScalar(1),
      ExactScalar(Rat(0), Rat(1)),         // sqrt3
      ExactScalar(Rat(2), Rat(1)),         // 2 + sqrt3
  };
  int k = d.k;
  if (k == 6) return {ExactScalar(0), ExactScalar(1)};
  if (k == 18) return {ExactScalar(0), ExactScalar(-1)};
  // Angle in (-90, 90) mod 180: x-component sign tells the half.
  bool right_half = (k < 6) || (k > 18);
  int m = k % 12;                      // direction class
  ExactScalar tn = (m < 6) ? tan15[m] : -tan15[12 - m];
  if (right_half) return {ExactScalar(1), tn};
  return {ExactScalar(-1), -tn};
}

std::optional<Dir15> classify_dir(const ExactPoint& v) {
  if (v.x.is_zero() && v.y.is_zero()) return std::nullopt;
  for (int k = 0; k < 24; ++k) {
    ExactPoint dv = dir_vec(Dir15(k));
    if (cross(dv, v).is_zero() && dot(dv, v).sign() > 0) return Dir15(k);
  }
  return std::nullopt;
}

int sector(Dir15 d_from, Dir15 d_to) {
  int u = ((d_to.k - d_from.k) % 24 + 24) % 24;
  return u == 0 ? 24 : u;
}

ExactPoint polar30(int k15, const ExactScalar& radius) {
  int k = ((k15 % 24) + 24) % 24;
  if (k % 2 != 0) throw std::invalid_argument("polar30 needs an even Dir15 index");
  // cos/sin of k*30 degrees, k = 0..11.
  static const Rat zero(0), one(1), half(1, 2);
  static const ExactScalar cos_tab[12] = {
      ExactScalar(one),           ExactScalar(zero, half),  ExactScalar(half),
      ExactScalar(zero),          ExactScalar(-half),       ExactScalar(zero, -half),
      ExactScalar(-one),          ExactScalar(zero, -half), ExactScalar(-half),
      ExactScalar(zero),          ExactScalar(half),        ExactScalar(zero, half),
  };
  static const ExactScalar sin_tab[12] = {
      ExactScalar(zero),          ExactScalar(half),        ExactScalar(zero, half),
      ExactScalar(one),           ExactScalar(zero, half),  ExactScalar(half),
      ExactScalar(zero),          ExactScalar(-half),       ExactScalar(zero, -half),
      ExactScalar(-one),          ExactScalar(zero, -half), ExactScalar(-half),
  };
  int idx = k / 2;
  return {cos_tab[idx] * radius, sin_tab[idx] * radius};
}

Isometry Isometry::translation(const ExactPoint& v) {
  Isometry r;
  r.t = v;
  return r;
}

Isometry Isometry::reflection(const ExactPoint& p, Dir15 d) {
  // R(v) = p + M (v - p) with M the reflection matrix across direction d:
  // M = 1/(dx^2+dy^2) [[dx^2-dy^2, 2 dx dy], [2 dx dy, dy^2-dx^2]].
  ExactPoint dv = dir_vec(d);
  ExactScalar n = dot(dv, dv);
  Isometry r;
  r.m00 = (dv.x * dv.x - dv.y * dv.y) / n;
  r.m01 = (ExactScalar(2) * dv.x * dv.y) / n;
  r.m10 = r.m01;
  r.m11 = -r.m00;
  r.orient = -1;
  ExactPoint mp = r.apply_vec(p);
  r.t = {p.x - mp.x, p.y - mp.y};
  return r;
}

Isometry Isometry::rotation(const ExactPoint& p, int k15) {
  int k = ((k15 % 24) + 24) % 24;
  if (k % 2 != 0) throw std::invalid_argument("rotation must be a multiple of 30 degrees");
  ExactPoint cs = polar30(k, ExactScalar(1));
  Isometry r;
  r.m00 = cs.x;
  r.m01 = -cs.y;
  r.m10 = cs.y;
  r.m11 = cs.x;
  r.orient = 1;
  ExactPoint mp = r.apply_vec(p);
  r.t = {p.x - mp.x, p.y - mp.y};
  return r;
}

Dir15 Isometry::apply_dir(Dir15 d) const {
  auto res = classify_dir(apply_vec(dir_vec(d)));
  if (!res) throw std::logic_error("isometry left the 15-degree grid");
  return *res;
}

Isometry Isometry::compose(const Isometry& o) const {
  Isometry r;
  r.m00 = m00 * o.m00 + m01 * o.m10;
  r.m01 = m00 * o.m01 + m01 * o.m11;
  r.m10 = m10 * o.m00 + m11 * o.m10;
  r.m11 = m10 * o.m01 + m11 * o.m11;
  r.t = apply(o.t);
  r.orient = orient * o.orient;
  return r;
}

Isometry Isometry::inverse() const {
  // Orthogonal matrix: inverse = transpose.
  Isometry r;
  r.m00 = m00;
  r.m01 = m10;
  r.m10 = m01;
  r.m11 = m11;
  r.orient = orient;
  ExactPoint mt = r.apply_vec(t);
  r.t = {-mt.x, -mt.y};
  return r;
}

bool point_on_segment(const ExactPoint& pt, const Segment& s) {
  ExactPoint d = s.q - s.p;
  ExactPoint v = pt - s.p;
  if (!cross(d, v).is_zero()) return false;
  ExactScalar t = dot(v, d);
  return t.sign() >= 0 && (t - dot(d, d)).sign() <= 0;
}

IntersectResult segment_intersect(const Segment& s1, const Segment& s2) {
  ExactPoint d1 = s1.q - s1.p;
  ExactPoint d2 = s2.q - s2.p;
  ExactScalar den = cross(d1, d2);
  ExactPoint w = s2.p - s1.p;
  if (!den.is_zero()) {
    ExactScalar t = cross(w, d2) / den;   // along s1
    ExactScalar u = cross(w, d1) / den;   // along s2
    if (t.sign() < 0 || (t - ExactScalar(1)).sign() > 0) return IntersectEmpty{};
    if (u.sign() < 0 || (u - ExactScalar(1)).sign() > 0) return IntersectEmpty{};
    return IntersectPoint{{s1.p.x + d1.x * t, s1.p.y + d1.y * t}};
  }
  if (!cross(w, d1).is_zero()) return IntersectEmpty{};  // parallel, distinct lines
  // Collinear: overlap interval in the parameter of s1.
  ExactScalar dd = dot(d1, d1);
  ExactScalar t0 = dot(s2.p - s1.p, d1) / dd;
  ExactScalar t1 = dot(s2.q - s1.p, d1) / dd;
  if (t1 < t0) std::swap(t0, t1);
  ExactScalar lo = t0.sign() > 0 ? t0 : ExactScalar(0);
  ExactScalar hi = (t1 - ExactScalar(1)).sign() < 0 ? t1 : ExactScalar(1);
  int c = (hi - lo).sign();
  if (c < 0) return IntersectEmpty{};
  auto at = [&](const ExactScalar& t) { return ExactPoint{s1.p.x + d1.x * t, s1.p.y + d1.y * t}; };
  if (c == 0) return IntersectPoint{at(lo)};
  return IntersectOverlap{Segment(at(lo), at(hi))};
}

LineKey line_key(const ExactPoint& p, Dir15 d) {
  int k = d.k % 12;
  ExactPoint dv = dir_vec(Dir15(k));
  return LineKey{k, cross(dv, p)};
}

LineKey line_key(const Segment& s) {
  auto d = classify_dir(s.q - s.p);
  if (!d) throw std::invalid_argument("segment direction not on the 15-degree grid");
  return line_key(s.p, *d);
}

}  // namespace ori
