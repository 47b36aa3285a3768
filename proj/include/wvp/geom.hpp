#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace wvp {

/// Exact rational coordinate. gmp keeps every value canonical (reduced, positive
/// denominator) after each arithmetic operation.
using Scalar = mpq_class;

/// n/d in lowest terms. GMP arithmetic requires canonical operands, so use this
/// instead of the two-argument mpq_class constructor.
inline Scalar frac(long n, long d) {
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

inline int sign(const Scalar& s) { return sgn(s); }

struct Point2 {
  Scalar x;
  Scalar y;

  Point2() = default;
  Point2(Scalar x_, Scalar y_) : x(std::move(x_)), y(std::move(y_)) {}
  Point2(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  // Lexicographic (x, then y).
  friend bool operator<(const Point2& a, const Point2& b) {
    int c = cmp(a.x, b.x);
    return c < 0 || (c == 0 && a.y < b.y);
  }

  Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  Point2 operator*(const Scalar& s) const { return {x * s, y * s}; }
  Point2 operator-() const { return {-x, -y}; }
};

std::ostream& operator<<(std::ostream& os, const Point2& p);

inline Scalar cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
inline Scalar dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }
inline Scalar squared_distance(const Point2& a, const Point2& b) {
  Point2 d = b - a;
  return dot(d, d);
}
inline Point2 midpoint(const Point2& a, const Point2& b) {
  return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}
/// a + t (b - a)
inline Point2 lerp(const Point2& a, const Point2& b, const Scalar& t) { return a + (b - a) * t; }

struct Segment {
  Point2 a;
  Point2 b;

  Point2 direction() const { return b - a; }
  friend bool operator==(const Segment& s, const Segment& t) { return s.a == t.a && s.b == t.b; }
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

/// Sign of (b - a) x (c - a).
int orient_sign(const Point2& a, const Point2& b, const Point2& c);
inline Orientation orient(const Point2& a, const Point2& b, const Point2& c) {
  return static_cast<Orientation>(orient_sign(a, b, c));
}

/// Closed-segment membership.
bool on_segment(const Point2& p, const Point2& a, const Point2& b);
/// Strictly between a and b (excludes endpoints).
bool in_segment_interior(const Point2& p, const Point2& a, const Point2& b);

/// Parameter t with p = a + t (b - a). Requires p on the line through a, b and a != b.
Scalar param_on(const Point2& p, const Point2& a, const Point2& b);

struct SegmentIntersection {
  enum class Kind { Empty, Point, Overlap };
  Kind kind = Kind::Empty;
  Point2 point;     // valid for Point
  Segment overlap;  // valid for Overlap, ordered lexicographically

  bool empty() const { return kind == Kind::Empty; }
};

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

/// True when the two closed segments cross at a single point interior to both.
bool proper_crossing(const Segment& s1, const Segment& s2);

/// Intersection point of two non-parallel lines (a1,b1) and (a2,b2).
std::optional<Point2> line_intersection(const Point2& a1, const Point2& b1, const Point2& a2,
                                        const Point2& b2);

/// Nearest point of `s` on the open ray origin + t * dir, t > 0; also yields t.
struct RayHit {
  Point2 point;
  Scalar t;
};
std::optional<RayHit> ray_segment_hit_param(const Point2& origin, const Point2& dir, const Segment& s);
std::optional<Point2> ray_segment_hit(const Point2& origin, const Point2& dir, const Segment& s);

/// Angular order of directions (a - pivot) and (b - pivot), measured
/// counterclockwise starting at the +x axis (angle in [0, 2pi)).
std::weak_ordering angular_compare(const Point2& pivot, const Point2& a, const Point2& b);
/// Same order for direction vectors.
std::weak_ordering direction_compare(const Point2& u, const Point2& v);

/// Direction d lies strictly inside the counterclockwise wedge that starts at
/// `from` and ends at `to` (both nonzero). A wedge with from == to direction is
/// the full turn minus that ray.
bool strictly_inside_ccw_wedge(const Point2& from, const Point2& to, const Point2& d);

double to_double(const Scalar& s);

struct PointHash {
  std::size_t operator()(const Point2& p) const;
};

}  // namespace wvp
