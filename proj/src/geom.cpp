#include "wvp/geom.hpp"

#include <algorithm>
#include <cctype>

#include "wvp/error.hpp"

namespace wvp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfIntersection: return "SelfIntersection";
    case ErrorCode::WrongOrientation: return "WrongOrientation";
    case ErrorCode::DegenerateVertex: return "DegenerateVertex";
    case ErrorCode::HoleOutsideOuter: return "HoleOutsideOuter";
    case ErrorCode::HolesTouch: return "HolesTouch";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::UnsupportedDegeneracy: return "UnsupportedDegeneracy";
    case ErrorCode::OnCarrier: return "OnCarrier";
    case ErrorCode::NoHit: return "NoHit";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GenerationFailure: return "GenerationFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + s + "'");
  }
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  Scalar r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << '(' << to_string(p.x) << ", " << to_string(p.y) << ')';
}

int orient_sign(const Point2& a, const Point2& b, const Point2& c) {
  Scalar lhs = (b.x - a.x) * (c.y - a.y);
  Scalar rhs = (b.y - a.y) * (c.x - a.x);
  return cmp(lhs, rhs) > 0 ? 1 : (cmp(lhs, rhs) < 0 ? -1 : 0);
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (orient_sign(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool in_segment_interior(const Point2& p, const Point2& a, const Point2& b) {
  return p != a && p != b && on_segment(p, a, b);
}

Scalar param_on(const Point2& p, const Point2& a, const Point2& b) {
  Point2 d = b - a;
  if (d.x != 0) return (p.x - a.x) / d.x;
  return (p.y - a.y) / d.y;
}

std::optional<Point2> line_intersection(const Point2& a1, const Point2& b1, const Point2& a2,
                                        const Point2& b2) {
  Point2 r = b1 - a1;
  Point2 s = b2 - a2;
  Scalar denom = cross(r, s);
  if (denom == 0) return std::nullopt;
  Scalar t = cross(a2 - a1, s) / denom;
  return a1 + r * t;
}

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  SegmentIntersection out;
  const Point2 &p1 = s1.a, &p2 = s1.b, &p3 = s2.a, &p4 = s2.b;
  int d1 = orient_sign(p3, p4, p1);
  int d2 = orient_sign(p3, p4, p2);
  int d3 = orient_sign(p1, p2, p3);
  int d4 = orient_sign(p1, p2, p4);

  if (d1 == 0 && d2 == 0) {
    // Collinear (or degenerate): intersect the lexicographic ranges.
    Point2 lo1 = std::min(p1, p2), hi1 = std::max(p1, p2);
    Point2 lo2 = std::min(p3, p4), hi2 = std::max(p3, p4);
    Point2 lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (hi < lo) return out;
    if (lo == hi) {
      out.kind = SegmentIntersection::Kind::Point;
      out.point = lo;
      return out;
    }
    out.kind = SegmentIntersection::Kind::Overlap;
    out.overlap = {lo, hi};
    return out;
  }
  if (d1 * d2 > 0 || d3 * d4 > 0) return out;
  out.kind = SegmentIntersection::Kind::Point;
  if (d1 == 0) {
    out.point = p1;
  } else if (d2 == 0) {
    out.point = p2;
  } else if (d3 == 0) {
    out.point = p3;
  } else if (d4 == 0) {
    out.point = p4;
  } else {
    out.point = *line_intersection(p1, p2, p3, p4);
  }
  return out;
}

bool proper_crossing(const Segment& s1, const Segment& s2) {
  int d1 = orient_sign(s2.a, s2.b, s1.a);
  int d2 = orient_sign(s2.a, s2.b, s1.b);
  int d3 = orient_sign(s1.a, s1.b, s2.a);
  int d4 = orient_sign(s1.a, s1.b, s2.b);
  return d1 * d2 < 0 && d3 * d4 < 0;
}

std::optional<RayHit> ray_segment_hit_param(const Point2& origin, const Point2& dir,
                                             const Segment& s) {
  Point2 e = s.b - s.a;
  Scalar denom = cross(dir, e);
  if (denom == 0) {
    // Parallel: only collinear segments can be hit.
    if (cross(s.a - origin, dir) != 0) return std::nullopt;
    Scalar dd = dot(dir, dir);
    Scalar ta = dot(s.a - origin, dir) / dd;
    Scalar tb = dot(s.b - origin, dir) / dd;
    if (tb < ta) std::swap(ta, tb);
    if (tb <= 0) return std::nullopt;
    if (ta > 0) return RayHit{origin + dir * ta, ta};
    // Origin lies on the segment; the first hit is arbitrarily close. Report
    // the far end so callers see a deterministic answer.
    return RayHit{origin + dir * tb, tb};
  }
  Point2 w = s.a - origin;
  Scalar t = cross(w, e) / denom;
  Scalar u = cross(w, dir) / denom;
  if (t <= 0 || u < 0 || u > 1) return std::nullopt;
  return RayHit{origin + dir * t, t};
}

std::optional<Point2> ray_segment_hit(const Point2& origin, const Point2& dir, const Segment& s) {
  if (dir.x == 0 && dir.y == 0) throw Error(ErrorCode::InvalidArgument, "zero ray direction");
  auto h = ray_segment_hit_param(origin, dir, s);
  if (!h) return std::nullopt;
  return h->point;
}

namespace {
// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const Point2& d) {
  return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1;
}
}  // namespace

std::weak_ordering direction_compare(const Point2& u, const Point2& v) {
  int hu = half_plane(u), hv = half_plane(v);
  if (hu != hv) return hu < hv ? std::weak_ordering::less : std::weak_ordering::greater;
  int c = sign(cross(u, v));
  if (c > 0) return std::weak_ordering::less;
  if (c < 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

std::weak_ordering angular_compare(const Point2& pivot, const Point2& a, const Point2& b) {
  return direction_compare(a - pivot, b - pivot);
}

bool strictly_inside_ccw_wedge(const Point2& from, const Point2& to, const Point2& d) {
  // Rotate so that `from` is angle zero: compare ccw angles from `from`.
  auto ccw_angle_less = [&](const Point2& x, const Point2& y) {
    // Is angle(from -> x) < angle(from -> y), angles in [0, 2pi)?
    auto rel = [&](const Point2& z) {
      // Express z in the frame where `from` is +x: (dot, cross).
      return Point2{dot(from, z), cross(from, z)};
    };
    return direction_compare(rel(x), rel(y)) == std::weak_ordering::less;
  };
  Point2 zero_dir = from;
  if (direction_compare(d, zero_dir) == std::weak_ordering::equivalent) return false;
  if (direction_compare(to, zero_dir) == std::weak_ordering::equivalent) return true;
  return ccw_angle_less(d, to);
}

double to_double(const Scalar& s) { return s.get_d(); }

std::size_t PointHash::operator()(const Point2& p) const {
  std::hash<std::string> h;
  // Numerators and denominators are hashed through gmp's limb view.
  auto limb_hash = [](const mpz_class& z) {
    std::size_t acc = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) * 0x9e3779b97f4a7c15ULL;
    std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      acc ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL +
             (acc << 6) + (acc >> 2);
    }
    return acc;
  };
  (void)h;
  std::size_t a = limb_hash(p.x.get_num()) * 31 + limb_hash(p.x.get_den());
  std::size_t b = limb_hash(p.y.get_num()) * 31 + limb_hash(p.y.get_den());
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace wvp
