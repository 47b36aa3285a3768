#include "wvp/polygon.hpp"

#include <algorithm>

namespace wvp {

std::size_t PolygonWithHoles::total_vertices() const {
  std::size_t n = outer.size();
  for (const auto& h : holes) n += h.size();
  return n;
}

std::vector<Ring> PolygonWithHoles::rings() const {
  std::vector<Ring> out;
  out.reserve(holes.size() + 1);
  out.push_back(outer.vertices);
  for (const auto& h : holes) out.push_back(h.vertices);
  return out;
}

Scalar signed_area(const Ring& r) {
  Scalar acc = 0;
  for (std::size_t i = 0; i < r.size(); ++i) acc += cross(r[i], r[next_index(i, r.size())]);
  return acc / 2;
}

namespace {

std::optional<Violation> ring_shape(const Ring& r) {
  const std::size_t n = r.size();
  if (n < 3) return Violation{ErrorCode::DegenerateVertex, "fewer than 3 vertices", {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] == r[next_index(i, n)]) {
      return Violation{ErrorCode::DegenerateVertex, "repeated consecutive vertex",
                       {i, next_index(i, n)}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t a = prev_index(i, n), c = next_index(i, n);
    if (orient_sign(r[a], r[i], r[c]) == 0) {
      return Violation{ErrorCode::DegenerateVertex, "three consecutive collinear vertices",
                       {a, i, c}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Segment ei{r[i], r[next_index(i, n)]};
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;  // shared vertex only; overlaps caught above
      Segment ej{r[j], r[next_index(j, n)]};
      if (!segment_intersection(ei, ej).empty()) {
        return Violation{ErrorCode::SelfIntersection, "edges intersect", {i, j}};
      }
    }
  }
  return std::nullopt;
}

bool rings_touch(const Ring& a, const Ring& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Segment ea{a[i], a[next_index(i, a.size())]};
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!segment_intersection(ea, {b[j], b[next_index(j, b.size())]}).empty()) return true;
    }
  }
  return false;
}

std::optional<Violation> no_three_collinear(const std::vector<Ring>& rings) {
  std::vector<Point2> pts;
  for (const auto& r : rings) pts.insert(pts.end(), r.begin(), r.end());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (orient_sign(pts[i], pts[j], pts[k]) == 0)
          return Violation{ErrorCode::NotGeneralPosition, "three collinear vertices", {i, j, k}};
  return std::nullopt;
}

}  // namespace

std::optional<Violation> validate(const SimplePolygon& P) {
  if (auto v = ring_shape(P.vertices)) return v;
  if (signed_area(P.vertices) <= 0) {
    return Violation{ErrorCode::WrongOrientation, "outer boundary is not counterclockwise", {}};
  }
  return std::nullopt;
}

std::optional<Violation> validate(const PolygonWithHoles& P) {
  if (auto v = validate(P.outer)) return v;
  for (std::size_t h = 0; h < P.holes.size(); ++h) {
    const Ring& r = P.holes[h].vertices;
    if (auto v = ring_shape(r)) {
      v->message = "hole " + std::to_string(h) + ": " + v->message;
      v->indices.insert(v->indices.begin(), h);
      return v;
    }
    if (signed_area(r) >= 0) {
      return Violation{ErrorCode::WrongOrientation, "hole is not clockwise", {h}};
    }
    if (rings_touch(r, P.outer.vertices)) {
      return Violation{ErrorCode::HolesTouch, "hole touches the outer boundary", {h}};
    }
    if (locate_in_ring(P.outer.vertices, r[0]) != Location::Inside) {
      return Violation{ErrorCode::HoleOutsideOuter, "hole is not inside the outer boundary", {h}};
    }
  }
  for (std::size_t a = 0; a < P.holes.size(); ++a) {
    for (std::size_t b = a + 1; b < P.holes.size(); ++b) {
      const Ring& ra = P.holes[a].vertices;
      const Ring& rb = P.holes[b].vertices;
      if (rings_touch(ra, rb) || locate_in_ring(ra, rb[0]) != Location::Outside ||
          locate_in_ring(rb, ra[0]) != Location::Outside) {
        return Violation{ErrorCode::HolesTouch, "holes intersect or nest", {a, b}};
      }
    }
  }
  return std::nullopt;
}

void require_valid(const SimplePolygon& P) {
  if (auto v = validate(P)) throw Error(v->code, v->message);
}

void require_valid(const PolygonWithHoles& P) {
  if (auto v = validate(P)) throw Error(v->code, v->message);
}

std::optional<Violation> check_general_position(const PolygonWithHoles& P) {
  return no_three_collinear(P.rings());
}

std::optional<Violation> check_general_position(const SimplePolygon& P) {
  return no_three_collinear({P.vertices});
}

Location locate_in_ring(const Ring& r, const Point2& x) {
  const std::size_t n = r.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = r[i];
    const Point2& b = r[next_index(i, n)];
    if (on_segment(x, a, b)) return Location::OnBoundary;
    // Half-open rule on y avoids double counting at vertices.
    bool up = a.y <= x.y && b.y > x.y;
    bool down = b.y <= x.y && a.y > x.y;
    if (up && orient_sign(a, b, x) > 0) inside = !inside;
    if (down && orient_sign(a, b, x) < 0) inside = !inside;
  }
  return inside ? Location::Inside : Location::Outside;
}

Location point_in(const std::vector<Ring>& rings, const Point2& x) {
  Location outer = locate_in_ring(rings.at(0), x);
  if (outer != Location::Inside) return outer;
  for (std::size_t i = 1; i < rings.size(); ++i) {
    Location l = locate_in_ring(rings[i], x);
    if (l == Location::Inside) return Location::Outside;
    if (l == Location::OnBoundary) return Location::OnBoundary;
  }
  return Location::Inside;
}

Location point_in(const SimplePolygon& P, const Point2& x) {
  return locate_in_ring(P.vertices, x);
}

Location point_in(const PolygonWithHoles& P, const Point2& x) { return point_in(P.rings(), x); }

BoundaryHit ray_shoot(const std::vector<Ring>& rings, const Point2& origin, const Point2& dir) {
  if (dir.x == 0 && dir.y == 0) throw Error(ErrorCode::InvalidArgument, "zero ray direction");
  std::optional<BoundaryHit> best;
  bool best_left = false;
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const Ring& r = rings[ri];
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Point2& a = r[i];
      const Point2& b = r[next_index(i, r.size())];
      int side = orient_sign(a, b, origin);
      if (side == 0 && cross(b - a, dir) == 0 && on_segment(origin, a, b)) continue;
      auto h = ray_segment_hit_param(origin, dir, {a, b});
      if (!h) continue;
      bool left = side > 0;
      int c = best ? cmp(h->t, best->t) : -1;
      if (c < 0 || (c == 0 && left && !best_left)) {
        BoundaryHit bh;
        bh.point = h->point;
        bh.t = h->t;
        bh.ring = ri;
        bh.edge = i;
        if (h->point == a) bh.vertex = i;
        else if (h->point == b) bh.vertex = next_index(i, r.size());
        best = std::move(bh);
        best_left = left;
      }
    }
  }
  if (!best) throw Error(ErrorCode::NoHit, "ray leaves the polygon without hitting the boundary");
  return *best;
}

BoundaryHit ray_shoot(const Ring& ring, const Point2& origin, const Point2& dir) {
  return ray_shoot(std::vector<Ring>{ring}, origin, dir);
}

BoundaryHit ray_shoot(const SimplePolygon& P, const Point2& origin, const Point2& dir) {
  return ray_shoot(P.vertices, origin, dir);
}

BoundaryHit ray_shoot(const PolygonWithHoles& P, const Point2& origin, const Point2& dir) {
  return ray_shoot(P.rings(), origin, dir);
}

bool segment_inside(const std::vector<Ring>& rings, const Point2& a, const Point2& b) {
  if (point_in(rings, a) == Location::Outside || point_in(rings, b) == Location::Outside) {
    return false;
  }
  if (a == b) return true;
  std::vector<Scalar> ts{Scalar(0), Scalar(1)};
  for (const Ring& r : rings) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      Segment e{r[i], r[next_index(i, r.size())]};
      if (proper_crossing({a, b}, e)) return false;
      auto x = segment_intersection({a, b}, e);
      if (x.kind == SegmentIntersection::Kind::Point) {
        ts.push_back(param_on(x.point, a, b));
      } else if (x.kind == SegmentIntersection::Kind::Overlap) {
        ts.push_back(param_on(x.overlap.a, a, b));
        ts.push_back(param_on(x.overlap.b, a, b));
      }
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (point_in(rings, lerp(a, b, (ts[i] + ts[i + 1]) / 2)) == Location::Outside) return false;
  }
  return true;
}

bool segment_inside(const Ring& ring, const Point2& a, const Point2& b) {
  return segment_inside(std::vector<Ring>{ring}, a, b);
}

bool line_hits_vertex(const std::vector<Ring>& rings, const Point2& p, const Point2& q) {
  for (const Ring& r : rings)
    for (const Point2& v : r)
      if (orient_sign(p, q, v) == 0) return true;
  return false;
}

SplitResult split_along_line(const SimplePolygon& P, const QuerySegment& pq) {
  const Point2& p = pq.p;
  const Point2& q = pq.q;
  if (p == q) throw Error(ErrorCode::InvalidArgument, "degenerate query segment");
  const std::vector<Ring> rings{P.vertices};
  if (point_in(rings, p) != Location::Inside || point_in(rings, q) != Location::Inside ||
      !segment_inside(rings, p, q)) {
    throw Error(ErrorCode::InvalidArgument, "query segment is not strictly inside the polygon");
  }
  if (line_hits_vertex(rings, p, q)) {
    throw Error(ErrorCode::UnsupportedDegeneracy, "supporting line passes through a vertex");
  }
  BoundaryHit ha = ray_shoot(rings, p, p - q);
  BoundaryHit hb = ray_shoot(rings, q, q - p);
  WVP_CHECK(!ha.vertex && !hb.vertex, "line hit a vertex despite the vertex check");

  const std::size_t n = P.size();
  SplitResult out;
  out.A = ha.point;
  out.B = hb.point;
  out.edge_a = ha.edge;
  out.edge_b = hb.edge;
  out.chord = {out.A, out.B};

  Ring left{out.B};
  out.left_source.push_back(-1);
  for (std::size_t i = next_index(out.edge_b, n);; i = next_index(i, n)) {
    left.push_back(P[i]);
    out.left_source.push_back(static_cast<long>(i));
    if (i == out.edge_a) break;
  }
  left.push_back(out.A);
  out.left_source.push_back(-1);

  Ring right{out.A};
  out.right_source.push_back(-1);
  for (std::size_t i = next_index(out.edge_a, n);; i = next_index(i, n)) {
    right.push_back(P[i]);
    out.right_source.push_back(static_cast<long>(i));
    if (i == out.edge_b) break;
  }
  right.push_back(out.B);
  out.right_source.push_back(-1);

  out.left = SimplePolygon(std::move(left));
  out.right = SimplePolygon(std::move(right));
  return out;
}

std::pair<Point2, Point2> bounding_box(const std::vector<Ring>& rings) {
  Point2 lo = rings.at(0).at(0), hi = lo;
  for (const Ring& r : rings) {
    for (const Point2& v : r) {
      if (v.x < lo.x) lo.x = v.x;
      if (v.y < lo.y) lo.y = v.y;
      if (v.x > hi.x) hi.x = v.x;
      if (v.y > hi.y) hi.y = v.y;
    }
  }
  return {lo, hi};
}

}  // namespace wvp
