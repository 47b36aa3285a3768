#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wvp/error.hpp"
#include "wvp/geom.hpp"

namespace wvp {

using Ring = std::vector<Point2>;

inline std::size_t next_index(std::size_t i, std::size_t n) { return i + 1 == n ? 0 : i + 1; }
inline std::size_t prev_index(std::size_t i, std::size_t n) { return i == 0 ? n - 1 : i - 1; }

struct SimplePolygon {
  Ring vertices;  // counterclockwise

  SimplePolygon() = default;
  explicit SimplePolygon(Ring v) : vertices(std::move(v)) {}

  std::size_t size() const { return vertices.size(); }
  const Point2& operator[](std::size_t i) const { return vertices[i]; }
  Segment edge(std::size_t i) const { return {vertices[i], vertices[next_index(i, size())]}; }
  bool operator==(const SimplePolygon&) const = default;
};

struct PolygonWithHoles {
  SimplePolygon outer;
  std::vector<SimplePolygon> holes;  // each clockwise

  std::size_t hole_count() const { return holes.size(); }
  std::size_t total_vertices() const;
  /// Outer ring first, then holes in order.
  std::vector<Ring> rings() const;
  bool operator==(const PolygonWithHoles&) const = default;
};

struct QuerySegment {
  Point2 p;
  Point2 q;
};

enum class Location { Inside, OnBoundary, Outside };

struct Violation {
  ErrorCode code;
  std::string message;
  std::vector<std::size_t> indices;  // offending vertex/edge/hole indices
};

std::optional<Violation> validate(const SimplePolygon& P);
std::optional<Violation> validate(const PolygonWithHoles& P);
/// Throws Error with the first violation.
void require_valid(const SimplePolygon& P);
void require_valid(const PolygonWithHoles& P);

/// No three vertices (over all rings) collinear. Needed by the decomposition
/// and by random corpus generation; hand-built fixtures may opt out.
std::optional<Violation> check_general_position(const PolygonWithHoles& P);
std::optional<Violation> check_general_position(const SimplePolygon& P);

/// Twice the signed area would lose the exact half; this is the exact area.
Scalar signed_area(const Ring& r);

/// Location relative to the region bounded by one closed ring (orientation
/// ignored). Works for weakly simple rings: slit points report OnBoundary.
Location locate_in_ring(const Ring& r, const Point2& x);
Location point_in(const SimplePolygon& P, const Point2& x);
Location point_in(const PolygonWithHoles& P, const Point2& x);
/// Rings as in PolygonWithHoles::rings(): inside the first, outside the rest.
Location point_in(const std::vector<Ring>& rings, const Point2& x);

struct BoundaryHit {
  Point2 point;
  Scalar t;  // origin + t * dir
  std::size_t ring = 0;
  std::size_t edge = 0;                // ring[edge] -> ring[edge + 1]
  std::optional<std::size_t> vertex;   // set when the hit is exactly a ring vertex
};

/// First boundary point hit by the open ray origin + t*dir, t > 0. Edges that
/// contain the origin and run along the ray are skipped. Among edges hit at the
/// same parameter, one with the origin strictly on its left is preferred, which
/// picks the correct copy of a doubled slit edge.
BoundaryHit ray_shoot(const std::vector<Ring>& rings, const Point2& origin, const Point2& dir);
BoundaryHit ray_shoot(const Ring& ring, const Point2& origin, const Point2& dir);
BoundaryHit ray_shoot(const SimplePolygon& P, const Point2& origin, const Point2& dir);
BoundaryHit ray_shoot(const PolygonWithHoles& P, const Point2& origin, const Point2& dir);

/// Closed segment ab lies in the closed free space of the rings.
bool segment_inside(const std::vector<Ring>& rings, const Point2& a, const Point2& b);
bool segment_inside(const Ring& ring, const Point2& a, const Point2& b);

/// Supporting line of pq passes through some vertex.
bool line_hits_vertex(const std::vector<Ring>& rings, const Point2& p, const Point2& q);

struct SplitResult {
  // left of the directed line p->q: [B, v_{b+1}, ..., v_a, A]
  // right:                          [A, v_{a+1}, ..., v_b, B]
  SimplePolygon left;
  SimplePolygon right;
  Segment chord;  // A -> B, contains pq
  Point2 A, B;
  std::size_t edge_a = 0, edge_b = 0;  // edges of P carrying A and B
  // Per piece vertex: original index, or -1 for A / B.
  std::vector<long> left_source;
  std::vector<long> right_source;
};

/// Split a simple polygon along the component of pq's supporting line that
/// contains pq.
SplitResult split_along_line(const SimplePolygon& P, const QuerySegment& pq);

/// Bounding box (min, max) of all points.
std::pair<Point2, Point2> bounding_box(const std::vector<Ring>& rings);

}  // namespace wvp
