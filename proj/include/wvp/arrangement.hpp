#pragma once

#include <cstddef>
#include <vector>

#include "wvp/polygon.hpp"

namespace wvp {

/// Input segment of an arrangement. `label` is caller-defined; several input
/// segments may share a label.
struct ArrSegment {
  Point2 a;
  Point2 b;
  long label = -1;
};

/// Planar arrangement of segments with exact intersection points. Faces are
/// the bounded faces; each has one outer cycle (counterclockwise) and any
/// number of inner cycles (clockwise).
class Arrangement {
 public:
  struct HalfEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t twin = 0;
    std::size_t next = 0;
    long face = -1;   // -1 for the unbounded face
    long label = -1;  // label of the input segment this piece belongs to
  };
  struct Face {
    std::vector<std::size_t> outer;               // half-edge cycle, face on the left
    std::vector<std::vector<std::size_t>> inner;  // cycles of holes in the face
    Point2 rep;                                   // strictly interior point
    Scalar area2;                                 // twice the area of the outer cycle
  };

  std::vector<Point2> vertices;
  std::vector<HalfEdge> half_edges;
  std::vector<Face> faces;

  /// Outer cycle of face f as a ring.
  Ring outer_ring(std::size_t f) const;
  std::vector<Ring> inner_rings(std::size_t f) const;
  /// Face strictly containing x, -1 if x is in the unbounded face. Throws
  /// OnCarrier if x lies on an edge whose label satisfies `is_carrier`, and
  /// returns -2 if x lies on any other edge.
  template <class Pred>
  long locate(const Point2& x, Pred is_carrier) const;
  long locate(const Point2& x) const;
  /// Edge (half-edge index) containing x, or -1.
  long edge_at(const Point2& x) const;

 private:
  long locate_strict(const Point2& x) const;
};

/// Builds the arrangement. Overlapping collinear pieces are merged and keep the
/// label of the first segment listed.
Arrangement build_arrangement(const std::vector<ArrSegment>& segments);

template <class Pred>
long Arrangement::locate(const Point2& x, Pred is_carrier) const {
  long e = edge_at(x);
  if (e >= 0) {
    if (is_carrier(half_edges[e].label)) throw Error(ErrorCode::OnCarrier, "point lies on a constraint carrier");
    return -2;
  }
  return locate_strict(x);
}

}  // namespace wvp
