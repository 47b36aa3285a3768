#pragma once

#include <functional>
#include <vector>

#include "wvp/arrangement.hpp"
#include "wvp/polygon.hpp"

namespace wvp {

/// A planar region given by boundary cycles: counterclockwise outer cycles and
/// clockwise hole cycles, possibly several components. Rings may be weakly
/// simple; membership uses crossing parity over all cycles.
struct Region {
  std::vector<Ring> cycles;

  bool empty() const { return cycles.empty(); }
};

Region region_of_ring(const Ring& ring);
Region region_of(const PolygonWithHoles& P);

/// Exact area: sum of signed cycle areas.
Scalar region_area(const Region& R);
/// OnBoundary if x lies on a cycle edge, otherwise parity of crossings.
Location region_locate(const Region& R, const Point2& x);
/// Total number of cycle vertices.
std::size_t region_complexity(const Region& R);

/// Boundary of the union of the faces selected by `in`, with straight vertices
/// removed. Edges with selected faces on both sides are dropped.
Region region_from_faces(const Arrangement& A, const std::vector<bool>& in);

/// Regularized Boolean operations through the arrangement of all cycle edges.
Region region_union(const std::vector<Region>& parts);
Region region_intersection(const Region& a, const Region& b);

/// Faces of the arrangement of all cycle edges of `parts`, selected by a
/// predicate on each face's representative point.
Region region_combine(const std::vector<Region>& parts, const std::function<bool(const Point2&)>& keep);

}  // namespace wvp
