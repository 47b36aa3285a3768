#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "wvp/polygon.hpp"

// Brute-force ground truth for weak visibility. Deliberately shares no code with
// the algorithms it checks beyond the exact kernel: containment uses winding
// numbers rather than the crossing-parity test of the polygon module.
namespace wvp::oracle {

/// Winding-number classification against rings (outer first, then holes).
Location locate(const std::vector<Ring>& rings, const Point2& x);

/// Closed segment xw stays inside the closed free space.
bool segment_visible(const std::vector<Ring>& rings, const Point2& x, const Point2& w);

struct VisibleInterval {
  Scalar t0;
  Scalar t1;
};

/// Maximal sub-intervals [t0, t1] of pq (parameter on p + t (q - p)) visible from x.
std::vector<VisibleInterval> visible_parts_of_pq(const std::vector<Ring>& rings, const Point2& x,
                                                 const QuerySegment& pq);

bool weakly_visible(const std::vector<Ring>& rings, const Point2& x, const QuerySegment& pq);

/// Stratified grid points (cell centres of a g x g grid over the bounding box,
/// kept when strictly inside) followed by seeded uniform random rational points;
/// `count` points in total, roughly half from each source.
std::vector<Point2> sample_points(const std::vector<Ring>& rings, std::size_t count,
                                  std::uint64_t seed);

/// Uniform random rational point strictly inside the free space.
Point2 random_interior_point(const std::vector<Ring>& rings, std::mt19937_64& rng);

struct Mismatch {
  Point2 point;
  bool claimed;
  bool truth;
};

/// Compares a membership predicate with weakly_visible on the given samples.
std::vector<Mismatch> compare_membership(const std::vector<Ring>& rings, const QuerySegment& pq,
                                         const std::vector<Point2>& samples,
                                         const std::function<bool(const Point2&)>& claimed);

}  // namespace wvp::oracle
