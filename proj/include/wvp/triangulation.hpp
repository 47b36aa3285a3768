#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "wvp/polygon.hpp"

namespace wvp {

/// Ear-clipping triangulation of a simple or weakly simple counterclockwise ring
/// (weakly simple: doubled slit edges as produced by opening holes). Straight
/// (180 degree) ring vertices are not triangle corners; each is attached to the
/// triangle owning the boundary edge it lies on.
struct Triangulation {
  Ring ring;
  std::vector<std::array<std::size_t, 3>> tris;  // ring positions, counterclockwise
  // nbr[t][k]: triangle across edge corner k -> corner k+1, or -1 on the boundary.
  std::vector<std::array<long, 3>> nbr;
  // Triangles having ring position i as a corner; for straight vertices the single
  // triangle whose boundary edge carries it.
  std::vector<std::vector<std::size_t>> vertex_tris;
  std::vector<bool> straight;

  bool contains(std::size_t t, const Point2& x) const;
};

Triangulation triangulate(const Ring& ring);

}  // namespace wvp
