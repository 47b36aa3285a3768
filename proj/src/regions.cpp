#include "wvp/regions.hpp"

namespace wvp {

Region region_of_ring(const Ring& ring) { return Region{{ring}}; }

Region region_of(const PolygonWithHoles& P) {
  Region R;
  for (const Ring& r : P.rings()) R.cycles.push_back(r);
  return R;
}

Scalar region_area(const Region& R) {
  Scalar a = 0;
  for (const Ring& r : R.cycles) a += signed_area(r);
  return a;
}

Location region_locate(const Region& R, const Point2& x) {
  bool inside = false;
  for (const Ring& r : R.cycles) {
    Location l = locate_in_ring(r, x);
    if (l == Location::OnBoundary) return Location::OnBoundary;
    if (l == Location::Inside) inside = !inside;
  }
  return inside ? Location::Inside : Location::Outside;
}

std::size_t region_complexity(const Region& R) {
  std::size_t k = 0;
  for (const Ring& r : R.cycles) k += r.size();
  return k;
}

namespace {

Ring drop_straight(Ring r) {
  for (bool changed = true; changed && r.size() > 3;) {
    changed = false;
    for (std::size_t i = 0; i < r.size() && r.size() > 3; ++i) {
      const std::size_t n = r.size();
      const Point2& a = r[prev_index(i, n)];
      const Point2& c = r[next_index(i, n)];
      if (orient_sign(a, r[i], c) == 0 && dot(r[i] - a, c - r[i]) > 0) {
        r.erase(r.begin() + static_cast<long>(i));
        changed = true;
      }
    }
  }
  return r;
}

}  // namespace

Region region_from_faces(const Arrangement& A, const std::vector<bool>& in) {
  const auto& he = A.half_edges;
  auto selected = [&](long f) { return f >= 0 && in[static_cast<std::size_t>(f)]; };
  auto boundary = [&](std::size_t e) { return selected(he[e].face) && !selected(he[he[e].twin].face); };
  Region R;
  std::vector<bool> used(he.size(), false);
  for (std::size_t e0 = 0; e0 < he.size(); ++e0) {
    if (used[e0] || !boundary(e0)) continue;
    Ring cyc;
    std::size_t e = e0;
    do {
      used[e] = true;
      cyc.push_back(A.vertices[he[e].from]);
      // Turn clockwise around the head vertex through selected faces until the
      // next outgoing edge borders an unselected face.
      std::size_t h = he[e].next;
      while (!boundary(h)) {
        h = he[he[h].twin].next;
        WVP_CHECK(h != he[e].next, "region boundary tracing looped at a vertex");
      }
      e = h;
    } while (e != e0);
    R.cycles.push_back(drop_straight(std::move(cyc)));
  }
  return R;
}

Region region_combine(const std::vector<Region>& parts, const std::function<bool(const Point2&)>& keep) {
  std::vector<ArrSegment> segs;
  for (const Region& R : parts)
    for (const Ring& r : R.cycles)
      for (std::size_t i = 0; i < r.size(); ++i) {
        const Point2& a = r[i];
        const Point2& b = r[next_index(i, r.size())];
        if (a != b) segs.push_back({a, b, -1});
      }
  if (segs.empty()) return {};
  Arrangement A = build_arrangement(segs);
  std::vector<bool> in(A.faces.size());
  for (std::size_t f = 0; f < A.faces.size(); ++f) in[f] = keep(A.faces[f].rep);
  return region_from_faces(A, in);
}

Region region_union(const std::vector<Region>& parts) {
  return region_combine(parts, [&](const Point2& x) {
    for (const Region& R : parts)
      if (region_locate(R, x) == Location::Inside) return true;
    return false;
  });
}

Region region_intersection(const Region& a, const Region& b) {
  return region_combine({a, b}, [&](const Point2& x) {
    return region_locate(a, x) == Location::Inside && region_locate(b, x) == Location::Inside;
  });
}

}  // namespace wvp
