#include "wvp/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wvp {

namespace {

struct Box {
  Point2 lo, hi;
};

Box box_of(const Point2& a, const Point2& b) {
  return {{std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}};
}

bool boxes_meet(const Box& s, const Box& t) {
  return !(s.hi.x < t.lo.x || t.hi.x < s.lo.x || s.hi.y < t.lo.y || t.hi.y < s.lo.y);
}

Scalar cycle_area2(const std::vector<Point2>& pts, const std::vector<Arrangement::HalfEdge>& he,
                   const std::vector<std::size_t>& cyc) {
  Scalar a = 0;
  for (std::size_t e : cyc) a += cross(pts[he[e].from], pts[he[e].to]);
  return a;
}

}  // namespace

Ring Arrangement::outer_ring(std::size_t f) const {
  Ring r;
  for (std::size_t e : faces[f].outer) r.push_back(vertices[half_edges[e].from]);
  return r;
}

std::vector<Ring> Arrangement::inner_rings(std::size_t f) const {
  std::vector<Ring> out;
  for (const auto& cyc : faces[f].inner) {
    Ring r;
    for (std::size_t e : cyc) r.push_back(vertices[half_edges[e].from]);
    out.push_back(std::move(r));
  }
  return out;
}

long Arrangement::edge_at(const Point2& x) const {
  for (std::size_t e = 0; e < half_edges.size(); ++e) {
    const HalfEdge& h = half_edges[e];
    if (h.from < h.to && on_segment(x, vertices[h.from], vertices[h.to])) return static_cast<long>(e);
  }
  return -1;
}

long Arrangement::locate_strict(const Point2& x) const {
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (locate_in_ring(outer_ring(f), x) != Location::Inside) continue;
    bool in_hole = false;
    for (const Ring& r : inner_rings(f)) {
      if (locate_in_ring(r, x) != Location::Outside) {
        in_hole = true;
        break;
      }
    }
    if (!in_hole) return static_cast<long>(f);
  }
  return -1;
}

long Arrangement::locate(const Point2& x) const {
  return locate(x, [](long) { return false; });
}

Arrangement build_arrangement(const std::vector<ArrSegment>& segments) {
  Arrangement A;
  const std::size_t m = segments.size();
  std::vector<Box> boxes(m);
  std::vector<std::vector<Point2>> cuts(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (segments[i].a == segments[i].b) throw Error(ErrorCode::InvalidArgument, "zero-length arrangement segment");
    boxes[i] = box_of(segments[i].a, segments[i].b);
    cuts[i] = {segments[i].a, segments[i].b};
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!boxes_meet(boxes[i], boxes[j])) continue;
      SegmentIntersection x =
          segment_intersection({segments[i].a, segments[i].b}, {segments[j].a, segments[j].b});
      if (x.kind == SegmentIntersection::Kind::Point) {
        cuts[i].push_back(x.point);
        cuts[j].push_back(x.point);
      } else if (x.kind == SegmentIntersection::Kind::Overlap) {
        for (const Point2& p : {x.overlap.a, x.overlap.b}) {
          cuts[i].push_back(p);
          cuts[j].push_back(p);
        }
      }
    }
  }

  std::map<Point2, std::size_t> vid;
  auto vertex_id = [&](const Point2& p) {
    auto [it, fresh] = vid.emplace(p, A.vertices.size());
    if (fresh) A.vertices.push_back(p);
    return it->second;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_of;  // (min, max) -> half-edge
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& a = segments[i].a;
    const Point2& b = segments[i].b;
    std::vector<std::pair<Scalar, Point2>> pts;
    for (const Point2& p : cuts[i]) pts.emplace_back(param_on(p, a, b), p);
    std::sort(pts.begin(), pts.end(), [](const auto& s, const auto& t) { return s.first < t.first; });
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      if (pts[k].second == pts[k + 1].second) continue;
      std::size_t u = vertex_id(pts[k].second), v = vertex_id(pts[k + 1].second);
      auto key = std::minmax(u, v);
      if (edge_of.count(key)) continue;
      std::size_t e = A.half_edges.size();
      edge_of[key] = e;
      A.half_edges.push_back({u, v, e + 1, 0, -1, segments[i].label});
      A.half_edges.push_back({v, u, e, 0, -1, segments[i].label});
    }
  }

  // Outgoing half-edges around each vertex in counterclockwise order.
  std::vector<std::vector<std::size_t>> out(A.vertices.size());
  for (std::size_t e = 0; e < A.half_edges.size(); ++e) out[A.half_edges[e].from].push_back(e);
  std::vector<std::size_t> slot(A.half_edges.size());
  for (auto& fan : out) {
    std::sort(fan.begin(), fan.end(), [&](std::size_t s, std::size_t t) {
      const auto& hs = A.half_edges[s];
      const auto& ht = A.half_edges[t];
      return direction_compare(A.vertices[hs.to] - A.vertices[hs.from],
                               A.vertices[ht.to] - A.vertices[ht.from]) == std::weak_ordering::less;
    });
    for (std::size_t k = 0; k < fan.size(); ++k) slot[fan[k]] = k;
  }
  // Face on the left: after arriving at v along e, leave along the edge just
  // clockwise of e's twin.
  for (std::size_t e = 0; e < A.half_edges.size(); ++e) {
    std::size_t t = A.half_edges[e].twin;
    const auto& fan = out[A.half_edges[t].from];
    std::size_t k = slot[t];
    A.half_edges[e].next = fan[(k + fan.size() - 1) % fan.size()];
  }

  std::vector<bool> seen(A.half_edges.size(), false);
  std::vector<std::vector<std::size_t>> holes;
  for (std::size_t e0 = 0; e0 < A.half_edges.size(); ++e0) {
    if (seen[e0]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t e = e0; !seen[e]; e = A.half_edges[e].next) {
      seen[e] = true;
      cyc.push_back(e);
    }
    Scalar a2 = cycle_area2(A.vertices, A.half_edges, cyc);
    if (a2 > 0) {
      A.faces.push_back({std::move(cyc), {}, Point2(), a2});
    } else {
      holes.push_back(std::move(cyc));
    }
  }
  // Each clockwise cycle bounds a hole of the smallest face containing it.
  std::vector<std::size_t> order(A.faces.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t s, std::size_t t) { return A.faces[s].area2 < A.faces[t].area2; });
  std::vector<Ring> outer_rings(A.faces.size());
  for (std::size_t f = 0; f < A.faces.size(); ++f) outer_rings[f] = A.outer_ring(f);
  for (auto& cyc : holes) {
    const Point2& probe = A.vertices[A.half_edges[cyc.front()].from];
    for (std::size_t f : order) {
      if (locate_in_ring(outer_rings[f], probe) == Location::Inside) {
        A.faces[f].inner.push_back(std::move(cyc));
        break;
      }
    }
  }
  for (std::size_t f = 0; f < A.faces.size(); ++f) {
    for (std::size_t e : A.faces[f].outer) A.half_edges[e].face = static_cast<long>(f);
    for (const auto& cyc : A.faces[f].inner)
      for (std::size_t e : cyc) A.half_edges[e].face = static_cast<long>(f);
  }

  // Representative: from the midpoint of an outer edge, go inward halfway to
  // the first boundary point of the same face.
  for (std::size_t f = 0; f < A.faces.size(); ++f) {
    Arrangement::Face& F = A.faces[f];
    std::size_t e0 = F.outer.front();
    const Point2& a = A.vertices[A.half_edges[e0].from];
    const Point2& b = A.vertices[A.half_edges[e0].to];
    Point2 m = midpoint(a, b);
    Point2 normal{-(b.y - a.y), b.x - a.x};
    std::optional<Scalar> best;
    auto consider = [&](std::size_t e) {
      if (e == e0) return;
      auto hit = ray_segment_hit_param(m, normal, {A.vertices[A.half_edges[e].from], A.vertices[A.half_edges[e].to]});
      if (hit && (!best || hit->t < *best)) best = hit->t;
    };
    for (std::size_t e : F.outer) consider(e);
    for (const auto& cyc : F.inner)
      for (std::size_t e : cyc) consider(e);
    WVP_CHECK(best.has_value(), "face without an opposite boundary");
    F.rep = m + normal * (*best / 2);
  }
  return A;
}

}  // namespace wvp
