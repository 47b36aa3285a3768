#include "wvp/triangulation.hpp"

namespace wvp {

bool Triangulation::contains(std::size_t t, const Point2& x) const {
  const auto& c = tris[t];
  return orient_sign(ring[c[0]], ring[c[1]], x) >= 0 && orient_sign(ring[c[1]], ring[c[2]], x) >= 0 &&
         orient_sign(ring[c[2]], ring[c[0]], x) >= 0;
}

namespace {

class EarClipper {
 public:
  EarClipper(const Ring& r, std::vector<std::size_t>& prev, std::vector<std::size_t>& next,
             std::vector<bool>& active)
      : r_(r), prev_(prev), next_(next), active_(active) {}

  // Classic diagonal test: local cone containment at both ends plus no edge
  // crossing. Edges touching ac exactly at a or c's location are allowed, which
  // is what makes pinched (weakly simple) rings work: the two copies of a slit
  // point have disjoint cones.
  bool diagonal(std::size_t a, std::size_t c) const {
    return in_cone(a, c) && in_cone(c, a) && diagonalie(a, c);
  }

  bool ear(std::size_t b) const {
    std::size_t a = prev_[b], c = next_[b];
    return orient_sign(r_[a], r_[b], r_[c]) > 0 && diagonal(a, c);
  }

 private:
  bool in_cone(std::size_t a, std::size_t c) const {
    const Point2& A = r_[a];
    const Point2& C = r_[c];
    const Point2& a0 = r_[prev_[a]];
    const Point2& a1 = r_[next_[a]];
    if (orient_sign(a0, A, a1) >= 0) return orient_sign(A, C, a0) > 0 && orient_sign(C, A, a1) > 0;
    return !(orient_sign(A, C, a1) >= 0 && orient_sign(C, A, a0) >= 0);
  }

  bool diagonalie(std::size_t a, std::size_t c) const {
    Segment ac{r_[a], r_[c]};
    std::size_t e = c;
    do {
      std::size_t f = next_[e];
      if (e != a && e != c && f != a && f != c) {
        auto x = segment_intersection(ac, {r_[e], r_[f]});
        if (x.kind == SegmentIntersection::Kind::Overlap) return false;
        if (x.kind == SegmentIntersection::Kind::Point && x.point != ac.a && x.point != ac.b) {
          return false;
        }
      }
      e = f;
    } while (e != c);
    return true;
  }

  const Ring& r_;
  std::vector<std::size_t>& prev_;
  std::vector<std::size_t>& next_;
  std::vector<bool>& active_;
};

}  // namespace

Triangulation triangulate(const Ring& ring) {
  const std::size_t n = ring.size();
  if (n < 3) throw Error(ErrorCode::DegenerateVertex, "ring with fewer than 3 vertices");
  Triangulation T;
  T.ring = ring;
  T.straight.assign(n, false);
  T.vertex_tris.assign(n, {});

  std::vector<std::size_t> prev(n), next(n);
  std::vector<bool> active(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    prev[i] = prev_index(i, n);
    next[i] = next_index(i, n);
  }
  std::size_t count = n;
  auto unlink = [&](std::size_t i) {
    next[prev[i]] = next[i];
    prev[next[i]] = prev[i];
    active[i] = false;
    --count;
  };

  for (bool changed = true; changed && count > 3;) {
    changed = false;
    for (std::size_t i = 0; i < n && count > 3; ++i) {
      if (!active[i]) continue;
      const Point2& a = ring[prev[i]];
      const Point2& c = ring[next[i]];
      if (ring[i] == a || ring[i] == c) {
        throw Error(ErrorCode::DegenerateVertex, "repeated consecutive vertex in ring");
      }
      if (orient_sign(a, ring[i], c) != 0) continue;
      if (dot(ring[i] - a, c - ring[i]) < 0) {
        throw Error(ErrorCode::UnsupportedDegeneracy, "zero-angle spike in ring");
      }
      T.straight[i] = true;
      unlink(i);
      changed = true;
    }
  }

  EarClipper clip(ring, prev, next, active);
  std::vector<long> owner(n, -1);  // triangle owning edge i -> next[i]
  std::size_t start = 0;
  while (!active[start]) ++start;

  std::vector<bool> is_ear(n, false);
  for (std::size_t i = 0; i < n; ++i)
    if (active[i]) is_ear[i] = clip.ear(i);

  auto link = [&](std::size_t t, int k, long s) {
    T.nbr[t][k] = s;
    if (s >= 0) T.nbr[s][2] = static_cast<long>(t);
  };

  while (count > 3) {
    std::size_t b = start;
    bool found = false;
    for (std::size_t steps = 0; steps < count; ++steps, b = next[b]) {
      if (is_ear[b]) {
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::InternalInconsistency, "no ear found while triangulating");
    std::size_t a = prev[b], c = next[b];
    std::size_t t = T.tris.size();
    T.tris.push_back({a, b, c});
    T.nbr.push_back({-1, -1, -1});
    link(t, 0, owner[a]);
    link(t, 1, owner[b]);
    owner[a] = static_cast<long>(t);
    unlink(b);
    start = a;
    is_ear[a] = clip.ear(a);
    is_ear[c] = clip.ear(c);
  }
  {
    std::size_t a = start, b = next[a], c = next[b];
    WVP_CHECK(orient_sign(ring[a], ring[b], ring[c]) > 0, "final triangle is not counterclockwise");
    std::size_t t = T.tris.size();
    T.tris.push_back({a, b, c});
    T.nbr.push_back({-1, -1, -1});
    long oa = owner[a], ob = owner[b], oc = owner[c];
    T.nbr[t][0] = oa;
    if (oa >= 0) T.nbr[oa][2] = static_cast<long>(t);
    T.nbr[t][1] = ob;
    if (ob >= 0) T.nbr[ob][2] = static_cast<long>(t);
    T.nbr[t][2] = oc;
    if (oc >= 0) T.nbr[oc][2] = static_cast<long>(t);
  }

  for (std::size_t t = 0; t < T.tris.size(); ++t)
    for (std::size_t k : T.tris[t]) T.vertex_tris[k].push_back(t);

  for (std::size_t i = 0; i < n; ++i) {
    if (!T.straight[i]) continue;
    std::size_t a = i, b = i;
    while (T.straight[a]) a = prev_index(a, n);
    while (T.straight[b]) b = next_index(b, n);
    for (std::size_t t : T.vertex_tris[a]) {
      const auto& c = T.tris[t];
      for (int k = 0; k < 3; ++k) {
        if (c[k] == a && c[(k + 1) % 3] == b && T.nbr[t][k] < 0) T.vertex_tris[i] = {t};
      }
    }
    WVP_CHECK(T.vertex_tris[i].size() == 1, "straight vertex without carrying triangle");
  }
  return T;
}

}  // namespace wvp
