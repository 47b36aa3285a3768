#include "wvp/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace wvp::oracle {

namespace {

// Signed winding number of a closed ring around x; x must not be on the ring.
int winding(const Ring& r, const Point2& x) {
  int wn = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Point2& a = r[i];
    const Point2& b = r[(i + 1) % r.size()];
    if (a.y <= x.y) {
      if (b.y > x.y && orient_sign(a, b, x) > 0) ++wn;
    } else if (b.y <= x.y && orient_sign(a, b, x) < 0) {
      --wn;
    }
  }
  return wn;
}

bool on_ring(const Ring& r, const Point2& x) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (on_segment(x, r[i], r[(i + 1) % r.size()])) return true;
  return false;
}

}  // namespace

Location locate(const std::vector<Ring>& rings, const Point2& x) {
  for (const Ring& r : rings)
    if (on_ring(r, x)) return Location::OnBoundary;
  if (winding(rings[0], x) == 0) return Location::Outside;
  for (std::size_t i = 1; i < rings.size(); ++i)
    if (winding(rings[i], x) != 0) return Location::Outside;
  return Location::Inside;
}

bool segment_visible(const std::vector<Ring>& rings, const Point2& x, const Point2& w) {
  if (x == w) return locate(rings, x) != Location::Outside;
  for (const Ring& r : rings) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (proper_crossing({x, w}, {r[i], r[(i + 1) % r.size()]})) return false;
    }
  }
  if (locate(rings, x) == Location::Outside || locate(rings, w) == Location::Outside) return false;
  // Without proper crossings, the segment can only meet the boundary at vertices
  // lying on it or at its own endpoints; test the open pieces between contacts.
  std::vector<Scalar> ts{Scalar(0), Scalar(1)};
  for (const Ring& r : rings)
    for (const Point2& v : r)
      if (in_segment_interior(v, x, w)) ts.push_back(param_on(v, x, w));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (locate(rings, lerp(x, w, (ts[i] + ts[i + 1]) / 2)) == Location::Outside) return false;
  }
  return true;
}

namespace {

std::vector<Scalar> pq_events(const std::vector<Ring>& rings, const Point2& x,
                              const QuerySegment& pq) {
  const Point2& p = pq.p;
  const Point2& q = pq.q;
  std::vector<Scalar> ts{Scalar(0), Scalar(1)};
  bool x_on_line = orient_sign(p, q, x) == 0;
  if (x_on_line) ts.push_back(param_on(x, p, q));
  for (const Ring& r : rings) {
    for (const Point2& v : r) {
      if (v == x) continue;
      if (x_on_line) {
        if (orient_sign(p, q, v) == 0) ts.push_back(param_on(v, p, q));
        continue;
      }
      auto z = line_intersection(x, v, p, q);
      if (z) ts.push_back(param_on(*z, p, q));
    }
  }
  std::vector<Scalar> kept;
  for (auto& t : ts)
    if (t >= 0 && t <= 1) kept.push_back(t);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

}  // namespace

std::vector<VisibleInterval> visible_parts_of_pq(const std::vector<Ring>& rings, const Point2& x,
                                                 const QuerySegment& pq) {
  std::vector<Scalar> ev = pq_events(rings, x, pq);
  std::vector<VisibleInterval> out;
  auto add = [&](const Scalar& a, const Scalar& b) {
    if (!out.empty() && out.back().t1 == a) out.back().t1 = b;
    else out.push_back({a, b});
  };
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (segment_visible(rings, x, lerp(pq.p, pq.q, ev[i]))) add(ev[i], ev[i]);
    if (i + 1 < ev.size()) {
      Scalar mid = (ev[i] + ev[i + 1]) / 2;
      if (segment_visible(rings, x, lerp(pq.p, pq.q, mid))) {
        // An open piece is visible; its closure is too.
        add(ev[i], ev[i + 1]);
      }
    }
  }
  return out;
}

bool weakly_visible(const std::vector<Ring>& rings, const Point2& x, const QuerySegment& pq) {
  std::vector<Scalar> ev = pq_events(rings, x, pq);
  // Any visible point of pq makes x weakly visible; test atomic pieces first,
  // since closed contacts at single events are the rare case.
  for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
    if (segment_visible(rings, x, lerp(pq.p, pq.q, (ev[i] + ev[i + 1]) / 2))) return true;
  }
  for (const Scalar& t : ev)
    if (segment_visible(rings, x, lerp(pq.p, pq.q, t))) return true;
  return false;
}

namespace {

// Rational in [lo, hi] on a 2^24 lattice.
Scalar random_between(const Scalar& lo, const Scalar& hi, std::mt19937_64& rng) {
  constexpr long kDen = 1L << 24;
  long k = static_cast<long>(rng() % (kDen + 1));
  return lo + (hi - lo) * frac(k, kDen);
}

}  // namespace

Point2 random_interior_point(const std::vector<Ring>& rings, std::mt19937_64& rng) {
  auto [lo, hi] = bounding_box(rings);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Point2 x{random_between(lo.x, hi.x, rng), random_between(lo.y, hi.y, rng)};
    if (locate(rings, x) == Location::Inside) return x;
  }
  throw Error(ErrorCode::GenerationFailure, "could not sample an interior point");
}

std::vector<Point2> sample_points(const std::vector<Ring>& rings, std::size_t count,
                                  std::uint64_t seed) {
  std::vector<Point2> out;
  auto [lo, hi] = bounding_box(rings);
  std::size_t want_grid = count / 2;
  // Grid resolution chosen so that roughly want_grid cells fall inside.
  Scalar box_area = (hi.x - lo.x) * (hi.y - lo.y);
  Scalar inside_area = signed_area(rings[0]);
  for (std::size_t i = 1; i < rings.size(); ++i) inside_area += signed_area(rings[i]);
  double fill = to_double(inside_area / box_area);
  long g = std::max<long>(2, static_cast<long>(std::ceil(std::sqrt(want_grid / std::max(fill, 0.05)))));
  std::vector<Point2> grid;
  for (long i = 0; i < g; ++i) {
    for (long j = 0; j < g; ++j) {
      Point2 x{lo.x + (hi.x - lo.x) * frac(2 * i + 1, 2 * g), lo.y + (hi.y - lo.y) * frac(2 * j + 1, 2 * g)};
      if (locate(rings, x) == Location::Inside) grid.push_back(x);
    }
  }
  std::mt19937_64 rng(seed);
  std::shuffle(grid.begin(), grid.end(), rng);
  if (grid.size() > want_grid) grid.resize(want_grid);
  out = std::move(grid);
  while (out.size() < count) out.push_back(random_interior_point(rings, rng));
  return out;
}

std::vector<Mismatch> compare_membership(const std::vector<Ring>& rings, const QuerySegment& pq,
                                         const std::vector<Point2>& samples,
                                         const std::function<bool(const Point2&)>& claimed) {
  std::vector<Mismatch> out;
  for (const Point2& x : samples) {
    bool c = claimed(x);
    bool t = weakly_visible(rings, x, pq);
    if (c != t) out.push_back({x, c, t});
  }
  return out;
}

}  // namespace wvp::oracle
