#include "wvp/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace wvp {

namespace {

constexpr long kGrid = 1000000;
constexpr int kRetries = 200;

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Rational in [0, 1] on a 2^20 lattice.
Scalar unit(std::mt19937_64& rng) { return frac(uniform(rng, 0, 1L << 20), 1L << 20); }

bool any_three_collinear(const std::vector<Point2>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (orient_sign(pts[i], pts[j], pts[k]) == 0) return true;
  return false;
}

// Chain from a towards b through pts (a included, b excluded). All points lie in
// a convex region that the chosen split line cuts into two convex parts.
void chain(const Point2& a, const Point2& b, std::vector<Point2> pts, std::mt19937_64& rng,
           Ring& out) {
  if (pts.empty()) {
    out.push_back(a);
    return;
  }
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    const Point2 s = pts[uniform(rng, 0, static_cast<long>(pts.size()) - 1)];
    Scalar t = (unit(rng) * 98 + 1) / 100;  // strictly inside ab
    Point2 r = lerp(a, b, t);
    int side_a = orient_sign(s, r, a);
    if (side_a == 0) continue;
    std::vector<Point2> near_a, near_b;
    bool degenerate = false;
    for (const Point2& x : pts) {
      if (x == s) continue;
      int o = orient_sign(s, r, x);
      if (o == 0) {
        degenerate = true;
        break;
      }
      (o == side_a ? near_a : near_b).push_back(x);
    }
    if (degenerate) continue;
    chain(a, s, std::move(near_a), rng, out);
    chain(s, b, std::move(near_b), rng, out);
    return;
  }
  throw Error(ErrorCode::GenerationFailure, "space partitioning found no split line");
}

Ring space_partition(std::vector<Point2> pts, std::mt19937_64& rng) {
  std::shuffle(pts.begin(), pts.end(), rng);
  const Point2 a = pts[0], b = pts[1];
  std::vector<Point2> left, right;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    (orient_sign(a, b, pts[i]) > 0 ? left : right).push_back(pts[i]);
  }
  Ring ring;
  chain(a, b, right, rng, ring);
  chain(b, a, left, rng, ring);
  if (signed_area(ring) < 0) std::reverse(ring.begin(), ring.end());
  return ring;
}

std::vector<Point2> random_points(std::size_t n, std::mt19937_64& rng) {
  std::set<std::pair<long, long>> seen;
  std::vector<Point2> pts;
  while (pts.size() < n) {
    long x = uniform(rng, 0, kGrid), y = uniform(rng, 0, kGrid);
    if (seen.insert({x, y}).second) pts.emplace_back(x, y);
  }
  return pts;
}

// Rational point on the circle of radius R about c at angle close to phi.
Point2 circle_point(const Point2& c, long R, double phi) {
  double tt = std::tan(phi / 2);
  Scalar t = frac(static_cast<long>(std::llround(tt * 100000)), 100000);
  Scalar d = 1 + t * t;
  return {c.x + R * (1 - t * t) / d, c.y + R * (2 * t) / d};
}

PolygonWithHoles from_ints(const std::vector<std::pair<long, long>>& v) {
  PolygonWithHoles P;
  for (auto [x, y] : v) P.outer.vertices.emplace_back(x, y);
  return P;
}

}  // namespace

SimplePolygon random_simple_polygon(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 vertices");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<Point2> pts = random_points(n, rng);
    if (any_three_collinear(pts)) continue;
    SimplePolygon P(space_partition(pts, rng));
    if (!validate(P)) return P;
  }
  throw Error(ErrorCode::GenerationFailure, "random simple polygon generation failed");
}

PolygonWithHoles random_polygon_with_holes(std::size_t outer_n, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5bd1e995u);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    PolygonWithHoles P;
    P.outer = random_simple_polygon(outer_n, rng());
    auto [lo, hi] = bounding_box({P.outer.vertices});
    long span = static_cast<long>(to_double(std::min(Scalar(hi.x - lo.x), Scalar(hi.y - lo.y))));
    int placed_tries = 0;
    while (P.holes.size() < h && placed_tries++ < 400) {
      Point2 c{lo.x + (hi.x - lo.x) * unit(rng), lo.y + (hi.y - lo.y) * unit(rng)};
      c = {Scalar(static_cast<long>(c.x.get_d())), Scalar(static_cast<long>(c.y.get_d()))};
      long R = std::max<long>(span / 40, 2) + uniform(rng, 0, std::max<long>(span / 25, 2));
      std::size_t k = static_cast<std::size_t>(uniform(rng, 3, 5));
      Ring hole;
      double phase = unit(rng).get_d() * 2 * std::numbers::pi;
      for (std::size_t i = 0; i < k; ++i) {
        double phi = phase + 2 * std::numbers::pi * (static_cast<double>(i) + 0.3 * unit(rng).get_d()) / k;
        hole.push_back({c.x + static_cast<long>(std::lround(R * std::cos(phi))),
                        c.y + static_cast<long>(std::lround(R * std::sin(phi)))});
      }
      std::reverse(hole.begin(), hole.end());  // clockwise
      PolygonWithHoles trial = P;
      trial.holes.emplace_back(hole);
      if (!validate(trial) && !check_general_position(trial)) P = std::move(trial);
    }
    if (P.holes.size() == h) return P;
  }
  throw Error(ErrorCode::GenerationFailure, "could not place holes");
}

SimplePolygon convex_polygon(std::size_t k, long radius) {
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 vertices");
  Ring r;
  for (std::size_t i = 0; i < k; ++i) {
    double phi = -std::numbers::pi + (2.0 * static_cast<double>(i) + 1.0) * std::numbers::pi / k;
    r.push_back(circle_point({0, 0}, radius, phi));
  }
  SimplePolygon P(std::move(r));
  require_valid(P);
  return P;
}

PolygonWithHoles perturb(const PolygonWithHoles& P, std::uint64_t seed, const Scalar& eps) {
  std::mt19937_64 rng(seed);
  Scalar e = eps;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    PolygonWithHoles Q = P;
    auto jitter = [&](Ring& r) {
      for (Point2& v : r) v = {v.x + e * (2 * unit(rng) - 1), v.y + e * (2 * unit(rng) - 1)};
    };
    jitter(Q.outer.vertices);
    for (auto& h : Q.holes) jitter(h.vertices);
    if (validate(Q)) {
      e /= 2;
      continue;
    }
    if (!check_general_position(Q)) return Q;
  }
  throw Error(ErrorCode::GenerationFailure, "perturbation did not reach general position");
}

QuerySegment random_query(const std::vector<Ring>& rings, std::mt19937_64& rng) {
  auto [lo, hi] = bounding_box(rings);
  Scalar diag = std::max(hi.x - lo.x, hi.y - lo.y);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Point2 p{lo.x + (hi.x - lo.x) * unit(rng), lo.y + (hi.y - lo.y) * unit(rng)};
    if (point_in(rings, p) != Location::Inside) continue;
    Scalar len = diag * (unit(rng) * 20 + 1) / 100;
    Point2 d{2 * unit(rng) - 1, 2 * unit(rng) - 1};
    if (d.x == 0 && d.y == 0) continue;
    Scalar scale = len / std::max(abs(d.x), abs(d.y));
    Point2 q = p + d * scale;
    if (point_in(rings, q) != Location::Inside) continue;
    if (!segment_inside(rings, p, q) || line_hits_vertex(rings, p, q)) continue;
    return {p, q};
  }
  throw Error(ErrorCode::GenerationFailure, "could not place a query segment");
}

SimplePolygon notch_square() {
  return perturb(from_ints({{0, 0}, {12, 0}, {12, 12}, {10, 12}, {10, 6}, {2, 6}, {2, 12}, {0, 12}}),
                 11, frac(1, 20))
      .outer;
}

SimplePolygon two_notch_square() {
  return perturb(from_ints({{0, 0}, {5, 0}, {5, 4}, {7, 4}, {7, 0}, {12, 0}, {12, 12}, {7, 12},
                            {7, 8}, {5, 8}, {5, 12}, {0, 12}}),
                 12, frac(1, 20))
      .outer;
}

SimplePolygon comb_polygon(std::size_t teeth) {
  std::vector<std::pair<long, long>> v{{0, 0}, {4 * static_cast<long>(teeth) - 2, 0}};
  for (long i = static_cast<long>(teeth) - 1; i >= 0; --i) {
    v.push_back({4 * i + 2, 10});
    v.push_back({4 * i, 10});
    if (i > 0) {
      v.push_back({4 * i, 2});
      v.push_back({4 * i - 2, 2});
    }
  }
  return perturb(from_ints(v), 13 + teeth, frac(1, 20)).outer;
}

SimplePolygon spiral_polygon(std::size_t turns) {
  const std::size_t steps = 8 * turns;
  Ring outer, inner;
  for (std::size_t k = 0; k <= steps; ++k) {
    double th = 2 * std::numbers::pi * static_cast<double>(k) / 8.0;
    double r = 10.0 + 3.0 * static_cast<double>(k);
    outer.push_back({std::llround(r * std::cos(th) * 10), std::llround(r * std::sin(th) * 10)});
    inner.push_back({std::llround((r - 1.5) * std::cos(th) * 10), std::llround((r - 1.5) * std::sin(th) * 10)});
  }
  Ring ring = outer;
  ring.insert(ring.end(), inner.rbegin(), inner.rend());
  if (signed_area(ring) < 0) std::reverse(ring.begin(), ring.end());
  PolygonWithHoles P;
  P.outer = SimplePolygon(ring);
  return perturb(P, 17 + turns, frac(1, 10)).outer;
}

SimplePolygon padded_fixed_k(std::size_t chamber) {
  if (chamber < 3) throw Error(ErrorCode::InvalidArgument, "chamber needs at least 3 vertices");
  std::vector<std::pair<long, long>> head{{0, 0}, {20, 0}, {20, 10}, {18, 10}, {18, 22}, {4, 22}, {4, 30}};
  std::vector<std::pair<long, long>> tail{{2, 30}, {2, 20}, {16, 20}, {16, 10}, {0, 10}};
  PolygonWithHoles frame = from_ints(head);
  // Corridor walls get jittered; the chamber arc is exact and already in
  // general position.
  Ring arc;
  for (std::size_t i = 0; i < chamber; ++i) {
    double deg = -80.0 + 340.0 * static_cast<double>(i) / static_cast<double>(chamber - 1);
    Point2 u = circle_point({0, 0}, 10, (deg - 90.0) * std::numbers::pi / 180.0);
    arc.push_back({Scalar(3) - u.y, Scalar(40) + u.x});
  }
  std::mt19937_64 rng(23 + chamber);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Ring ring;
    auto add = [&](long x, long y) {
      ring.push_back({Scalar(x) + frac(uniform(rng, -999, 999), 50000),
                      Scalar(y) + frac(uniform(rng, -999, 999), 50000)});
    };
    for (auto [x, y] : head) add(x, y);
    ring.insert(ring.end(), arc.begin(), arc.end());
    for (auto [x, y] : tail) add(x, y);
    SimplePolygon P(ring);
    if (!validate(P) && !check_general_position(P) &&
        !line_hits_vertex({ring}, padded_fixed_k_query().p, padded_fixed_k_query().q)) {
      return P;
    }
  }
  throw Error(ErrorCode::GenerationFailure, "padded family instance");
}

PolygonWithHoles staircase_holes() {
  PolygonWithHoles P = from_ints({{0, 0}, {150, 0}, {150, 110}, {0, 110}});
  // Small triangles climbing to the right; each cut spans the room to the left
  // wall, so the lower diagonals are seen both directly and through each other.
  for (long k = 0; k < 3; ++k) {
    long x = 60 + 15 * k, y = 20 + 10 * k;
    P.holes.push_back(SimplePolygon(Ring{{Scalar(x), Scalar(y)}, {Scalar(x - 3), Scalar(y + 4)}, {Scalar(x + 4), Scalar(y + 3)}}));
  }
  return perturb(P, 31, frac(1, 20));
}

QuerySegment staircase_query() { return {{Scalar(40), Scalar(10)}, {Scalar(80), Scalar(10)}}; }

QuerySegment padded_fixed_k_query() { return {{Scalar(5), Scalar(2)}, {Scalar(13), Scalar(3)}}; }

std::vector<CorpusEntry> random_simple_corpus(std::size_t count, std::size_t n_min,
                                              std::size_t n_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, static_cast<long>(n_min), static_cast<long>(n_max)));
    std::uint64_t s = rng();
    PolygonWithHoles P;
    P.outer = random_simple_polygon(n, s);
    out.push_back({"rand-n" + std::to_string(n) + "-" + std::to_string(i), "random", P});
  }
  return out;
}

std::vector<CorpusEntry> random_holes_corpus(std::size_t count, std::size_t h_min,
                                             std::size_t h_max, std::size_t outer_n,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t h = static_cast<std::size_t>(uniform(rng, static_cast<long>(h_min), static_cast<long>(h_max)));
    std::uint64_t s = rng();
    out.push_back({"holes-h" + std::to_string(h) + "-" + std::to_string(i), "random-holes",
                   random_polygon_with_holes(outer_n, h, s)});
  }
  return out;
}

std::vector<CorpusEntry> pedagogical_set() {
  std::vector<CorpusEntry> out;
  auto simple = [&](std::string id, std::string fam, SimplePolygon P) {
    PolygonWithHoles W;
    W.outer = std::move(P);
    out.push_back({std::move(id), std::move(fam), std::move(W)});
  };
  for (std::size_t k : {3, 5, 8, 12}) simple("convex-" + std::to_string(k), "convex", convex_polygon(k));
  simple("notch-square", "notch", notch_square());
  simple("two-notch-square", "notch", two_notch_square());
  simple("comb-3", "comb", comb_polygon(3));
  simple("spiral-2", "spiral", spiral_polygon(2));
  simple("padded-8", "padded", padded_fixed_k(8));
  out.push_back({"staircase", "staircase", staircase_holes()});
  return out;
}

}  // namespace wvp
