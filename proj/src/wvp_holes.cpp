#include "wvp/wvp_holes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "wvp/oracle.hpp"

namespace wvp {

namespace {

constexpr long kPqLabel = -2;
constexpr long kLineLabel = -3;

// Arrangement labels for ring edges: offset[ring] + edge.
struct EdgeCodec {
  std::vector<long> offset;

  explicit EdgeCodec(const std::vector<Ring>& rings) {
    long acc = 0;
    for (const Ring& r : rings) {
      offset.push_back(acc);
      acc += static_cast<long>(r.size());
    }
  }
  long encode(std::size_t r, std::size_t e) const { return offset[r] + static_cast<long>(e); }
  EdgeRef decode(long label) const {
    auto it = std::upper_bound(offset.begin(), offset.end(), label);
    int r = static_cast<int>(it - offset.begin()) - 1;
    return {r, label - offset[r]};
  }
};

Scalar signed_height(const QuerySegment& pq, const Point2& x) { return cross(pq.q - pq.p, x - pq.p); }

Scalar abs_scalar(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }

void degenerate(const std::string& what) { throw Error(ErrorCode::UnsupportedDegeneracy, what); }

// Supporting line of pq clipped to a box strictly containing all rings.
Segment clipped_line(const std::vector<Ring>& rings, const QuerySegment& pq) {
  auto [lo, hi] = bounding_box(rings);
  lo = lo - Point2(1, 1);
  hi = hi + Point2(1, 1);
  Point2 d = pq.q - pq.p;
  std::optional<Scalar> tmin, tmax;
  auto slab = [&](const Scalar& o, const Scalar& dd, const Scalar& a, const Scalar& b) {
    if (sign(dd) == 0) return;
    Scalar t1 = (a - o) / dd, t2 = (b - o) / dd;
    if (t1 > t2) std::swap(t1, t2);
    if (!tmin || t1 > *tmin) tmin = t1;
    if (!tmax || t2 < *tmax) tmax = t2;
  };
  slab(pq.p.x, d.x, lo.x, hi.x);
  slab(pq.p.y, d.y, lo.y, hi.y);
  return {pq.p + d * *tmin, pq.p + d * *tmax};
}

std::size_t vertex_id(const Arrangement& A, const Point2& x) {
  for (std::size_t i = 0; i < A.vertices.size(); ++i)
    if (A.vertices[i] == x) return i;
  WVP_CHECK(false, "query endpoint missing from the arrangement");
  return 0;
}

struct RingNode {
  Point2 pt;
  VertexTag tag;
  EdgeRef src;
};

std::vector<RingNode> nodes_of(const ChordProblem& pb) {
  std::vector<RingNode> out;
  for (std::size_t i = 0; i < pb.ring.size(); ++i) out.push_back({pb.ring[i], pb.tags[i], pb.edge_source[i]});
  return out;
}

ChordProblem problem_of(const std::vector<RingNode>& nodes, const Point2& a, const Point2& b) {
  ChordProblem pb;
  for (const RingNode& n : nodes) {
    pb.ring.push_back(n.pt);
    pb.tags.push_back(n.tag);
    pb.edge_source.push_back(n.src);
  }
  const std::size_t m = nodes.size();
  bool found = false;
  for (std::size_t i = 0; i < m && !found; ++i) {
    if (nodes[i].pt == a && nodes[i + 1 == m ? 0 : i + 1].pt == b) {
      pb.chord = i;
      found = true;
    }
  }
  WVP_CHECK(found, "chord lost while opening holes");
  return pb;
}

// Index of the edge whose relative interior contains x.
std::size_t edge_containing(const std::vector<RingNode>& nodes, const Point2& x) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (in_segment_interior(x, nodes[i].pt, nodes[next_index(i, nodes.size())].pt)) return i;
  WVP_CHECK(false, "cut end not on the ring");
  return 0;
}

VertexTag tag_on(const EdgeRef& src) {
  return src.edge >= 0 ? VertexTag::on_edge(src.ring, src.edge) : VertexTag::steiner();
}

// Copy of x (a ring vertex, possibly repeated) whose interior wedge strictly
// contains direction d.
std::size_t copy_facing(const std::vector<RingNode>& nodes, const Point2& x, const Point2& d) {
  const std::size_t m = nodes.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (nodes[i].pt != x) continue;
    if (strictly_inside_ccw_wedge(nodes[next_index(i, m)].pt - x, nodes[prev_index(i, m)].pt - x, d)) return i;
  }
  WVP_CHECK(false, "diagonal leaves the ring interior");
  return 0;
}

// Near-side edges of W lying on segment c. `near` is any point of l.
std::size_t near_side_pieces(const Ring& W, const Segment& c, const Point2& near) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < W.size(); ++i) {
    const Point2& a = W[i];
    const Point2& b = W[next_index(i, W.size())];
    if (a == b || !on_segment(a, c.a, c.b) || !on_segment(b, c.a, c.b)) continue;
    if (orient_sign(a, b, near) > 0) ++count;
  }
  return count;
}

bool acyclic(std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  std::vector<std::vector<std::size_t>> out(nodes);
  std::vector<std::size_t> indeg(nodes, 0);
  for (auto [a, b] : arcs) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < nodes; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t done = 0;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    ++done;
    for (std::size_t w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return done == nodes;
}

}  // namespace

std::size_t CutDiagonalSet::cut_count() const {
  std::size_t n = 0;
  for (const auto& s : sides) n += s.cuts.size();
  return n;
}

CutDiagonalSet build_cuts(const PolygonWithHoles& P, const QuerySegment& pq) {
  require_valid(P);
  const std::vector<Ring> rings = P.rings();
  const Point2& p = pq.p;
  const Point2& q = pq.q;
  if (p == q) throw Error(ErrorCode::InvalidArgument, "degenerate query segment");
  if (point_in(rings, p) != Location::Inside || point_in(rings, q) != Location::Inside ||
      !segment_inside(rings, p, q))
    throw Error(ErrorCode::InvalidArgument, "query segment is not strictly inside the free space");
  if (line_hits_vertex(rings, p, q)) degenerate("supporting line passes through a vertex");

  CutDiagonalSet S;
  S.polygon = P;
  S.pq = pq;

  EdgeCodec codec(rings);
  std::map<Point2, std::pair<int, long>> original;
  std::vector<ArrSegment> segs;
  for (std::size_t r = 0; r < rings.size(); ++r) {
    for (std::size_t i = 0; i < rings[r].size(); ++i) {
      original[rings[r][i]] = {static_cast<int>(r), static_cast<long>(i)};
      segs.push_back({rings[r][i], rings[r][next_index(i, rings[r].size())], codec.encode(r, i)});
    }
  }
  segs.push_back({p, q, kPqLabel});
  Segment line = clipped_line(rings, pq);
  segs.push_back({line.a, line.b, kLineLabel});
  Arrangement A = build_arrangement(segs);

  std::size_t ip = vertex_id(A, p), iq = vertex_id(A, q);
  long chord_he = -1;
  for (std::size_t e = 0; e < A.half_edges.size(); ++e)
    if (A.half_edges[e].from == ip && A.half_edges[e].to == iq) chord_he = static_cast<long>(e);
  WVP_CHECK(chord_he >= 0, "query segment split in the arrangement");

  for (bool left : {true, false}) {
    std::size_t he0 = left ? static_cast<std::size_t>(chord_he) : A.half_edges[chord_he].twin;
    long f = A.half_edges[he0].face;
    WVP_CHECK(f >= 0, "query segment on the unbounded face");
    const auto& cyc = A.faces[f].outer;
    SideProblem side;
    side.left = left;
    ChordProblem& pb = side.base;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const auto& h = A.half_edges[cyc[k]];
      const auto& in = A.half_edges[cyc[(k + cyc.size() - 1) % cyc.size()]];
      const Point2& x = A.vertices[h.from];
      if (cyc[k] == he0) pb.chord = k;
      pb.ring.push_back(x);
      pb.edge_source.push_back(h.label >= 0 ? codec.decode(h.label) : EdgeRef{});
      auto it = original.find(x);
      if (it != original.end()) pb.tags.push_back(VertexTag::vertex(it->second.first, it->second.second));
      else if (h.label >= 0) pb.tags.push_back(tag_on(codec.decode(h.label)));
      else if (in.label >= 0) pb.tags.push_back(tag_on(codec.decode(in.label)));
      else pb.tags.push_back(VertexTag::steiner());
    }
    side.rings.push_back(pb.ring);

    std::vector<std::size_t> holes;
    for (const auto& inner : A.faces[f].inner) {
      long label = A.half_edges[inner.front()].label;
      WVP_CHECK(label >= 0, "inner cycle without a hole edge");
      EdgeRef ref = codec.decode(label);
      WVP_CHECK(ref.ring >= 1, "outer boundary inside a side");
      holes.push_back(static_cast<std::size_t>(ref.ring - 1));
    }
    for (std::size_t hole : holes) {
      const Ring& R = P.holes[hole].vertices;
      HoleCut c;
      c.hole = hole;
      std::size_t ties = 0;
      for (std::size_t i = 0; i < R.size(); ++i) {
        Scalar d = abs_scalar(signed_height(pq, R[i]));
        if (i == 0 || d < c.height) {
          c.height = d;
          c.anchor = i;
          ties = 1;
        } else if (d == c.height) {
          ++ties;
        }
      }
      if (ties > 1) degenerate("hole edge parallel to the query line at its nearest point");
      c.h = R[c.anchor];
      side.cuts.push_back(std::move(c));
    }
    std::sort(side.cuts.begin(), side.cuts.end(),
              [](const HoleCut& a, const HoleCut& b) { return a.height < b.height; });
    for (std::size_t i = 0; i + 1 < side.cuts.size(); ++i)
      if (side.cuts[i].height == side.cuts[i + 1].height) degenerate("two holes equally near the query line");
    side.rings.resize(1);
    for (const HoleCut& c : side.cuts) side.rings.push_back(P.holes[c.hole].vertices);
    for (HoleCut& c : side.cuts) {
      for (bool main : {true, false}) {
        BoundaryHit hit = ray_shoot(side.rings, c.h, main ? p - q : q - p);
        if (hit.vertex) degenerate("cut ends at a vertex");
        (main ? c.left : c.right) = hit.point;
      }
    }
    S.sides.push_back(std::move(side));
  }
  return S;
}

ChordProblem opened_problem(const SideProblem& side, const std::vector<bool>& flipped) {
  const ChordProblem& base = side.base;
  Point2 a = base.ring[base.chord];
  Point2 b = base.ring[next_index(base.chord, base.ring.size())];
  std::vector<RingNode> nodes = nodes_of(base);
  for (std::size_t i = 0; i < side.cuts.size(); ++i) {
    const HoleCut& c = side.cuts[i];
    const Point2& X = i < flipped.size() && flipped[i] ? c.right : c.left;
    std::size_t k = edge_containing(nodes, X);
    EdgeRef src = nodes[k].src;
    const Ring& R = side.rings[1 + i];
    const int ring_id = static_cast<int>(c.hole) + 1;
    std::vector<RingNode> ins;
    ins.push_back({X, tag_on(src), EdgeRef{}});
    for (std::size_t j = 0; j < R.size(); ++j) {
      std::size_t idx = (c.anchor + j) % R.size();
      ins.push_back({R[idx], VertexTag::vertex(ring_id, static_cast<long>(idx)), EdgeRef{ring_id, static_cast<long>(idx)}});
    }
    ins.push_back({c.h, VertexTag::vertex(ring_id, static_cast<long>(c.anchor)), EdgeRef{}});
    ins.push_back({X, tag_on(src), src});
    nodes.insert(nodes.begin() + static_cast<long>(k) + 1, ins.begin(), ins.end());
  }
  return problem_of(nodes, a, b);
}

Ring far_ring(const ChordProblem& problem, const Segment& diagonal) {
  std::vector<RingNode> nodes = nodes_of(problem);
  const Point2 a = problem.ring[problem.chord];
  const Point2 b = problem.ring[next_index(problem.chord, problem.ring.size())];
  for (const Point2& x : {diagonal.a, diagonal.b}) {
    bool present = std::any_of(nodes.begin(), nodes.end(), [&](const RingNode& n) { return n.pt == x; });
    if (present) continue;
    std::size_t k = edge_containing(nodes, x);
    nodes.insert(nodes.begin() + static_cast<long>(k) + 1, RingNode{x, tag_on(nodes[k].src), nodes[k].src});
  }
  std::size_t ia = copy_facing(nodes, diagonal.a, diagonal.b - diagonal.a);
  std::size_t ib = copy_facing(nodes, diagonal.b, diagonal.a - diagonal.b);
  const std::size_t m = nodes.size();
  auto arc = [&](std::size_t from, std::size_t to) {
    Ring r;
    for (std::size_t i = from;; i = next_index(i, m)) {
      r.push_back(nodes[i].pt);
      if (i == to) break;
    }
    return r;
  };
  Ring first = arc(ia, ib);
  bool has_chord = false;
  for (std::size_t i = ia; i != ib; i = next_index(i, m)) {
    if (nodes[i].pt == a && nodes[next_index(i, m)].pt == b) has_chord = true;
  }
  return has_chord ? arc(ib, ia) : first;
}

Region partial_wvp(const ChordProblem& problem, const Segment& diagonal) {
  WvpPolygon W = wvp_of_chord(problem);
  return region_intersection(region_of_ring(W.vertices), region_of_ring(far_ring(problem, diagonal)));
}

HolesBasicResult wvp_holes_basic(const PolygonWithHoles& P, const QuerySegment& pq) {
  CutDiagonalSet S = build_cuts(P, pq);
  HolesBasicResult R;
  R.h = P.holes.size();
  std::set<std::size_t> seen_holes;
  std::size_t activations = 0;
  for (std::size_t s = 0; s < S.sides.size(); ++s) {
    const SideProblem& side = S.sides[s];
    const std::size_t m = side.cuts.size();
    // Visible near-side pieces of every diagonal not yet crossed, restricted
    // to diagonals inside `far` when given.
    auto discover = [&](const Ring& W, const std::vector<std::size_t>& crossed, const Ring* far,
                        std::deque<SeeThroughStep>& work) {
      for (std::size_t k = 0; k < m; ++k) {
        if (std::find(crossed.begin(), crossed.end(), k) != crossed.end()) continue;
        const HoleCut& c = side.cuts[k];
        // Uncrossed diagonals are slits; only the near-side copy matters.
        if (far && near_side_pieces(*far, c.diagonal(), pq.p) == 0) continue;
        std::size_t pieces = near_side_pieces(W, c.diagonal(), pq.p);
        if (pieces == 0) continue;
        R.subsegments += pieces;
        seen_holes.insert(c.hole);
        if (!crossed.empty()) {
          const HoleCut& last = side.cuts[crossed.back()];
          WVP_CHECK(c.height > last.height, "diagonal seen through a farther diagonal");
          R.see_through.emplace_back(last.hole, c.hole);
        }
        SeeThroughStep step;
        step.side = static_cast<int>(s);
        step.crossed = crossed;
        step.crossed.push_back(k);
        step.subsegments = pieces;
        work.push_back(std::move(step));
      }
    };

    std::deque<SeeThroughStep> work;
    ChordProblem base = opened_problem(side, {});
    WvpPolygon W0 = wvp_of_chord(base);
    R.pieces.push_back(region_of_ring(W0.vertices));
    discover(W0.vertices, {}, nullptr, work);
    while (!work.empty()) {
      SeeThroughStep step = std::move(work.front());
      work.pop_front();
      if (++activations > R.h * R.h + 1) throw Error(ErrorCode::InternalInconsistency, "see-through recursion does not terminate");
      std::vector<bool> flipped(m, false);
      for (std::size_t k : step.crossed) flipped[k] = true;
      ChordProblem pb = opened_problem(side, flipped);
      WvpPolygon W = wvp_of_chord(pb);
      Ring far = far_ring(pb, side.cuts[step.crossed.back()].diagonal());
      Region piece = region_intersection(region_of_ring(W.vertices), region_of_ring(far));
      if (!piece.empty()) R.pieces.push_back(std::move(piece));
      discover(W.vertices, step.crossed, &far, work);
      R.steps.push_back(std::move(step));
    }
  }
  R.h_prime = activations;
  R.visible_holes = seen_holes.size();
  R.acyclic = acyclic(R.h, R.see_through);
  WVP_CHECK(R.acyclic, "see-through dependency graph has a cycle");
  R.region = region_union(R.pieces);
  return R;
}

}  // namespace wvp

namespace wvp {

namespace {

// The line through x with direction d leaves both ring neighbours of x on one side.
bool grazes(const HolesPreprocessed& H, std::size_t x, const Point2& d) {
  const Point2& v = H.vertices[x];
  int sa = orient_sign(v, v + d, H.vertices[H.prev[x]]);
  int sb = orient_sign(v, v + d, H.vertices[H.next[x]]);
  return sa * sb >= 0;
}

// Direction d from vertex x points strictly into the free space.
bool opens_into_free_space(const HolesPreprocessed& H, std::size_t x, const Point2& d) {
  const Point2& v = H.vertices[x];
  return strictly_inside_ccw_wedge(H.vertices[H.next[x]] - v, H.vertices[H.prev[x]] - v, d);
}

Window make_window(const std::vector<Ring>& rings, std::size_t far, long near, const Point2& t, const Point2& v) {
  BoundaryHit hit = ray_shoot(rings, v, v - t);
  return {far, near, t, {v, hit.point}};
}

// Window for constraint c if its line meets closed pq on the near side.
std::optional<Window> window_of(const HolesPreprocessed& H, const std::vector<Ring>& rings, const HoleConstraint& c,
                                const QuerySegment& pq) {
  const Point2& u = H.vertices[c.near];
  const Point2& v = H.vertices[c.far];
  int su = sign(signed_height(pq, u)), sv = sign(signed_height(pq, v));
  if (su != sv) return std::nullopt;
  auto t = line_intersection(v, u, pq.p, pq.q);
  if (!t || !on_segment(*t, pq.p, pq.q) || sign(dot(u - v, *t - v)) <= 0) return std::nullopt;
  if (!segment_inside(rings, *t, u)) return std::nullopt;
  return make_window(rings, c.far, static_cast<long>(c.near), *t, v);
}

void endpoint_windows(const HolesPreprocessed& H, const std::vector<Ring>& rings, const QuerySegment& pq,
                      std::size_t v, std::vector<Window>& out) {
  for (long e : {-1L, -2L}) {
    const Point2& t = e == -1 ? pq.p : pq.q;
    const Point2& x = H.vertices[v];
    if (!opens_into_free_space(H, v, x - t) || !segment_inside(rings, t, x)) continue;
    out.push_back(make_window(rings, v, e, t, x));
  }
}

// Sight segment from vertex v to a point m whose line avoids every other
// vertex: free iff it leaves v into the free space and crosses no edge.
bool clear_from_vertex(const HolesPreprocessed& H, const std::vector<Ring>& rings, std::size_t v, const Point2& m) {
  const Point2& x = H.vertices[v];
  if (!opens_into_free_space(H, v, m - x)) return false;
  for (const Ring& r : rings)
    for (std::size_t i = 0; i < r.size(); ++i)
      if (proper_crossing({x, m}, {r[i], r[next_index(i, r.size())]})) return false;
  return true;
}

bool weakly_visible_fast(const std::vector<Ring>& rings, const Point2& x, const QuerySegment& pq) {
  for (const Point2& t : {pq.p, pq.q, midpoint(pq.p, pq.q)})
    if (segment_inside(rings, x, t)) return true;
  return oracle::weakly_visible(rings, x, pq);
}

struct GlobalCut {
  const HoleCut* cut;
};

std::vector<GlobalCut> global_cuts(const CutDiagonalSet& S) {
  std::vector<GlobalCut> out;
  for (const auto& side : S.sides)
    for (const HoleCut& c : side.cuts) out.push_back({&c});
  return out;
}

}  // namespace

HolesPreprocessed preprocess_holes(const PolygonWithHoles& P) {
  require_valid(P);
  HolesPreprocessed H;
  H.polygon = P;
  const std::vector<Ring> rings = P.rings();
  for (const Ring& r : rings) {
    const std::size_t base = H.vertices.size();
    for (std::size_t i = 0; i < r.size(); ++i) {
      H.vertices.push_back(r[i]);
      H.prev.push_back(base + prev_index(i, r.size()));
      H.next.push_back(base + next_index(i, r.size()));
    }
  }
  const std::size_t n = H.vertices.size();
  H.fan.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      if (u == v) continue;
      Point2 d = H.vertices[v] - H.vertices[u];
      if (!grazes(H, u, d) || !opens_into_free_space(H, v, d)) continue;
      if (!segment_inside(rings, H.vertices[u], H.vertices[v])) continue;
      H.fan[v].push_back({u, v});
    }
    std::sort(H.fan[v].begin(), H.fan[v].end(), [&](const HoleConstraint& a, const HoleConstraint& b) {
      return direction_compare(H.vertices[a.near] - H.vertices[v], H.vertices[b.near] - H.vertices[v]) ==
             std::weak_ordering::less;
    });
    H.constraint_count += H.fan[v].size();
  }
  return H;
}

std::vector<std::vector<Window>> query_constraints(const HolesPreprocessed& H, const QuerySegment& pq) {
  const std::vector<Ring> rings = H.polygon.rings();
  std::vector<std::vector<Window>> out(H.vertices.size());
  for (std::size_t v = 0; v < H.vertices.size(); ++v) {
    const auto& fan = H.fan[v];
    const Point2& x = H.vertices[v];
    Point2 a = pq.p - x, b = pq.q - x;
    if (sign(cross(a, b)) < 0) std::swap(a, b);
    auto dir = [&](const HoleConstraint& c) { return H.vertices[c.near] - x; };
    auto lb = std::partition_point(fan.begin(), fan.end(), [&](const HoleConstraint& c) {
      return direction_compare(dir(c), a) == std::weak_ordering::less;
    });
    auto ub = std::partition_point(fan.begin(), fan.end(), [&](const HoleConstraint& c) {
      return direction_compare(dir(c), b) != std::weak_ordering::greater;
    });
    auto scan = [&](auto from, auto to) {
      for (auto it = from; it != to; ++it)
        if (auto w = window_of(H, rings, *it, pq)) out[v].push_back(std::move(*w));
    };
    if (direction_compare(a, b) != std::weak_ordering::greater) {
      scan(lb, ub);
    } else {
      scan(lb, fan.end());
      scan(fan.begin(), ub);
    }
    endpoint_windows(H, rings, pq, v, out[v]);
  }
  return out;
}

std::vector<std::vector<Window>> query_constraints_naive(const HolesPreprocessed& H, const QuerySegment& pq) {
  const std::vector<Ring> rings = H.polygon.rings();
  std::vector<std::vector<Window>> out(H.vertices.size());
  for (std::size_t v = 0; v < H.vertices.size(); ++v) {
    for (const HoleConstraint& c : H.fan[v])
      if (auto w = window_of(H, rings, c, pq)) out[v].push_back(std::move(*w));
    endpoint_windows(H, rings, pq, v, out[v]);
  }
  return out;
}

std::vector<LabeledInterval> sweep_visible_parts(const HolesPreprocessed& H, const CutDiagonalSet& cuts,
                                                 std::size_t v) {
  const std::vector<Ring> rings = H.polygon.rings();
  const QuerySegment& pq = cuts.pq;
  const Point2& x = H.vertices[v];
  const int side = sign(signed_height(pq, x));
  // Event parameters: lines through v and every other vertex or cut end.
  std::vector<Scalar> ts{Scalar(0), Scalar(1)};
  auto add_event = [&](const Point2& y) {
    if (y == x) return;
    auto t = line_intersection(x, y, pq.p, pq.q);
    if (!t) return;
    Scalar s = param_on(*t, pq.p, pq.q);
    if (s > 0 && s < 1) ts.push_back(s);
  };
  for (const Point2& y : H.vertices) add_event(y);
  std::vector<GlobalCut> gc = global_cuts(cuts);
  for (const GlobalCut& g : gc) add_event(g.cut->left);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::vector<LabeledInterval> out;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Point2 m = lerp(pq.p, pq.q, (ts[i] + ts[i + 1]) / 2);
    if (!clear_from_vertex(H, rings, v, m)) continue;
    long label = -1;
    const Scalar* best = nullptr;
    for (std::size_t g = 0; g < gc.size(); ++g) {
      const HoleCut& c = *gc[g].cut;
      if (sign(signed_height(pq, c.h)) != side) continue;
      if (!proper_crossing({m, x}, c.diagonal())) continue;
      if (!best || c.height > *best) {
        best = &c.height;
        label = static_cast<long>(g);
      }
    }
    if (!out.empty() && out.back().t1 == ts[i] && out.back().diagonal == label) {
      out.back().t1 = ts[i + 1];
    } else {
      out.push_back({ts[i], ts[i + 1], label});
    }
  }
  return out;
}

ConstraintArrangement build_constraint_arrangement(const HolesPreprocessed& H, const CutDiagonalSet& cuts,
                                                   const std::vector<std::vector<Window>>& windows) {
  const std::vector<Ring> rings = H.polygon.rings();
  const QuerySegment& pq = cuts.pq;
  ConstraintArrangement C;
  std::vector<ArrSegment> segs;
  for (const Ring& r : rings)
    for (std::size_t i = 0; i < r.size(); ++i) segs.push_back({r[i], r[next_index(i, r.size())], -1});
  std::vector<GlobalCut> gc = global_cuts(cuts);
  C.crossing.assign(gc.size(), 0);
  for (const auto& per : windows) {
    for (const Window& w : per) {
      segs.push_back({w.segment.a, w.segment.b, static_cast<long>(C.windows++)});
      for (std::size_t g = 0; g < gc.size(); ++g)
        if (proper_crossing({w.t, w.segment.b}, gc[g].cut->diagonal())) ++C.crossing[g];
    }
  }
  C.arrangement = build_arrangement(segs);
  const std::size_t F = C.arrangement.faces.size();
  C.free.assign(F, false);
  C.visible.assign(F, false);
  for (std::size_t f = 0; f < F; ++f) {
    const Point2& rep = C.arrangement.faces[f].rep;
    C.free[f] = point_in(rings, rep) == Location::Inside;
    C.visible[f] = C.free[f] && weakly_visible_fast(rings, rep, pq);
  }
  return C;
}

Region extract_boundary(const ConstraintArrangement& C) { return region_from_faces(C.arrangement, C.visible); }

HolesImprovedResult wvp_holes_improved(const HolesPreprocessed& H, const QuerySegment& pq) {
  CutDiagonalSet cuts = build_cuts(H.polygon, pq);
  HolesImprovedResult R;
  R.h = H.polygon.holes.size();
  auto windows = query_constraints(H, pq);
  for (const auto& per : windows) R.constraints += per.size();
  std::vector<GlobalCut> gc = global_cuts(cuts);
  std::set<std::size_t> holes;
  for (std::size_t v = 0; v < H.vertices.size(); ++v)
    for (const LabeledInterval& iv : sweep_visible_parts(H, cuts, v))
      if (iv.diagonal >= 0) holes.insert(gc[iv.diagonal].cut->hole);
  R.visible_holes = holes.size();
  R.arrangement = build_constraint_arrangement(H, cuts, windows);
  R.cells = static_cast<std::size_t>(std::count(R.arrangement.free.begin(), R.arrangement.free.end(), true));
  R.visible_cells = static_cast<std::size_t>(std::count(R.arrangement.visible.begin(), R.arrangement.visible.end(), true));
  R.region = extract_boundary(R.arrangement);
  R.k = region_complexity(R.region);
  return R;
}

}  // namespace wvp
