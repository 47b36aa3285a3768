#include "wvp/wvp_simple.hpp"

#include <algorithm>
#include <memory>

#include "chord_passes.hpp"

namespace wvp {

void canonicalize(WvpPolygon& W) {
  Ring& v = W.vertices;
  std::vector<VertexTag>& t = W.tags;
  if (t.size() != v.size()) t.assign(v.size(), VertexTag::steiner());
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
      const std::size_t n = v.size();
      const Point2& a = v[prev_index(i, n)];
      const Point2& c = v[next_index(i, n)];
      bool dup = v[i] == c;
      bool straight = !dup && orient_sign(a, v[i], c) == 0 && dot(v[i] - a, c - v[i]) > 0;
      if (dup || straight) {
        v.erase(v.begin() + static_cast<long>(i));
        t.erase(t.begin() + static_cast<long>(i));
        changed = true;
        --i;
      }
    }
  }
  const std::size_t n = v.size();
  if (n == 0) return;
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      const Point2& x = v[(s + k) % n];
      const Point2& y = v[(best + k) % n];
      if (x == y) continue;
      if (x < y) best = s;
      break;
    }
  }
  std::rotate(v.begin(), v.begin() + static_cast<long>(best), v.end());
  std::rotate(t.begin(), t.begin() + static_cast<long>(best), t.end());
}

bool same_polygon(const WvpPolygon& a, const WvpPolygon& b) {
  WvpPolygon x = a, y = b;
  canonicalize(x);
  canonicalize(y);
  return x.vertices == y.vertices;
}

namespace detail {

CutRing::CutRing(const ChordProblem& pb) : original_(pb.ring.size()) {
  const std::size_t m = pb.ring.size();
  const std::size_t start = next_index(pb.chord, m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t j = (start + i) % m;
    Node nd;
    nd.pt = pb.ring[j];
    nd.tag = pb.tags.empty() ? VertexTag::steiner() : pb.tags[j];
    nd.src = pb.edge_source.empty() ? EdgeRef{} : pb.edge_source[j];
    nd.prev = static_cast<long>(prev_index(i, m));
    nd.next = static_cast<long>(next_index(i, m));
    nodes.push_back(std::move(nd));
  }
}

std::vector<long> CutRing::order() const {
  std::vector<long> out;
  long v = 0;
  do {
    out.push_back(v);
    v = nodes[v].next;
  } while (v != 0);
  return out;
}

Ring CutRing::ring_of(const std::vector<long>& ids) const {
  Ring r;
  r.reserve(ids.size());
  for (long id : ids) r.push_back(nodes[id].pt);
  return r;
}

std::pair<long, Point2> CutRing::shoot(long w, const Point2& dir) const {
  std::vector<long> ids = order();
  BoundaryHit h = ray_shoot(ring_of(ids), nodes[w].pt, dir);
  return {ids[h.edge], h.point};
}

long CutRing::insert_after(long a, Point2 pt, VertexTag tag, EdgeRef src) {
  Node nd;
  nd.pt = std::move(pt);
  nd.tag = tag;
  nd.src = src;
  nd.prev = a;
  nd.next = nodes[a].next;
  long id = static_cast<long>(nodes.size());
  nodes[nodes[a].next].prev = id;
  nodes[a].next = id;
  nodes.push_back(std::move(nd));
  return id;
}

std::vector<long> CutRing::remove_between(long a, long b) {
  std::vector<long> removed;
  for (long v = nodes[a].next; v != b; v = nodes[v].next) {
    WVP_CHECK(!is_endpoint(v), "cut would remove an endpoint of the viewing segment");
    WVP_CHECK(v != a, "cut range wrapped around the ring");
    nodes[v].alive = false;
    removed.push_back(v);
  }
  nodes[a].next = b;
  nodes[b].prev = a;
  return removed;
}

WvpPolygon CutRing::result() const {
  WvpPolygon W;
  for (long id : order()) {
    W.vertices.push_back(nodes[id].pt);
    W.tags.push_back(nodes[id].tag);
  }
  canonicalize(W);
  return W;
}

PassTree scratch_tree(const CutRing& cr, long root_node, ChordStats* stats) {
  std::vector<long> ids = cr.order();
  // Rotate so the root is last and the ring still starts right after it.
  auto it = std::find(ids.begin(), ids.end(), root_node);
  std::rotate(ids.begin(), it + 1, ids.end());
  auto spt = std::make_shared<ShortestPathTree>(compute_spt(triangulate(cr.ring_of(ids)), cr.nodes[root_node].pt));
  if (stats) stats->spt_vertices += ids.size();
  auto pos_of = std::make_shared<std::vector<long>>(cr.nodes.size(), kNone);
  for (std::size_t i = 0; i < ids.size(); ++i) (*pos_of)[ids[i]] = static_cast<long>(i);
  const long root_pos = static_cast<long>(ids.size()) - 1;
  PassTree t;
  t.parent = [spt, ids, pos_of](long v) {
    long p = spt->parent[(*pos_of)[v]];
    return p == kRoot ? kRoot : ids[p];
  };
  t.children = [spt, ids, pos_of, root_pos](long v) {
    const auto& ch = v == kRoot ? spt->root_children : spt->children[(*pos_of)[v]];
    std::vector<long> out;
    for (std::size_t c : ch)
      if (static_cast<long>(c) != root_pos) out.push_back(ids[c]);
    return out;
  };
  return t;
}

namespace {

VertexTag tag_for_cut(const EdgeRef& src) {
  return src.edge >= 0 ? VertexTag::on_edge(src.ring, src.edge) : VertexTag::steiner();
}

bool is_descendant(const PassTree& t, long x, long w) {
  for (long u = x; u != kRoot; u = t.parent(u))
    if (u == w) return true;
  return false;
}

}  // namespace

void run_pass(CutRing& cr, long root_node, bool right_side, const PassTree& tree, ChordStats* stats) {
  std::vector<long> stack;
  auto push_children = [&](long v) {
    std::vector<long> ch = tree.children(v);
    // Pass 1 visits children in increasing position, pass 2 in decreasing.
    if (right_side) {
      for (auto c = ch.rbegin(); c != ch.rend(); ++c) stack.push_back(*c);
    } else {
      for (long c : ch) stack.push_back(c);
    }
  };
  push_children(kRoot);
  while (!stack.empty()) {
    long w = stack.back();
    stack.pop_back();
    if (w == root_node || !cr.nodes[w].alive) continue;
    if (!cr.is_endpoint(w) && tree.prune && tree.prune(w)) continue;
    if (stats) ++stats->visited;
    if (tree.on_visit) tree.on_visit(w);
    if (cr.is_endpoint(w)) {  // chord endpoints never cut
      push_children(w);
      continue;
    }
    long pw = tree.parent(w);
    const Point2& u = pw == kRoot ? cr.nodes[root_node].pt : cr.nodes[pw].pt;
    const Point2& wp = cr.nodes[w].pt;
    const Point2& a = cr.nodes[cr.nodes[w].prev].pt;
    const Point2& b = cr.nodes[cr.nodes[w].next].pt;
    int want = right_side ? -1 : 1;
    bool cut;
    if (a == u || b == u) {
      // The path reaches w along a boundary edge, so only the other neighbour
      // decides, and the ray continues into the interior only past a reflex w.
      const Point2& other = a == u ? b : a;
      cut = orient_sign(a, wp, b) < 0 && orient_sign(u, wp, other) == want;
    } else {
      cut = orient_sign(u, wp, a) == want && orient_sign(u, wp, b) == want;
    }
    if (!cut) {
      push_children(w);
      continue;
    }
    auto [k, z] = cr.shoot(w, wp - u);
    long k_next = cr.nodes[k].next;
    std::vector<long> removed;
    if (right_side) {
      EdgeRef src = cr.nodes[k].src;
      removed = cr.remove_between(w, k_next);
      if (z != cr.nodes[k_next].pt) cr.insert_after(w, z, tag_for_cut(src), src);
      cr.nodes[w].src = EdgeRef{};
    } else {
      removed = cr.remove_between(k, w);
      if (z != cr.nodes[k].pt) {
        cr.insert_after(k, z, tag_for_cut(cr.nodes[k].src), EdgeRef{});
      } else {
        cr.nodes[k].src = EdgeRef{};
      }
    }
    for (long x : removed) {
      if (static_cast<std::size_t>(x) >= cr.original_size()) continue;
      WVP_CHECK(is_descendant(tree, x, w), "cut removed a vertex outside the cutting vertex's subtree");
    }
    if (stats) ++stats->cuts;
  }
}

}  // namespace detail

WvpPolygon wvp_of_chord(const ChordProblem& problem, ChordStats* stats) {
  if (problem.ring.size() < 3) throw Error(ErrorCode::InvalidArgument, "ring too small");
  detail::CutRing cr(problem);
  detail::run_pass(cr, cr.first_root(), true, detail::scratch_tree(cr, cr.first_root(), stats), stats);
  detail::run_pass(cr, 0, false, detail::scratch_tree(cr, 0, stats), stats);
  return cr.result();
}

WvpPolygon wvp_of_chord(const SimplePolygon& P, std::size_t edge, ChordStats* stats) {
  ChordProblem pb;
  pb.ring = P.vertices;
  for (std::size_t i = 0; i < P.size(); ++i) {
    pb.tags.push_back(VertexTag::vertex(0, static_cast<long>(i)));
    pb.edge_source.push_back({0, static_cast<long>(i)});
  }
  pb.chord = edge;
  return wvp_of_chord(pb, stats);
}

ChordProblem chord_problem_from_split(const SplitResult& split, bool left, const QuerySegment& pq) {
  const SimplePolygon& piece = left ? split.left : split.right;
  const std::vector<long>& source = left ? split.left_source : split.right_source;
  const Point2& first = left ? pq.q : pq.p;  // chord end reached from the piece's last vertex
  const Point2& last = left ? pq.p : pq.q;
  ChordProblem pb;
  pb.ring.push_back(first);
  pb.tags.push_back(VertexTag::steiner());
  pb.edge_source.push_back({});
  const long start_edge = static_cast<long>(left ? split.edge_b : split.edge_a);
  const long end_edge = static_cast<long>(left ? split.edge_a : split.edge_b);
  for (std::size_t j = 0; j < piece.size(); ++j) {
    pb.ring.push_back(piece[j]);
    if (source[j] >= 0) {
      pb.tags.push_back(VertexTag::vertex(0, source[j]));
      pb.edge_source.push_back({0, source[j]});
    } else if (j == 0) {
      pb.tags.push_back(VertexTag::on_edge(0, start_edge));
      pb.edge_source.push_back({0, start_edge});
    } else {
      pb.tags.push_back(VertexTag::on_edge(0, end_edge));
      pb.edge_source.push_back({});
    }
  }
  pb.ring.push_back(last);
  pb.tags.push_back(VertexTag::steiner());
  pb.edge_source.push_back({});
  pb.chord = pb.ring.size() - 1;
  return pb;
}

WvpPolygon glue_pieces(const WvpPolygon& left, const WvpPolygon& right, const Point2& A,
                       const Point2& B) {
  auto find = [](const WvpPolygon& W, const Point2& x) {
    auto it = std::find(W.vertices.begin(), W.vertices.end(), x);
    WVP_CHECK(it != W.vertices.end(), "chord endpoint missing from a piece result");
    return static_cast<std::size_t>(it - W.vertices.begin());
  };
  WvpPolygon out;
  auto append_run = [&](const WvpPolygon& W, const Point2& from, const Point2& to) {
    const std::size_t n = W.size();
    std::size_t i = find(W, from), j = find(W, to);
    WVP_CHECK(W.vertices[next_index(j, n)] == from, "piece result does not close along the chord");
    for (std::size_t k = i; k != j; k = next_index(k, n)) {
      out.vertices.push_back(W.vertices[k]);
      out.tags.push_back(W.tags[k]);
    }
  };
  append_run(left, B, A);
  append_run(right, A, B);
  canonicalize(out);
  return out;
}

WvpPolygon wvp_of_segment(const SimplePolygon& P, const QuerySegment& pq, ChordStats* stats) {
  SplitResult split = split_along_line(P, pq);
  WvpPolygon L = wvp_of_chord(chord_problem_from_split(split, true, pq), stats);
  WvpPolygon R = wvp_of_chord(chord_problem_from_split(split, false, pq), stats);
  return glue_pieces(L, R, split.A, split.B);
}

}  // namespace wvp
