#include "wvp/vis_decomp.hpp"

#include <algorithm>
#include <deque>

namespace wvp {

std::vector<bool> reflex_vertices(const Ring& ring) {
  const std::size_t n = ring.size();
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = orient_sign(ring[prev_index(i, n)], ring[i], ring[next_index(i, n)]) < 0;
  return out;
}

std::vector<CriticalConstraint> enumerate_constraints(const SimplePolygon& P) {
  const Ring& r = P.vertices;
  const std::size_t n = r.size();
  std::vector<bool> reflex = reflex_vertices(r);
  std::vector<CriticalConstraint> out;
  for (std::size_t u = 0; u < n; ++u) {
    if (!reflex[u]) continue;
    const Point2& a = r[prev_index(u, n)];
    const Point2& b = r[next_index(u, n)];
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u) continue;
      int sa = orient_sign(r[v], r[u], a);
      int sb = orient_sign(r[v], r[u], b);
      if (sa * sb < 0) continue;  // the line crosses the boundary at u
      // An extension running along a boundary edge bounds no region.
      if ((sa == 0 && sign(dot(a - r[u], r[u] - r[v])) > 0) || (sb == 0 && sign(dot(b - r[u], r[u] - r[v])) > 0))
        continue;
      if (!segment_inside(r, r[v], r[u])) continue;
      BoundaryHit h = ray_shoot(r, r[u], r[u] - r[v]);
      CriticalConstraint c;
      c.u = u;
      c.v = v;
      c.start = r[u];
      c.end = h.point;
      c.hit_edge = h.edge;
      c.hidden_side = sa != 0 ? sa : sb;
      out.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

// Side of the carrier's supporting line (oriented v -> u) that the face left of
// half-edge e lies on.
int face_side(const Arrangement& A, std::size_t e, const CriticalConstraint& c) {
  const auto& h = A.half_edges[e];
  Point2 d = A.vertices[h.to] - A.vertices[h.from];
  return sign(dot(d, c.end - c.start)) > 0 ? 1 : -1;
}

std::vector<std::size_t> sorted_visible(const Ring& r, const Point2& x) {
  std::vector<std::size_t> vis = visible_vertices(r, x);
  std::sort(vis.begin(), vis.end());
  return vis;
}

}  // namespace

Decomposition build_decomposition(const SimplePolygon& P, std::vector<CriticalConstraint> constraints) {
  Decomposition D;
  D.polygon = P;
  D.constraints = std::move(constraints);
  const Ring& r = P.vertices;
  const std::size_t n = r.size();

  std::vector<ArrSegment> segs;
  for (std::size_t i = 0; i < n; ++i) segs.push_back({r[i], r[next_index(i, n)], -1});
  for (std::size_t c = 0; c < D.constraints.size(); ++c)
    segs.push_back({D.constraints[c].start, D.constraints[c].end, static_cast<long>(c)});
  D.arrangement = build_arrangement(segs);
  const Arrangement& A = D.arrangement;
  const std::size_t F = A.faces.size();
  for (std::size_t f = 0; f < F; ++f) {
    WVP_CHECK(A.faces[f].inner.empty(), "visibility region with a hole");
    D.regions.push_back({A.outer_ring(f), A.faces[f].rep, {}});
  }

  RegionGraph& G = D.graph;
  G.out.assign(F, {});
  G.in.assign(F, {});
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> seen(F);  // (to, gained)
  for (std::size_t e = 0; e < A.half_edges.size(); ++e) {
    const auto& h = A.half_edges[e];
    if (h.label < 0) continue;
    const CriticalConstraint& c = D.constraints[h.label];
    if (face_side(A, e, c) != c.hidden_side) continue;  // orient each arc from its hidden face
    WVP_CHECK(h.face >= 0 && A.half_edges[h.twin].face >= 0, "carrier on the unbounded face");
    std::size_t from = h.face, to = A.half_edges[h.twin].face;
    auto key = std::make_pair(to, c.v);
    if (std::find(seen[from].begin(), seen[from].end(), key) != seen[from].end()) continue;
    seen[from].push_back(key);
    std::size_t id = G.arcs.size();
    G.arcs.push_back({from, to, c.v, static_cast<std::size_t>(h.label)});
    G.out[from].push_back(id);
    G.in[to].push_back(id);
  }
  for (std::size_t f = 0; f < F; ++f)
    if (G.in[f].empty()) G.sinks.push_back(f);

  // Visibility sets: one from scratch, the rest by toggling across arcs.
  if (F > 0) {
    std::vector<bool> done(F, false);
    std::deque<std::size_t> queue{0};
    D.regions[0].visible = sorted_visible(r, D.regions[0].rep);
    done[0] = true;
    while (!queue.empty()) {
      std::size_t f = queue.front();
      queue.pop_front();
      auto visit = [&](std::size_t g, std::size_t v, bool gain) {
        if (done[g]) return;
        std::vector<std::size_t> vis = D.regions[f].visible;
        auto it = std::lower_bound(vis.begin(), vis.end(), v);
        bool present = it != vis.end() && *it == v;
        WVP_CHECK(present != gain, "arc label inconsistent with visibility set");
        if (gain) vis.insert(it, v);
        else vis.erase(it);
        D.regions[g].visible = std::move(vis);
        done[g] = true;
        queue.push_back(g);
      };
      for (std::size_t id : G.out[f]) visit(G.arcs[id].to, G.arcs[id].gained, true);
      for (std::size_t id : G.in[f]) visit(G.arcs[id].from, G.arcs[id].gained, false);
    }
    for (std::size_t f = 0; f < F; ++f) WVP_CHECK(done[f], "region graph is disconnected");
  }
  D.sink_index.assign(F, -1);
  return D;
}

std::size_t locate_region(const Decomposition& D, const Point2& x) {
  if (point_in(D.polygon, x) != Location::Inside)
    throw Error(ErrorCode::InvalidArgument, "point is not strictly inside the polygon");
  long f = D.arrangement.locate(x, [](long label) { return label >= 0; });
  WVP_CHECK(f >= 0, "interior point outside every region");
  return static_cast<std::size_t>(f);
}

namespace {

SinkData make_sink(const Decomposition& D, const Triangulation& T, std::size_t region,
                   std::optional<std::vector<long>> parents) {
  SinkData s;
  s.region = region;
  s.rep = D.regions[region].rep;
  if (parents) {
    s.spt.root = s.rep;
    s.spt.parent = std::move(*parents);
    classify_tree(D.polygon.vertices, s.spt);
  } else {
    s.spt = compute_spt(T, s.rep);
  }
  s.crit = classify_turns_and_lc(D.polygon.vertices, s.spt, s.rep);
  s.visible = s.spt.root_children;
  for (std::size_t c : s.spt.root_children)
    for (std::size_t g : s.spt.children[c]) s.first_type.emplace_back(c, g);
  return s;
}

}  // namespace

void precompute_sinks(Decomposition& D) {
  Triangulation T = triangulate(D.polygon.vertices);
  D.sinks.clear();
  D.sink_index.assign(D.regions.size(), -1);
  for (std::size_t f : D.graph.sinks) {
    D.sink_index[f] = static_cast<long>(D.sinks.size());
    D.sinks.push_back(make_sink(D, T, f, std::nullopt));
  }
}

Decomposition preprocess(const SimplePolygon& P) {
  require_valid(P);
  Decomposition D = build_decomposition(P, enumerate_constraints(P));
  precompute_sinks(D);
  return D;
}

std::vector<std::size_t> loss_path(const Decomposition& D, std::size_t region) {
  std::vector<std::size_t> path;
  std::size_t f = region;
  while (!D.graph.in[f].empty()) {
    std::size_t best = D.graph.in[f].front();
    for (std::size_t id : D.graph.in[f])
      if (D.graph.arcs[id].gained < D.graph.arcs[best].gained) best = id;
    path.push_back(best);
    f = D.graph.arcs[best].from;
    WVP_CHECK(path.size() <= D.regions[region].visible.size(), "loss path longer than the visibility set");
  }
  return path;
}

Json decomposition_to_json(const Decomposition& D) {
  Json j;
  j["format"] = "wvp-decomposition";
  j["polygon"] = ring_to_json(D.polygon.vertices);
  Json cs = Json::array();
  for (const auto& c : D.constraints)
    cs.push_back({{"u", c.u}, {"v", c.v}, {"end", point_to_json(c.end)}, {"hit_edge", c.hit_edge},
                  {"hidden_side", c.hidden_side}});
  j["constraints"] = cs;
  Json regions = Json::array();
  for (const auto& R : D.regions) regions.push_back({{"rep", point_to_json(R.rep)}, {"visible", R.visible}});
  j["regions"] = regions;
  Json arcs = Json::array();
  for (const auto& a : D.graph.arcs) arcs.push_back({a.from, a.to, a.gained, a.constraint});
  j["arcs"] = arcs;
  Json sinks = Json::array();
  for (const auto& s : D.sinks) sinks.push_back({{"region", s.region}, {"parent", s.spt.parent}});
  j["sinks"] = sinks;
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  try {
    if (j.value("format", "") != "wvp-decomposition")
      throw Error(ErrorCode::ParseError, "not a decomposition file");
    SimplePolygon P(ring_from_json(j.at("polygon")));
    require_valid(P);
    std::vector<CriticalConstraint> cs;
    for (const auto& c : j.at("constraints")) {
      CriticalConstraint k;
      k.u = c.at("u").get<std::size_t>();
      k.v = c.at("v").get<std::size_t>();
      if (k.u >= P.size() || k.v >= P.size()) throw Error(ErrorCode::ParseError, "constraint vertex out of range");
      k.start = P[k.u];
      k.end = point_from_json(c.at("end"));
      k.hit_edge = c.at("hit_edge").get<std::size_t>();
      k.hidden_side = c.at("hidden_side").get<int>();
      cs.push_back(std::move(k));
    }
    Decomposition D = build_decomposition(P, std::move(cs));
    const Json& regions = j.at("regions");
    if (regions.size() != D.regions.size())
      throw Error(ErrorCode::ParseError, "region count does not match the rebuilt arrangement");
    for (std::size_t f = 0; f < D.regions.size(); ++f) {
      if (regions[f].at("visible").get<std::vector<std::size_t>>() != D.regions[f].visible)
        throw Error(ErrorCode::ParseError, "stored visibility set differs from the rebuilt one");
    }
    Triangulation T = triangulate(P.vertices);
    D.sink_index.assign(D.regions.size(), -1);
    for (const auto& s : j.at("sinks")) {
      std::size_t f = s.at("region").get<std::size_t>();
      if (f >= D.regions.size()) throw Error(ErrorCode::ParseError, "sink region out of range");
      auto parents = s.at("parent").get<std::vector<long>>();
      if (parents.size() != P.size()) throw Error(ErrorCode::ParseError, "sink tree has the wrong size");
      D.sink_index[f] = static_cast<long>(D.sinks.size());
      D.sinks.push_back(make_sink(D, T, f, std::move(parents)));
    }
    if (D.sinks.size() != D.graph.sinks.size()) throw Error(ErrorCode::ParseError, "sink count mismatch");
    return D;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed decomposition: ") + e.what());
  }
}

}  // namespace wvp
