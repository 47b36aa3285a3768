#include "wvp/spt.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace wvp {

std::vector<std::size_t> ShortestPathTree::path_to(std::size_t v) const {
  std::vector<std::size_t> out;
  for (long u = static_cast<long>(v); u != kRoot; u = parent[u]) out.push_back(u);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

struct PortalPoint {
  const Point2* p;
  long id;
};

// Funnel (string pulling) over a portal sequence whose first portal is the root
// and last is the target. Returns the path ids after the root, target included.
std::vector<long> funnel(const std::vector<std::pair<PortalPoint, PortalPoint>>& portals) {
  std::vector<long> path;
  PortalPoint apex = portals[0].first, left = apex, right = apex;
  std::size_t apex_i = 0, left_i = 0, right_i = 0;
  for (std::size_t i = 1; i < portals.size(); ++i) {
    const PortalPoint& L = portals[i].first;
    const PortalPoint& R = portals[i].second;
    if (*apex.p == *right.p || orient_sign(*apex.p, *right.p, *R.p) >= 0) {
      if (*apex.p == *right.p || *R.p == *left.p || orient_sign(*apex.p, *left.p, *R.p) < 0) {
        right = R;
        right_i = i;
      } else {
        path.push_back(left.id);
        apex = left;
        apex_i = left_i;
        right = left = apex;
        right_i = left_i = apex_i;
        i = apex_i;
        continue;
      }
    }
    if (*apex.p == *left.p || orient_sign(*apex.p, *left.p, *L.p) <= 0) {
      if (*apex.p == *left.p || *L.p == *right.p || orient_sign(*apex.p, *right.p, *L.p) > 0) {
        left = L;
        left_i = i;
      } else {
        path.push_back(right.id);
        apex = right;
        apex_i = right_i;
        right = left = apex;
        right_i = left_i = apex_i;
        i = apex_i;
        continue;
      }
    }
  }
  if (path.empty() || path.back() != portals.back().first.id) path.push_back(portals.back().first.id);
  return path;
}

}  // namespace

ShortestPathTree compute_spt(const Triangulation& T, const Point2& root) {
  const Ring& ring = T.ring;
  const std::size_t n = ring.size();
  ShortestPathTree tree;
  tree.root = root;
  tree.parent.assign(n, kRoot);
  tree.children.assign(n, {});

  const std::size_t m = T.tris.size();
  std::vector<std::size_t> dist(m, std::numeric_limits<std::size_t>::max());
  std::vector<long> pred(m, -1);
  std::deque<std::size_t> queue;
  for (std::size_t t = 0; t < m; ++t) {
    if (T.contains(t, root)) {
      dist[t] = 0;
      queue.push_back(t);
    }
  }
  if (queue.empty()) throw Error(ErrorCode::InvalidArgument, "SPT root outside the polygon");
  while (!queue.empty()) {
    std::size_t t = queue.front();
    queue.pop_front();
    for (long s : T.nbr[t]) {
      if (s >= 0 && dist[s] == std::numeric_limits<std::size_t>::max()) {
        dist[s] = dist[t] + 1;
        pred[s] = static_cast<long>(t);
        queue.push_back(s);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (ring[i] == root) {
      tree.root_vertex = i;
      break;
    }
  }

  PortalPoint root_pp{&tree.root, kRoot};
  std::vector<std::pair<PortalPoint, PortalPoint>> portals;
  std::vector<std::size_t> chain;
  for (std::size_t v = 0; v < n; ++v) {
    if (ring[v] == root) continue;  // parent stays kRoot
    std::size_t target = T.vertex_tris[v].front();
    for (std::size_t t : T.vertex_tris[v])
      if (dist[t] < dist[target]) target = t;
    WVP_CHECK(dist[target] != std::numeric_limits<std::size_t>::max(), "disconnected dual graph");
    chain.clear();
    for (long t = static_cast<long>(target); t >= 0; t = pred[t]) chain.push_back(t);
    std::reverse(chain.begin(), chain.end());
    portals.clear();
    portals.push_back({root_pp, root_pp});
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      const auto& c = T.tris[chain[k]];
      int j = 0;
      while (T.nbr[chain[k]][j] != static_cast<long>(chain[k + 1])) ++j;
      std::size_t a = c[j], b = c[(j + 1) % 3];
      portals.push_back({{&ring[b], static_cast<long>(b)}, {&ring[a], static_cast<long>(a)}});
    }
    PortalPoint tp{&ring[v], static_cast<long>(v)};
    portals.push_back({tp, tp});
    std::vector<long> path = funnel(portals);

    // Drop vertices where the path goes straight through.
    std::vector<long> kept{kRoot};
    for (long id : path) {
      while (kept.size() >= 2) {
        const Point2& a = tree.point(ring, kept[kept.size() - 2]);
        const Point2& b = tree.point(ring, kept.back());
        const Point2& c = tree.point(ring, id);
        if (orient_sign(a, b, c) != 0 || dot(b - a, c - b) <= 0) break;
        kept.pop_back();
      }
      kept.push_back(id);
    }
    WVP_CHECK(kept.back() == static_cast<long>(v), "funnel path does not end at its target");
    tree.parent[v] = kept[kept.size() - 2];
  }
  classify_tree(ring, tree);
  return tree;
}

ShortestPathTree compute_spt(const SimplePolygon& P, const Point2& root) {
  return compute_spt(triangulate(P.vertices), root);
}

void classify_tree(const Ring& ring, ShortestPathTree& tree) {
  const std::size_t n = tree.size();
  tree.children.assign(n, {});
  tree.root_children.clear();
  for (std::size_t v = 0; v < n; ++v) {
    if (tree.parent[v] == kRoot) tree.root_children.push_back(v);
    else tree.children[tree.parent[v]].push_back(v);
  }
  tree.edge_class.assign(n, EdgeClass::Primary);
  tree.turn.assign(n, Turn::None);
  tree.critical_number.assign(n, 0);
  tree.debit_number.assign(n, 0);
  std::vector<std::size_t> stack(tree.root_children.rbegin(), tree.root_children.rend());
  std::size_t visited = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    ++visited;
    long u = tree.parent[v];
    if (u != kRoot) {
      long g = tree.parent[u];
      tree.edge_class[v] = g == kRoot ? EdgeClass::Secondary1 : EdgeClass::Secondary2;
      int o = orient_sign(tree.point(ring, g), ring[u], ring[v]);
      tree.turn[v] = o > 0 ? Turn::Left : (o < 0 ? Turn::Right : Turn::None);
      tree.critical_number[v] = tree.critical_number[u] + (o > 0 ? 1 : 0);
    }
    for (auto it = tree.children[v].rbegin(); it != tree.children[v].rend(); ++it) stack.push_back(*it);
  }
  WVP_CHECK(visited == n, "shortest path tree has a cycle");
}

CriticalInfo classify_turns_and_lc(const Ring& ring, const ShortestPathTree& tree,
                                   const Point2& other_end) {
  if (point_in(std::vector<Ring>{ring}, other_end) == Location::Outside) {
    throw Error(ErrorCode::InvalidArgument, "other endpoint outside the polygon");
  }
  CriticalInfo info;
  info.is_lc.resize(tree.size());
  for (std::size_t v = 0; v < tree.size(); ++v) info.is_lc[v] = tree.turn[v] == Turn::Left;
  info.critical_number = tree.critical_number;
  info.debit_number.assign(tree.size(), 0);
  return info;
}

std::vector<std::size_t> visible_vertices(const Ring& ring, const Point2& r) {
  std::vector<Ring> rings{ring};
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (segment_inside(rings, r, ring[i])) out.push_back(i);
  return out;
}

std::vector<std::size_t> visible_vertices(const SimplePolygon& P, const Point2& r) {
  return visible_vertices(P.vertices, r);
}

Json spt_to_json(const ShortestPathTree& tree) {
  auto cls = [](EdgeClass c) {
    return c == EdgeClass::Primary ? "primary" : (c == EdgeClass::Secondary1 ? "secondary1" : "secondary2");
  };
  auto trn = [](Turn t) { return t == Turn::Left ? "left" : (t == Turn::Right ? "right" : "none"); };
  Json j;
  j["root"] = point_to_json(tree.root);
  j["parent"] = tree.parent;
  Json classes = Json::array(), turns = Json::array();
  for (std::size_t v = 0; v < tree.size(); ++v) {
    classes.push_back(cls(tree.edge_class[v]));
    turns.push_back(trn(tree.turn[v]));
  }
  j["edge_class"] = classes;
  j["turn"] = turns;
  j["critical_number"] = tree.critical_number;
  j["debit_number"] = tree.debit_number;
  return j;
}

}  // namespace wvp
