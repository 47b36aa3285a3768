#pragma once

// Independent shortest-path reference: Dijkstra over the visibility graph of
// {root} + ring vertices, with visibility decided by the brute-force oracle and
// lengths in long double. Ties (within a relative 1e-12) prefer fewer hops, so
// a path grazing a collinear vertex is reported as a single edge.

#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "wvp/oracle.hpp"
#include "wvp/spt.hpp"

namespace wvp::testing {

inline long double len(const Point2& a, const Point2& b) {
  long double dx = to_double(b.x - a.x), dy = to_double(b.y - a.y);
  return std::sqrt(dx * dx + dy * dy);
}

inline std::vector<long> reference_parents(const Ring& ring, const Point2& root) {
  const std::size_t n = ring.size();
  const std::vector<Ring> rings{ring};
  // node n is the root
  auto pt = [&](std::size_t i) -> const Point2& { return i == n ? root : ring[i]; };
  std::vector<std::vector<bool>> vis(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      vis[i][j] = vis[j][i] = oracle::segment_visible(rings, pt(i), pt(j));
  const long double inf = std::numeric_limits<long double>::infinity();
  std::vector<long double> dist(n + 1, inf);
  std::vector<int> hops(n + 1, 0);
  std::vector<long> parent(n + 1, kRoot);
  std::vector<bool> done(n + 1, false);
  dist[n] = 0;
  for (std::size_t iter = 0; iter <= n; ++iter) {
    std::size_t u = n + 1;
    for (std::size_t i = 0; i <= n; ++i)
      if (!done[i] && dist[i] < inf && (u == n + 1 || dist[i] < dist[u])) u = i;
    if (u == n + 1) break;
    done[u] = true;
    for (std::size_t v = 0; v <= n; ++v) {
      if (done[v] || !vis[u][v]) continue;
      long double d = dist[u] + len(pt(u), pt(v));
      long double tol = 1e-12L * (1 + d);
      bool better = d < dist[v] - tol || (std::fabs(d - dist[v]) <= tol && hops[u] + 1 < hops[v]);
      if (better) {
        dist[v] = d;
        hops[v] = hops[u] + 1;
        parent[v] = u == n ? kRoot : static_cast<long>(u);
      }
    }
  }
  parent.pop_back();
  return parent;
}

}  // namespace wvp::testing
