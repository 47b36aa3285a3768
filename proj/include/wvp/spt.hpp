#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wvp/io.hpp"
#include "wvp/polygon.hpp"
#include "wvp/triangulation.hpp"

namespace wvp {

enum class EdgeClass { Primary, Secondary1, Secondary2 };
enum class Turn { None, Left, Right };

inline constexpr long kRoot = -1;

struct ShortestPathTree {
  Point2 root;
  std::optional<std::size_t> root_vertex;  // ring position the root coincides with
  std::vector<long> parent;                // kRoot for vertices joined to the root
  std::vector<std::vector<std::size_t>> children;  // increasing ring position
  std::vector<std::size_t> root_children;          // increasing ring position
  std::vector<EdgeClass> edge_class;
  std::vector<Turn> turn;  // orientation of (grandparent, parent, v); None for primary
  std::vector<int> critical_number;
  std::vector<int> debit_number;

  std::size_t size() const { return parent.size(); }
  const Point2& point(const Ring& ring, long v) const { return v == kRoot ? root : ring[v]; }
  /// Vertices on the geodesic root -> v, root excluded, v included.
  std::vector<std::size_t> path_to(std::size_t v) const;
};

/// Left-critical data of one viewpoint: is_LC(v) <=> turn(v) = Left;
/// critical_number counts LC vertices on root..v.
struct CriticalInfo {
  std::vector<bool> is_lc;
  std::vector<int> critical_number;
  std::vector<int> debit_number;
};

/// Geodesic tree from `root` (inside or on the closed ring) to every ring
/// position, via the triangulation's dual tree and the funnel algorithm. Paths
/// never keep a vertex at which they go straight.
ShortestPathTree compute_spt(const Triangulation& T, const Point2& root);
ShortestPathTree compute_spt(const SimplePolygon& P, const Point2& root);

/// Recomputes edge classes, turn labels and critical numbers from `parent`.
void classify_tree(const Ring& ring, ShortestPathTree& tree);

CriticalInfo classify_turns_and_lc(const Ring& ring, const ShortestPathTree& tree,
                                   const Point2& other_end);

/// Ring positions visible from r, in ring order (segment containment per vertex).
std::vector<std::size_t> visible_vertices(const Ring& ring, const Point2& r);
std::vector<std::size_t> visible_vertices(const SimplePolygon& P, const Point2& r);

Json spt_to_json(const ShortestPathTree& tree);

}  // namespace wvp
