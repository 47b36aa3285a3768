#pragma once

// Internal: the two-pass cut machinery shared by the scratch and query paths.

#include <functional>
#include <vector>

#include "wvp/wvp_simple.hpp"

namespace wvp::detail {

constexpr long kNone = -1;

struct Node {
  Point2 pt;
  VertexTag tag;
  EdgeRef src;  // source of the edge to `next`
  long prev = kNone, next = kNone;
  bool alive = true;
};

// Working copy of a chord problem's ring as a linked list so cuts splice in
// O(1) and node ids stay stable across passes. Node i is ring vertex
// (chord + 1 + i) mod m: node 0 is the second chord endpoint and node m-1 the
// first one, which roots pass 1.
class CutRing {
 public:
  explicit CutRing(const ChordProblem& pb);

  long first_root() const { return static_cast<long>(original_ - 1); }
  std::size_t original_size() const { return original_; }
  bool is_endpoint(long v) const { return v == 0 || v == first_root(); }

  // Alive nodes starting at node 0.
  std::vector<long> order() const;
  Ring ring_of(const std::vector<long>& ids) const;
  // First boundary hit of the ray w + t*dir over alive edges: (edge start node, point).
  std::pair<long, Point2> shoot(long w, const Point2& dir) const;
  long insert_after(long a, Point2 pt, VertexTag tag, EdgeRef src);
  // Removes the alive nodes strictly between a and b (walking forward from a).
  std::vector<long> remove_between(long a, long b);
  WvpPolygon result() const;

  std::vector<Node> nodes;

 private:
  std::size_t original_;
};

// Shortest path tree of one pass in node ids. Children come in increasing ring
// position counted from the node after the root. Nodes added by cuts never
// need to appear.
struct PassTree {
  std::function<std::vector<long>(long)> children;  // kRoot for the root
  std::function<long(long)> parent;                 // node id or kRoot
  std::function<bool(long)> prune;                  // skip this node and its subtree
  std::function<void(long)> on_visit;
};

// Tree of the alive ring rooted at `root_node`, computed from scratch.
PassTree scratch_tree(const CutRing& cr, long root_node, ChordStats* stats);

// One pass. `right_side` selects pass 1 (pockets right of the ray, removed
// forward from the cutting vertex) versus pass 2 (pockets left of it, removed
// backward).
void run_pass(CutRing& cr, long root_node, bool right_side, const PassTree& tree, ChordStats* stats);

}  // namespace wvp::detail
