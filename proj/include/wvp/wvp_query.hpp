#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "wvp/vis_decomp.hpp"
#include "wvp/wvp_simple.hpp"

namespace wvp {

/// Preprocessed polygon: the decomposition with sink data plus per-sink depths.
struct QueryStructure {
  Decomposition decomposition;
  std::vector<std::vector<int>> sink_depth;  // per sink, edges from the root to each vertex

  const SimplePolygon& polygon() const { return decomposition.polygon; }
};

QueryStructure build_query_structure(const SimplePolygon& P);
QueryStructure build_query_structure(Decomposition D);

/// SPT(r) as a private overlay on a sink's stored tree. Critical numbers and
/// depths are relative to the sink and corrected lazily by debits that apply
/// to whole subtrees.
class ViewTree {
 public:
  ViewTree(const QueryStructure& S, std::size_t sink, Point2 root);

  const Point2& root() const { return root_; }
  std::size_t size() const { return sink_->spt.size(); }
  long parent(std::size_t v) const;
  /// Children in increasing ring position; kRoot gives the root's children.
  const std::vector<std::size_t>& children(long v) const;
  Turn turn(std::size_t v) const;
  EdgeClass edge_class(std::size_t v) const;
  int debit(std::size_t v) const;
  int critical_number(std::size_t v) const;
  int depth(std::size_t v) const;
  int left_turns(std::size_t v) const { return critical_number(v); }
  int right_turns(std::size_t v) const { return depth(v) - 1 - critical_number(v); }

  /// Moves v from under its parent u (a primary vertex) to the root.
  void gain(std::size_t v, std::size_t u);
  std::size_t overlay_size() const { return parent_.size(); }

  ShortestPathTree materialize() const;
  CriticalInfo critical_info() const;

 private:
  int stored_cn(std::size_t v) const { return sink_->spt.critical_number[v]; }
  int stored_depth(std::size_t v) const { return (*depth_)[v]; }

  const SinkData* sink_;
  const std::vector<int>* depth_;
  Point2 root_;
  std::unordered_map<std::size_t, long> parent_;
  std::unordered_map<long, std::vector<std::size_t>> children_;
  std::unordered_map<std::size_t, int> debit_;
  mutable std::unordered_map<std::size_t, int> cn_memo_;
  mutable std::unordered_map<std::size_t, int> depth_memo_;
};

struct WalkResult {
  std::size_t region = 0;
  std::size_t sink_region = 0;
  std::vector<std::size_t> arcs;  // loss path from `region` to the sink
  ViewTree tree;
};

/// Locates r, follows the loss path to a sink and replays it backwards from the
/// sink's stored tree, one constant-size update per arc.
WalkResult walk_to_viewpoint(const QueryStructure& S, const Point2& r);

struct QueryStats {
  std::size_t walk_p = 0;
  std::size_t walk_q = 0;
  std::size_t visited = 0;  // nodes reached by the four pruned passes
  std::size_t touched = 0;  // distinct polygon vertices among them
  std::vector<std::size_t> touched_vertices;
  std::size_t cuts = 0;
  std::size_t output = 0;
};

/// Weak visibility polygon of pq from the preprocessed structure. Both passes
/// run on the walked trees and skip subtrees hidden from the whole segment.
WvpPolygon query_wvp(const QueryStructure& S, const QuerySegment& pq, QueryStats* stats = nullptr);

}  // namespace wvp
