#include "wvp/wvp_query.hpp"

#include <algorithm>

#include "chord_passes.hpp"

namespace wvp {

QueryStructure build_query_structure(Decomposition D) {
  QueryStructure S;
  S.decomposition = std::move(D);
  for (const SinkData& s : S.decomposition.sinks) {
    std::vector<int> depth(s.spt.size(), 0);
    std::vector<long> stack;
    for (std::size_t c : s.spt.root_children) {
      depth[c] = 1;
      stack.push_back(static_cast<long>(c));
    }
    while (!stack.empty()) {
      long v = stack.back();
      stack.pop_back();
      for (std::size_t c : s.spt.children[v]) {
        depth[c] = depth[v] + 1;
        stack.push_back(static_cast<long>(c));
      }
    }
    S.sink_depth.push_back(std::move(depth));
  }
  return S;
}

QueryStructure build_query_structure(const SimplePolygon& P) { return build_query_structure(preprocess(P)); }

ViewTree::ViewTree(const QueryStructure& S, std::size_t sink, Point2 root)
    : sink_(&S.decomposition.sinks.at(sink)), depth_(&S.sink_depth.at(sink)), root_(std::move(root)) {}

long ViewTree::parent(std::size_t v) const {
  auto it = parent_.find(v);
  return it != parent_.end() ? it->second : sink_->spt.parent[v];
}

const std::vector<std::size_t>& ViewTree::children(long v) const {
  auto it = children_.find(v);
  if (it != children_.end()) return it->second;
  return v == kRoot ? sink_->spt.root_children : sink_->spt.children[v];
}

Turn ViewTree::turn(std::size_t v) const { return parent(v) == kRoot ? Turn::None : sink_->spt.turn[v]; }

EdgeClass ViewTree::edge_class(std::size_t v) const {
  int d = depth(v);
  return d == 1 ? EdgeClass::Primary : (d == 2 ? EdgeClass::Secondary1 : EdgeClass::Secondary2);
}

int ViewTree::debit(std::size_t v) const {
  auto it = debit_.find(v);
  return it != debit_.end() ? it->second : 0;
}

// A gained vertex x carries debit -cn(x) and depth shift 1 - depth(x), both
// relative to the sink. Every value below is the sink's value plus the sum of
// the corrections on the current path from the root.
int ViewTree::critical_number(std::size_t v) const {
  std::vector<std::size_t> chain;
  long x = static_cast<long>(v);
  int acc = 0;
  while (x != kRoot) {
    auto it = cn_memo_.find(x);
    if (it != cn_memo_.end()) {
      acc = it->second;
      break;
    }
    chain.push_back(x);
    x = parent(x);
  }
  for (auto c = chain.rbegin(); c != chain.rend(); ++c) {
    acc += debit(*c);
    cn_memo_[*c] = acc;
  }
  return stored_cn(v) + acc;
}

int ViewTree::depth(std::size_t v) const {
  std::vector<std::size_t> chain;
  long x = static_cast<long>(v);
  int acc = 0;
  while (x != kRoot) {
    auto it = depth_memo_.find(x);
    if (it != depth_memo_.end()) {
      acc = it->second;
      break;
    }
    chain.push_back(x);
    x = parent(x);
  }
  for (auto c = chain.rbegin(); c != chain.rend(); ++c) {
    if (parent_.count(*c)) acc += 1 - stored_depth(*c);
    depth_memo_[*c] = acc;
  }
  return stored_depth(v) + acc;
}

void ViewTree::gain(std::size_t v, std::size_t u) {
  WVP_CHECK(parent(v) == static_cast<long>(u), "gained vertex is not hanging from the constraint's anchor");
  WVP_CHECK(parent(u) == kRoot, "constraint anchor is not visible");
  std::vector<std::size_t> cu = children(static_cast<long>(u));
  cu.erase(std::find(cu.begin(), cu.end(), v));
  children_[static_cast<long>(u)] = std::move(cu);
  std::vector<std::size_t> cr = children(kRoot);
  cr.insert(std::lower_bound(cr.begin(), cr.end(), v), v);
  children_[kRoot] = std::move(cr);
  parent_[v] = kRoot;
  debit_[v] = -stored_cn(v);
  cn_memo_.clear();
  depth_memo_.clear();
}

ShortestPathTree ViewTree::materialize() const {
  const std::size_t n = size();
  ShortestPathTree t;
  t.root = root_;
  t.parent.resize(n);
  t.children.resize(n);
  t.edge_class.resize(n);
  t.turn.resize(n);
  t.critical_number.resize(n);
  t.debit_number.assign(n, 0);
  t.root_children = children(kRoot);
  for (std::size_t v = 0; v < n; ++v) {
    t.parent[v] = parent(v);
    t.children[v] = children(static_cast<long>(v));
    t.edge_class[v] = edge_class(v);
    t.turn[v] = turn(v);
    t.critical_number[v] = critical_number(v);
  }
  return t;
}

CriticalInfo ViewTree::critical_info() const {
  CriticalInfo ci;
  for (std::size_t v = 0; v < size(); ++v) {
    ci.is_lc.push_back(turn(v) == Turn::Left);
    ci.critical_number.push_back(critical_number(v));
    ci.debit_number.push_back(debit(v));
  }
  return ci;
}

WalkResult walk_to_viewpoint(const QueryStructure& S, const Point2& r) {
  const Decomposition& D = S.decomposition;
  std::size_t region = locate_region(D, r);
  std::vector<std::size_t> path = loss_path(D, region);
  std::size_t sink_region = path.empty() ? region : D.graph.arcs[path.back()].from;
  long s = D.sink_index[sink_region];
  WVP_CHECK(s >= 0, "loss path does not end at a sink");
  WalkResult w{region, sink_region, path, ViewTree(S, static_cast<std::size_t>(s), r)};
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const RegionArc& a = D.graph.arcs[*it];
    w.tree.gain(a.gained, D.constraints[a.constraint].u);
  }
  return w;
}

namespace {

// Pass tree of one split piece, read off a walked tree of the whole polygon.
// Geodesics from a chord point never leave the piece, so parents carry over;
// the chord's own points hang from the root.
detail::PassTree piece_tree(const ViewTree& t, const std::vector<long>& node_of, const std::vector<long>& orig_of,
                            const std::vector<long>& chord_nodes, long root_node) {
  detail::PassTree pt;
  auto orig = [&orig_of](long v) { return v >= 0 && v < static_cast<long>(orig_of.size()) ? orig_of[v] : -1L; };
  pt.children = [&t, &node_of, orig, chord_nodes, root_node](long v) {
    std::vector<long> out;
    long o = v == kRoot ? kRoot : orig(v);
    if (v != kRoot && o < 0) return out;  // chord points and cut points are leaves
    for (std::size_t c : t.children(o))
      if (node_of[c] >= 0) out.push_back(node_of[c]);
    if (v == kRoot)
      for (long c : chord_nodes)
        if (c != root_node) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
  };
  pt.parent = [&t, &node_of, orig](long v) {
    long o = orig(v);
    if (o < 0) return kRoot;
    long p = t.parent(static_cast<std::size_t>(o));
    return p == kRoot ? kRoot : node_of[p];
  };
  return pt;
}

}  // namespace

WvpPolygon query_wvp(const QueryStructure& S, const QuerySegment& pq, QueryStats* stats) {
  const SimplePolygon& P = S.polygon();
  SplitResult split = split_along_line(P, pq);
  WalkResult wp = walk_to_viewpoint(S, pq.p);
  WalkResult wq = walk_to_viewpoint(S, pq.q);
  QueryStats local;
  QueryStats& st = stats ? *stats : local;
  st = QueryStats{};
  st.walk_p = wp.arcs.size();
  st.walk_q = wq.arcs.size();
  std::vector<bool> touched(P.size(), false);

  WvpPolygon halves[2];
  for (int side = 0; side < 2; ++side) {
    const bool left = side == 0;
    ChordProblem pb = chord_problem_from_split(split, left, pq);
    detail::CutRing cr(pb);
    const std::vector<long>& source = left ? split.left_source : split.right_source;
    const std::size_t m = cr.original_size();
    std::vector<long> node_of(P.size(), -1), orig_of(m, -1), chord_nodes{0, static_cast<long>(m) - 1};
    for (std::size_t j = 0; j < source.size(); ++j) {
      if (source[j] >= 0) {
        node_of[source[j]] = static_cast<long>(j + 1);
        orig_of[j + 1] = source[j];
      } else {
        chord_nodes.push_back(static_cast<long>(j + 1));
      }
    }
    // Node m-1 roots pass 1: p for the left piece, q for the right one.
    const ViewTree& first = left ? wp.tree : wq.tree;
    const ViewTree& second = left ? wq.tree : wp.tree;
    const ViewTree& from_p = wp.tree;
    const ViewTree& from_q = wq.tree;
    // A vertex left of p->q is hidden from all of pq exactly when its path
    // from p turns right somewhere or its path from q turns left; mirrored on
    // the right.
    auto orig = [&](long node) { return node < static_cast<long>(m) ? orig_of[node] : -1L; };
    auto hidden = [&](long node) {
      long o = orig(node);
      if (o < 0) return false;
      std::size_t v = static_cast<std::size_t>(o);
      return left ? (from_p.right_turns(v) > 0 || from_q.left_turns(v) > 0)
                  : (from_p.left_turns(v) > 0 || from_q.right_turns(v) > 0);
    };
    auto visit = [&](long node) {
      if (long o = orig(node); o >= 0) touched[o] = true;
    };
    ChordStats cs;
    detail::PassTree t1 = piece_tree(first, node_of, orig_of, chord_nodes, cr.first_root());
    t1.prune = hidden;
    t1.on_visit = visit;
    detail::run_pass(cr, cr.first_root(), true, t1, &cs);
    detail::PassTree t2 = piece_tree(second, node_of, orig_of, chord_nodes, 0);
    t2.prune = hidden;
    t2.on_visit = visit;
    detail::run_pass(cr, 0, false, t2, &cs);
    st.visited += cs.visited;
    st.cuts += cs.cuts;
    halves[side] = cr.result();
  }
  WvpPolygon W = glue_pieces(halves[0], halves[1], split.A, split.B);
  for (std::size_t v = 0; v < P.size(); ++v)
    if (touched[v]) st.touched_vertices.push_back(v);
  st.touched = st.touched_vertices.size();
  st.output = W.size();
  return W;
}

}  // namespace wvp
