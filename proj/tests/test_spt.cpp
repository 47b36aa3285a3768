#include <gtest/gtest.h>

#include <random>

#include "reference_spt.hpp"
#include "wvp/generate.hpp"
#include "wvp/oracle.hpp"
#include "wvp/spt.hpp"

using namespace wvp;

namespace {

void expect_matches_reference(const SimplePolygon& P, const Point2& root, const std::string& id) {
  ShortestPathTree t = compute_spt(P, root);
  std::vector<long> ref = wvp::testing::reference_parents(P.vertices, root);
  ASSERT_EQ(t.size(), ref.size());
  for (std::size_t v = 0; v < ref.size(); ++v) {
    if (t.root_vertex && *t.root_vertex == v) continue;
    EXPECT_EQ(t.parent[v], ref[v]) << id << " vertex " << v;
  }
}

}  // namespace

TEST(Spt, MatchesDijkstraOnRandomPolygons) {
  std::mt19937_64 rng(21);
  for (const auto& e : random_simple_corpus(25, 6, 40, 123)) {
    auto rings = e.polygon.rings();
    for (int k = 0; k < 3; ++k) {
      Point2 root = oracle::random_interior_point(rings, rng);
      expect_matches_reference(e.polygon.outer, root, e.id);
    }
  }
}

TEST(Spt, MatchesDijkstraFromBoundaryPoints) {
  for (const auto& e : random_simple_corpus(10, 8, 30, 5)) {
    const Ring& r = e.polygon.outer.vertices;
    expect_matches_reference(e.polygon.outer, midpoint(r[0], r[1]), e.id);
    expect_matches_reference(e.polygon.outer, lerp(r[2], r[3], frac(1, 3)), e.id);
  }
}

TEST(Spt, MatchesDijkstraOnPedagogicalShapes) {
  std::mt19937_64 rng(2);
  for (const SimplePolygon& P :
       {notch_square(), two_notch_square(), comb_polygon(5), spiral_polygon(3), padded_fixed_k(6)}) {
    auto rings = std::vector<Ring>{P.vertices};
    for (int k = 0; k < 4; ++k)
      expect_matches_reference(P, oracle::random_interior_point(rings, rng), "pedagogical");
  }
}

TEST(Spt, ConvexPolygonIsAllPrimary) {
  SimplePolygon C = convex_polygon(12);
  ShortestPathTree t = compute_spt(C, Point2(0, 0));
  for (std::size_t v = 0; v < t.size(); ++v) {
    EXPECT_EQ(t.parent[v], kRoot);
    EXPECT_EQ(t.edge_class[v], EdgeClass::Primary);
    EXPECT_EQ(t.critical_number[v], 0);
  }
  EXPECT_EQ(t.root_children.size(), 12u);
}

TEST(Spt, TreeInvariants) {
  std::mt19937_64 rng(9);
  for (const auto& e : random_simple_corpus(10, 10, 40, 31)) {
    const Ring& r = e.polygon.outer.vertices;
    Point2 root = oracle::random_interior_point(e.polygon.rings(), rng);
    ShortestPathTree t = compute_spt(e.polygon.outer, root);
    std::vector<Ring> rings{r};
    std::size_t from_root = 0;
    for (std::size_t v = 0; v < t.size(); ++v) {
      long p = t.parent[v];
      EXPECT_TRUE(oracle::segment_visible(rings, t.point(r, p), r[v]));
      if (p == kRoot) {
        ++from_root;
        EXPECT_EQ(t.edge_class[v], EdgeClass::Primary);
        EXPECT_EQ(t.turn[v], Turn::None);
        continue;
      }
      long g = t.parent[p];
      EXPECT_EQ(t.edge_class[v], g == kRoot ? EdgeClass::Secondary1 : EdgeClass::Secondary2);
      int o = orient_sign(t.point(r, g), r[p], r[v]);
      EXPECT_NE(o, 0);
      EXPECT_EQ(t.turn[v], o > 0 ? Turn::Left : Turn::Right);
      EXPECT_EQ(t.critical_number[v], t.critical_number[p] + (o > 0 ? 1 : 0));
      auto& ch = t.children[p];
      EXPECT_NE(std::find(ch.begin(), ch.end(), v), ch.end());
      EXPECT_TRUE(std::is_sorted(ch.begin(), ch.end()));
    }
    EXPECT_EQ(from_root, t.root_children.size());
    std::vector<std::size_t> vis = visible_vertices(e.polygon.outer, root);
    EXPECT_EQ(vis, t.root_children);
  }
}

TEST(Spt, CombHasDepthTwoPaths) {
  SimplePolygon C = comb_polygon(6);
  auto [lo, hi] = bounding_box(std::vector<Ring>{C.vertices});
  std::mt19937_64 rng(4);
  Point2 root = oracle::random_interior_point({C.vertices}, rng);
  ShortestPathTree t = compute_spt(C, root);
  std::size_t deep = 0;
  for (std::size_t v = 0; v < t.size(); ++v)
    if (t.path_to(v).size() >= 2) ++deep;
  EXPECT_GT(deep, 0u);
  (void)lo;
  (void)hi;
}

TEST(Spt, ClassifyRejectsOutsideOtherEnd) {
  SimplePolygon C = convex_polygon(6, 10);
  ShortestPathTree t = compute_spt(C, Point2(0, 0));
  EXPECT_THROW(classify_turns_and_lc(C.vertices, t, Point2(100, 100)), Error);
  CriticalInfo ci = classify_turns_and_lc(C.vertices, t, Point2(1, 0));
  for (bool b : ci.is_lc) EXPECT_FALSE(b);
}

TEST(Spt, JsonHasParents) {
  ShortestPathTree t = compute_spt(convex_polygon(5, 10), Point2(0, 0));
  Json j = spt_to_json(t);
  EXPECT_TRUE(j.contains("parent"));
  EXPECT_EQ(j["parent"].size(), 5u);
}
