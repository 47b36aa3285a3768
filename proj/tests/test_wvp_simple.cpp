#include <gtest/gtest.h>

#include <random>

#include "wvp/generate.hpp"
#include "wvp/oracle.hpp"
#include "wvp/wvp_simple.hpp"

using namespace wvp;

namespace {

// Closed membership in the (possibly weakly simple) output ring.
bool member(const WvpPolygon& W, const Point2& x) {
  return point_in(std::vector<Ring>{W.vertices}, x) != Location::Outside;
}

void expect_oracle_agreement(const SimplePolygon& P, const QuerySegment& pq, std::size_t samples,
                             std::uint64_t seed, const std::string& id) {
  std::vector<Ring> rings{P.vertices};
  WvpPolygon W = wvp_of_segment(P, pq);
  auto pts = oracle::sample_points(rings, samples, seed);
  auto bad = oracle::compare_membership(rings, pq, pts, [&](const Point2& x) { return member(W, x); });
  EXPECT_TRUE(bad.empty()) << id << ": " << bad.size() << " mismatches, first at " << bad[0].point
                           << " claimed " << bad[0].claimed;
}

}  // namespace

TEST(WvpSimple, ConvexPolygonIsWhole) {
  SimplePolygon C = convex_polygon(10);
  QuerySegment pq{Point2(-10, 3), Point2(20, 7)};
  WvpPolygon W = wvp_of_segment(C, pq);
  WvpPolygon expect{C.vertices, {}};
  canonicalize(expect);
  EXPECT_EQ(W.vertices, expect.vertices);
  for (const auto& t : W.tags) EXPECT_EQ(t.kind, VertexTag::Kind::Vertex);
}

TEST(WvpSimple, OutputIsValidAndCanonical) {
  std::mt19937_64 rng(17);
  for (const auto& e : random_simple_corpus(10, 10, 40, 55)) {
    QuerySegment pq = random_query(e.polygon.rings(), rng);
    WvpPolygon W = wvp_of_segment(e.polygon.outer, pq);
    ASSERT_EQ(W.tags.size(), W.size());
    WvpPolygon c = W;
    canonicalize(c);
    EXPECT_EQ(c.vertices, W.vertices);
    EXPECT_GT(signed_area(W.vertices), 0);
    EXPECT_LE(signed_area(W.vertices), signed_area(e.polygon.outer.vertices));
    for (std::size_t i = 0; i < W.size(); ++i) {
      const VertexTag& t = W.tags[i];
      const Ring& r = e.polygon.outer.vertices;
      if (t.kind == VertexTag::Kind::Vertex) EXPECT_EQ(W.vertices[i], r[t.index]);
      if (t.kind == VertexTag::Kind::OnEdge)
        EXPECT_TRUE(on_segment(W.vertices[i], r[t.index], r[(t.index + 1) % r.size()]));
    }
  }
}

TEST(WvpSimple, NotchShapesAgreeWithOracle) {
  std::mt19937_64 rng(3);
  for (const SimplePolygon& P : {notch_square(), two_notch_square(), comb_polygon(4), spiral_polygon(2)}) {
    for (int k = 0; k < 5; ++k)
      expect_oracle_agreement(P, random_query({P.vertices}, rng), 1500, 100 + k, "pedagogical");
  }
}

TEST(WvpSimple, RandomPolygonsAgreeWithOracle) {
  std::mt19937_64 rng(29);
  for (const auto& e : random_simple_corpus(30, 8, 50, 2024)) {
    for (int k = 0; k < 3; ++k)
      expect_oracle_agreement(e.polygon.outer, random_query(e.polygon.rings(), rng), 800, k, e.id);
  }
}

TEST(WvpSimple, ChordOnBoundaryEdge) {
  std::mt19937_64 rng(5);
  for (const auto& e : random_simple_corpus(15, 8, 40, 808)) {
    const SimplePolygon& P = e.polygon.outer;
    std::vector<Ring> rings{P.vertices};
    for (std::size_t edge = 0; edge < 3; ++edge) {
      QuerySegment pq{P[edge], P[(edge + 1) % P.size()]};
      WvpPolygon W = wvp_of_chord(P, edge);
      auto pts = oracle::sample_points(rings, 600, edge);
      auto bad = oracle::compare_membership(rings, pq, pts, [&](const Point2& x) { return member(W, x); });
      EXPECT_TRUE(bad.empty()) << e.id << " edge " << edge << ": " << bad.size();
    }
  }
}

TEST(WvpSimple, MonotoneInSegment) {
  // A sub-segment sees no more than its super-segment.
  std::mt19937_64 rng(71);
  for (const auto& e : random_simple_corpus(10, 10, 40, 91)) {
    QuerySegment pq = random_query(e.polygon.rings(), rng);
    QuerySegment sub{lerp(pq.p, pq.q, frac(1, 4)), lerp(pq.p, pq.q, frac(3, 5))};
    WvpPolygon big = wvp_of_segment(e.polygon.outer, pq);
    WvpPolygon small = wvp_of_segment(e.polygon.outer, sub);
    EXPECT_LE(signed_area(small.vertices), signed_area(big.vertices));
    for (const Point2& v : small.vertices) EXPECT_TRUE(member(big, v)) << e.id;
  }
}

TEST(WvpSimple, StatsAreLinear) {
  std::mt19937_64 rng(6);
  for (const auto& e : random_simple_corpus(10, 20, 60, 12)) {
    ChordStats st;
    wvp_of_segment(e.polygon.outer, random_query(e.polygon.rings(), rng), &st);
    EXPECT_LE(st.visited, 4 * (e.polygon.outer.size() + 8));
    EXPECT_LE(st.cuts, e.polygon.outer.size() + 4);
  }
}

TEST(WvpSimple, RejectsDegenerateQueries) {
  SimplePolygon C = convex_polygon(8, 100);
  EXPECT_THROW(wvp_of_segment(C, {Point2(0, 0), Point2(0, 0)}), Error);
  EXPECT_THROW(wvp_of_segment(C, {Point2(0, 0), Point2(500, 0)}), Error);
}

TEST(Canonicalize, RotatesAndDropsStraight) {
  WvpPolygon W{{{2, 0}, {2, 2}, {0, 2}, {0, 0}, {1, 0}}, {}};
  W.tags.assign(W.vertices.size(), VertexTag::steiner());
  canonicalize(W);
  EXPECT_EQ(W.vertices, (Ring{{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  EXPECT_EQ(W.tags.size(), 4u);
}
