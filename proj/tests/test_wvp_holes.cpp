#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "wvp/generate.hpp"
#include "wvp/oracle.hpp"
#include "wvp/wvp_holes.hpp"

using namespace wvp;

namespace {

Ring ints(const std::vector<std::pair<long, long>>& v) {
  Ring r;
  for (auto [x, y] : v) r.push_back({Scalar(x), Scalar(y)});
  return r;
}

QuerySegment seg(long px, long py, long qx, long qy) { return {{Scalar(px), Scalar(py)}, {Scalar(qx), Scalar(qy)}}; }

// Square room with a diamond hole above a horizontal query segment.
PolygonWithHoles diamond_room() {
  PolygonWithHoles P;
  P.outer = SimplePolygon(ints({{0, 0}, {20, 0}, {20, 20}, {0, 20}}));
  P.holes.push_back(SimplePolygon(ints({{10, 8}, {8, 10}, {10, 12}, {12, 10}})));
  return P;
}

// The far hole's main cut ends on the near hole.
PolygonWithHoles stacked_room() {
  PolygonWithHoles P;
  P.outer = SimplePolygon(ints({{0, 0}, {24, 0}, {24, 20}, {0, 20}}));
  P.holes.push_back(SimplePolygon(ints({{10, 6}, {3, 11}, {13, 10}})));
  P.holes.push_back(SimplePolygon(ints({{15, 9}, {14, 12}, {18, 11}})));
  return P;
}

bool member(const Region& R, const Point2& x) { return region_locate(R, x) != Location::Outside; }

std::vector<std::pair<CorpusEntry, QuerySegment>> holes_cases(std::size_t instances, std::size_t queries,
                                                               std::uint64_t seed) {
  std::vector<std::pair<CorpusEntry, QuerySegment>> out;
  for (const CorpusEntry& e : random_holes_corpus(instances, 1, 4, 14, seed)) {
    std::mt19937_64 rng(seed + 1);
    for (std::size_t k = 0; k < queries; ++k) out.emplace_back(e, random_query(e.polygon.rings(), rng));
  }
  return out;
}

// Random point strictly inside face f, or nullopt after repeated misses.
std::optional<Point2> point_in_face(const Arrangement& A, std::size_t f, std::mt19937_64& rng) {
  const auto& F = A.faces[f];
  Ring outer = A.outer_ring(f);
  std::vector<Ring> inner = A.inner_rings(f);
  std::uniform_int_distribution<long> pick(0, static_cast<long>(outer.size()) - 1), num(1, 999);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Point2 x = lerp(F.rep, outer[pick(rng)], frac(num(rng), 1000));
    if (locate_in_ring(outer, x) != Location::Inside) continue;
    bool in_hole = false;
    for (const Ring& r : inner) in_hole = in_hole || locate_in_ring(r, x) != Location::Outside;
    if (!in_hole && A.edge_at(x) < 0) return x;
  }
  return std::nullopt;
}

}  // namespace

TEST(HolesCuts, ZeroHolesGiveNoCuts) {
  PolygonWithHoles P;
  P.outer = random_simple_polygon(14, 5);
  std::mt19937_64 rng(1);
  QuerySegment pq = random_query(P.rings(), rng);
  CutDiagonalSet S = build_cuts(P, pq);
  ASSERT_EQ(S.sides.size(), 2u);
  EXPECT_EQ(S.cut_count(), 0u);
  HolesBasicResult B = wvp_holes_basic(P, pq);
  EXPECT_EQ(B.h_prime, 0u);
  WvpPolygon W = wvp_of_segment(P.outer, pq);
  EXPECT_EQ(region_area(B.region), signed_area(W.vertices));
  HolesImprovedResult I = wvp_holes_improved(preprocess_holes(P), pq);
  EXPECT_EQ(region_area(I.region), signed_area(W.vertices));
}

TEST(HolesCuts, OneHoleCutRunsLeftToTheOuterWall) {
  PolygonWithHoles P = diamond_room();
  QuerySegment pq = seg(3, 3, 16, 3);
  CutDiagonalSet S = build_cuts(P, pq);
  ASSERT_EQ(S.sides.size(), 2u);
  ASSERT_EQ(S.sides[0].cuts.size(), 1u);
  EXPECT_TRUE(S.sides[1].cuts.empty());
  const HoleCut& c = S.sides[0].cuts[0];
  EXPECT_EQ(c.h, Point2(10, 8));
  EXPECT_EQ(c.left, Point2(0, 8));
  EXPECT_EQ(c.right, Point2(20, 8));
  const ChordProblem& base = S.sides[0].base;
  ChordProblem opened = opened_problem(S.sides[0], {});
  // The hole's 4 vertices, the cut end, and the repeated anchor and cut end.
  EXPECT_EQ(opened.ring.size(), base.ring.size() + 4 + 3);
  std::set<Point2> distinct(opened.ring.begin(), opened.ring.end());
  EXPECT_EQ(distinct.size(), base.ring.size() + 4 + 1);
  EXPECT_GT(signed_area(opened.ring), 0);
  EXPECT_EQ(signed_area(opened.ring), signed_area(base.ring) - 8);
}

TEST(HolesCuts, StackedHolesFormAChain) {
  PolygonWithHoles P = stacked_room();
  QuerySegment pq = seg(4, 3, 18, 3);
  CutDiagonalSet S = build_cuts(P, pq);
  const auto& cuts = S.sides[0].cuts;
  ASSERT_EQ(cuts.size(), 2u);
  EXPECT_EQ(cuts[0].hole, 0u);
  EXPECT_EQ(cuts[1].hole, 1u);
  // The far hole's cut ends on the near hole's edge (13,10)->(10,6).
  const Ring& near = P.holes[0].vertices;
  EXPECT_TRUE(on_segment(cuts[1].left, near[2], near[0]));
  EXPECT_EQ(cuts[1].left.y, Scalar(9));
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = i + 1; j < cuts.size(); ++j)
      EXPECT_EQ(segment_intersection(cuts[i].diagonal(), cuts[j].diagonal()).kind, SegmentIntersection::Kind::Empty);
  ChordProblem opened = opened_problem(S.sides[0], {});
  EXPECT_EQ(signed_area(opened.ring), signed_area(S.sides[0].base.ring) - signed_area(ints({{10, 6}, {13, 10}, {3, 11}})) -
                                          signed_area(ints({{15, 9}, {18, 11}, {14, 12}})));
}

TEST(HolesCuts, DegenerateInputsRejected) {
  PolygonWithHoles P;
  P.outer = SimplePolygon(ints({{0, 0}, {20, 0}, {20, 20}, {0, 20}}));
  P.holes.push_back(SimplePolygon(ints({{8, 8}, {8, 12}, {12, 12}, {12, 8}})));
  try {
    build_cuts(P, seg(3, 3, 16, 3));
    FAIL() << "parallel nearest edge accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedDegeneracy);
  }
  try {
    build_cuts(diamond_room(), seg(3, 10, 6, 10));
    FAIL() << "line through a vertex accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedDegeneracy);
  }
}

TEST(PartialWvp, RectangleBeyondFullWidthDiagonalIsWhollyVisible) {
  ChordProblem pb;
  pb.ring = ints({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
  pb.tags.assign(4, VertexTag::steiner());
  pb.edge_source.assign(4, EdgeRef{});
  pb.chord = 0;
  Region R = partial_wvp(pb, {Point2(0, 5), Point2(10, 5)});
  EXPECT_EQ(region_area(R), 50);
  EXPECT_TRUE(member(R, Point2(5, 9)));
  EXPECT_FALSE(member(R, Point2(5, 4)));
}

TEST(PartialWvp, HiddenDiagonalGivesEmptyRegion) {
  ChordProblem pb;
  pb.ring = ints({{0, 0}, {4, 0}, {4, 6}, {8, 6}, {8, 0}, {12, 0}, {12, 10}, {0, 10}});
  pb.tags.assign(8, VertexTag::steiner());
  pb.edge_source.assign(8, EdgeRef{});
  pb.chord = 4;
  Region R = partial_wvp(pb, {Point2(0, 2), Point2(4, 2)});
  EXPECT_TRUE(R.empty());
  EXPECT_EQ(region_area(R), 0);
}

TEST(PartialWvp, MatchesOracleInsideTheFarPart) {
  std::size_t checked = 0;
  for (auto& [e, pq] : holes_cases(4, 3, 21)) {
    CutDiagonalSet S = build_cuts(e.polygon, pq);
    for (const SideProblem& side : S.sides) {
      for (std::size_t j = 0; j < side.cuts.size(); ++j) {
        std::vector<bool> flipped(side.cuts.size(), false);
        flipped[j] = true;
        ChordProblem pb = opened_problem(side, flipped);
        Region R = partial_wvp(pb, side.cuts[j].diagonal());
        Ring far = far_ring(pb, side.cuts[j].diagonal());
        QuerySegment chord{pb.ring[pb.chord], pb.ring[next_index(pb.chord, pb.ring.size())]};
        for (const Point2& x : oracle::sample_points({far}, 120, 3)) {
          // A slit's anchor is a pinch: sight lines through it see a single
          // point of the chord, which the true polygon has no counterpart for.
          bool truth = false;
          for (const auto& iv : oracle::visible_parts_of_pq({pb.ring}, x, chord)) truth = truth || iv.t0 < iv.t1;
          EXPECT_EQ(member(R, x), truth) << e.id << " at " << x;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 500u);
}

TEST(HolesBasic, MatchesOracle) {
  for (auto& [e, pq] : holes_cases(5, 3, 7)) {
    HolesBasicResult B = wvp_holes_basic(e.polygon, pq);
    EXPECT_LE(B.h_prime, B.h * B.h) << e.id;
    EXPECT_TRUE(B.acyclic);
    EXPECT_EQ(B.pieces.size() >= 2, true);
    auto rings = e.polygon.rings();
    auto bad = oracle::compare_membership(rings, pq, oracle::sample_points(rings, 300, 5),
                                          [&](const Point2& x) { return member(B.region, x); });
    EXPECT_TRUE(bad.empty()) << e.id << ": " << bad.size() << " mismatches";
  }
}

TEST(HolesBasic, HoleBlockingNothingAddsOnlyItsDiagonalView) {
  PolygonWithHoles P = diamond_room();
  QuerySegment pq = seg(1, 3, 19, 3);
  HolesBasicResult B = wvp_holes_basic(P, pq);
  // Everything is visible: the room minus the hole.
  EXPECT_EQ(region_area(B.region), 400 - 8);
  EXPECT_EQ(B.h_prime, 1u);
  EXPECT_EQ(B.visible_holes, 1u);
}

TEST(HolesBasic, StaircaseExceedsHoleCount) {
  HolesBasicResult B = wvp_holes_basic(staircase_holes(), staircase_query());
  EXPECT_EQ(B.h, 3u);
  EXPECT_GT(B.h_prime, B.h);
  EXPECT_LE(B.h_prime, B.h * B.h);
  EXPECT_TRUE(B.acyclic);
  for (auto [a, b] : B.see_through) EXPECT_NE(a, b);
}

TEST(HolesImproved, FanQueryEqualsExhaustiveScan) {
  for (auto& [e, pq] : holes_cases(4, 3, 11)) {
    HolesPreprocessed H = preprocess_holes(e.polygon);
    auto key = [](const std::vector<std::vector<Window>>& ws) {
      std::multiset<std::tuple<std::size_t, long, Point2>> out;
      for (const auto& per : ws)
        for (const Window& w : per) out.emplace(w.far, w.near, w.t);
      return out;
    };
    EXPECT_EQ(key(query_constraints(H, pq)), key(query_constraints_naive(H, pq))) << e.id;
  }
}

TEST(HolesImproved, ConvexRoomHasNoWindows) {
  PolygonWithHoles P;
  P.outer = convex_polygon(12);
  HolesPreprocessed H = preprocess_holes(P);
  EXPECT_EQ(H.constraint_count, 0u);
  std::size_t total = 0;
  for (const auto& per : query_constraints(H, seg(-100, 5, 200, 40))) total += per.size();
  EXPECT_EQ(total, 0u);
}

TEST(HolesImproved, AtMostTwoHoleTangentsPerOuterVertex) {
  for (const CorpusEntry& e : random_holes_corpus(6, 1, 1, 14, 17)) {
    HolesPreprocessed H = preprocess_holes(e.polygon);
    const std::size_t outer_n = e.polygon.outer.size();
    std::mt19937_64 rng(2);
    for (int k = 0; k < 3; ++k) {
      QuerySegment pq = random_query(e.polygon.rings(), rng);
      std::map<std::size_t, std::size_t> touching;
      for (const auto& per : query_constraints(H, pq)) {
        for (const Window& w : per) {
          if (w.near < 0) continue;
          std::size_t a = w.far, b = static_cast<std::size_t>(w.near);
          if (a < outer_n && b >= outer_n) ++touching[a];
          if (b < outer_n && a >= outer_n) ++touching[b];
        }
      }
      for (auto [v, c] : touching) EXPECT_LE(c, 2u) << e.id << " vertex " << v;
    }
  }
}

TEST(HolesImproved, MatchesBasicAreaAndOracle) {
  for (auto& [e, pq] : holes_cases(5, 3, 7)) {
    HolesBasicResult B = wvp_holes_basic(e.polygon, pq);
    HolesImprovedResult I = wvp_holes_improved(preprocess_holes(e.polygon), pq);
    EXPECT_EQ(region_area(I.region), region_area(B.region)) << e.id;
    EXPECT_EQ(I.k, region_complexity(I.region));
    auto rings = e.polygon.rings();
    auto bad = oracle::compare_membership(rings, pq, oracle::sample_points(rings, 300, 9),
                                          [&](const Point2& x) { return member(I.region, x); });
    EXPECT_TRUE(bad.empty()) << e.id << ": " << bad.size() << " mismatches";
  }
}

TEST(HolesImproved, CellsAreUniform) {
  std::mt19937_64 rng(5);
  std::size_t cells = 0;
  for (auto& [e, pq] : holes_cases(3, 2, 13)) {
    HolesPreprocessed H = preprocess_holes(e.polygon);
    CutDiagonalSet S = build_cuts(e.polygon, pq);
    ConstraintArrangement C = build_constraint_arrangement(H, S, query_constraints(H, pq));
    auto rings = e.polygon.rings();
    for (std::size_t f = 0; f < C.arrangement.faces.size(); ++f) {
      if (!C.free[f]) continue;
      ++cells;
      for (int k = 0; k < 10; ++k) {
        auto x = point_in_face(C.arrangement, f, rng);
        ASSERT_TRUE(x.has_value()) << "could not sample face " << f;
        EXPECT_EQ(oracle::weakly_visible(rings, *x, pq), C.visible[f]) << e.id << " face " << f;
      }
    }
  }
  EXPECT_GT(cells, 20u);
}

TEST(HolesSweep, ConvexRoomSeesAllDirectly) {
  PolygonWithHoles P;
  P.outer = SimplePolygon(ints({{0, 0}, {20, 0}, {20, 20}, {0, 20}}));
  QuerySegment pq = seg(3, 3, 16, 4);
  HolesPreprocessed H = preprocess_holes(P);
  auto parts = sweep_visible_parts(H, build_cuts(P, pq), 2);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].t0, 0);
  EXPECT_EQ(parts[0].t1, 1);
  EXPECT_EQ(parts[0].diagonal, -1);
}

TEST(HolesSweep, HiddenVertexSeesNothing) {
  PolygonWithHoles P;
  P.outer = SimplePolygon(ints({{0, 0}, {4, 0}, {4, 6}, {8, 6}, {8, 0}, {12, 0}, {12, 10}, {0, 10}}));
  QuerySegment pq = seg(9, 1, 11, 2);
  HolesPreprocessed H = preprocess_holes(P);
  EXPECT_TRUE(sweep_visible_parts(H, build_cuts(P, pq), 0).empty());
}

TEST(HolesSweep, VertexBehindHoleSeesBothEnds) {
  PolygonWithHoles P;
  P.outer = SimplePolygon(ints({{0, 0}, {20, 0}, {20, 20}, {10, 21}, {0, 20}}));
  P.holes.push_back(SimplePolygon(ints({{10, 7}, {7, 10}, {10, 13}, {13, 10}})));
  QuerySegment pq = seg(2, 3, 18, 3);
  HolesPreprocessed H = preprocess_holes(P);
  auto parts = sweep_visible_parts(H, build_cuts(P, pq), 3);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].t0, 0);
  EXPECT_EQ(parts[1].t1, 1);
  EXPECT_LT(parts[0].t1, parts[1].t0);
  EXPECT_EQ(parts[0].diagonal, 0);  // left part is seen across the cut
  EXPECT_EQ(parts[1].diagonal, -1);
}

TEST(HolesSweep, UnionMatchesOracleParts) {
  for (auto& [e, pq] : holes_cases(3, 2, 19)) {
    HolesPreprocessed H = preprocess_holes(e.polygon);
    CutDiagonalSet S = build_cuts(e.polygon, pq);
    auto rings = e.polygon.rings();
    for (std::size_t v = 0; v < H.vertices.size(); ++v) {
      std::vector<std::pair<Scalar, Scalar>> got, want;
      for (const LabeledInterval& iv : sweep_visible_parts(H, S, v)) {
        if (!got.empty() && got.back().second == iv.t0) got.back().second = iv.t1;
        else got.emplace_back(iv.t0, iv.t1);
      }
      for (const auto& iv : oracle::visible_parts_of_pq(rings, H.vertices[v], pq)) {
        if (iv.t0 == iv.t1) continue;
        if (!want.empty() && want.back().second == iv.t0) want.back().second = iv.t1;
        else want.emplace_back(iv.t0, iv.t1);
      }
      EXPECT_EQ(got, want) << e.id << " vertex " << v;
    }
  }
}
