#include <gtest/gtest.h>

#include <random>

#include "wvp/error.hpp"
#include "wvp/geom.hpp"

using namespace wvp;

namespace {

Point2 P(long x, long y) { return {x, y}; }
Point2 Q(const char* x, const char* y) { return {parse_scalar(x), parse_scalar(y)}; }

Point2 random_point(std::mt19937_64& rng) {
  auto r = [&] { return frac(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1); };
  return {r(), r()};
}

// Determinant with denominators cleared into integers, evaluated in mpz.
int integer_orient(const Point2& a, const Point2& b, const Point2& c) {
  mpz_class D = a.x.get_den() * a.y.get_den() * b.x.get_den() * b.y.get_den() * c.x.get_den() *
                c.y.get_den();
  auto I = [&](const Scalar& s) { return mpz_class(s.get_num() * (D / s.get_den())); };
  mpz_class v = (I(b.x) - I(a.x)) * (I(c.y) - I(a.y)) - (I(b.y) - I(a.y)) * (I(c.x) - I(a.x));
  return sgn(v);
}

}  // namespace

TEST(Scalar, ParseAndFormatCanonical) {
  EXPECT_EQ(to_string(parse_scalar("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_scalar("-3/-7")), "3/7");
  EXPECT_EQ(to_string(parse_scalar("3/7")), "3/7");
  EXPECT_EQ(parse_scalar("5"), Scalar(5));
  EXPECT_THROW(parse_scalar("1/0"), Error);
  EXPECT_THROW(parse_scalar("abc"), Error);
  EXPECT_THROW(parse_scalar(""), Error);
}

TEST(Orient, SpecExamples) {
  EXPECT_EQ(orient(P(0, 0), P(1, 0), P(0, 1)), Orientation::CCW);
  EXPECT_EQ(orient(P(0, 0), P(1, 1), P(2, 2)), Orientation::Collinear);
  EXPECT_EQ(orient(P(0, 0), P(0, 1), P(1, 1)), Orientation::CW);
}

TEST(Orient, AntisymmetryAndIntegerAgreement) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Point2 a = random_point(rng), b = random_point(rng), c = random_point(rng);
    if (i % 5 == 0) c = lerp(a, b, frac(static_cast<long>(rng() % 11), 7));  // exact collinear
    int o = orient_sign(a, b, c);
    EXPECT_EQ(o, integer_orient(a, b, c));
    EXPECT_EQ(orient_sign(b, a, c), -o);
    EXPECT_EQ(orient_sign(a, c, b), -o);
    EXPECT_EQ(orient_sign(c, b, a), -o);
    EXPECT_EQ(orient_sign(b, c, a), o);
  }
}

TEST(SegmentIntersection, SpecExamples) {
  auto x = segment_intersection({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)});
  ASSERT_EQ(x.kind, SegmentIntersection::Kind::Point);
  EXPECT_EQ(x.point, P(1, 1));
  EXPECT_TRUE(segment_intersection({P(0, 0), P(1, 0)}, {P(2, 0), P(3, 0)}).empty());
  auto o = segment_intersection({P(0, 0), P(2, 0)}, {P(1, 0), P(3, 0)});
  ASSERT_EQ(o.kind, SegmentIntersection::Kind::Overlap);
  EXPECT_EQ(o.overlap.a, P(1, 0));
  EXPECT_EQ(o.overlap.b, P(2, 0));
}

TEST(SegmentIntersection, SymmetricAndOnBoth) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    Segment s{random_point(rng), random_point(rng)};
    Segment t{random_point(rng), random_point(rng)};
    if (i % 7 == 0) t = {lerp(s.a, s.b, frac(1, 3)), lerp(s.a, s.b, frac(5, 3))};
    auto x = segment_intersection(s, t);
    auto y = segment_intersection(t, s);
    ASSERT_EQ(x.kind, y.kind);
    if (x.kind == SegmentIntersection::Kind::Point) {
      EXPECT_EQ(x.point, y.point);
      EXPECT_TRUE(on_segment(x.point, s.a, s.b));
      EXPECT_TRUE(on_segment(x.point, t.a, t.b));
    } else if (x.kind == SegmentIntersection::Kind::Overlap) {
      EXPECT_EQ(x.overlap, y.overlap);
    }
  }
}

TEST(RaySegmentHit, SpecExamples) {
  EXPECT_EQ(*ray_segment_hit(P(1, 1), P(1, 0), {P(2, 0), P(2, 2)}), P(2, 1));
  EXPECT_FALSE(ray_segment_hit(P(1, 1), P(1, 0), {P(0, 0), P(0, 2)}).has_value());
  EXPECT_EQ(*ray_segment_hit(P(0, 0), P(1, 1), {P(0, 2), P(2, 0)}), P(1, 1));
  EXPECT_EQ(*ray_segment_hit(P(0, 0), P(1, 0), {P(3, 0), P(5, 0)}), P(3, 0));
  EXPECT_THROW(ray_segment_hit(P(0, 0), P(0, 0), {P(3, 0), P(5, 0)}), Error);
}

TEST(AngularCompare, SpecExamples) {
  EXPECT_EQ(angular_compare(P(0, 0), P(1, 0), P(0, 1)), std::weak_ordering::less);
  EXPECT_EQ(angular_compare(P(0, 0), P(1, 1), P(2, 2)), std::weak_ordering::equivalent);
  EXPECT_EQ(angular_compare(P(0, 0), P(0, 1), P(-1, 0)), std::weak_ordering::less);
  EXPECT_EQ(angular_compare(P(0, 0), P(-1, 0), P(0, -1)), std::weak_ordering::less);
  EXPECT_EQ(angular_compare(P(0, 0), P(0, -1), P(1, -1)), std::weak_ordering::less);
  EXPECT_EQ(angular_compare(P(0, 0), P(1, -1), P(1, 0)), std::weak_ordering::greater);
}

TEST(AngularCompare, MatchesAtan2OnRandomDirections) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    Point2 a = random_point(rng), b = random_point(rng);
    if (a == Point2(0, 0) || b == Point2(0, 0)) continue;
    auto ang = [](const Point2& v) {
      double t = std::atan2(to_double(v.y), to_double(v.x));
      return t < 0 ? t + 2 * M_PI : t;
    };
    double da = ang(a), db = ang(b);
    if (std::fabs(da - db) < 1e-9) continue;
    EXPECT_EQ(direction_compare(a, b) == std::weak_ordering::less, da < db);
  }
}

TEST(Wedge, StrictInterior) {
  EXPECT_TRUE(strictly_inside_ccw_wedge(P(1, 0), P(0, 1), P(1, 1)));
  EXPECT_FALSE(strictly_inside_ccw_wedge(P(1, 0), P(0, 1), P(1, -1)));
  EXPECT_FALSE(strictly_inside_ccw_wedge(P(1, 0), P(0, 1), P(2, 0)));
  EXPECT_FALSE(strictly_inside_ccw_wedge(P(1, 0), P(0, 1), P(0, 3)));
  EXPECT_TRUE(strictly_inside_ccw_wedge(P(0, 1), P(1, 0), P(-1, -1)));  // reflex wedge
}

TEST(Misc, ParamOnAndHash) {
  EXPECT_EQ(param_on(Q("3/2", "0"), P(1, 0), P(3, 0)), frac(1, 4));
  PointHash h;
  EXPECT_EQ(h(Q("1/2", "3")), h(Point2(frac(2, 4), Scalar(3))));
}
