#include <gtest/gtest.h>

#include <algorithm>

#include "support/gen.hpp"
#include "u2mp/error.hpp"
#include "u2mp/polygon.hpp"

using namespace u2mp;
using testgen::hull;
using testgen::pt;

TEST(Polygon, HullDropsInteriorAndCollinearPoints) {
  const Polygon p = convex_hull({pt(0, 0), pt(2, 0), pt(1, 0), pt(2, 2), pt(0, 2), pt(1, 1), pt(0, 1)});
  EXPECT_EQ(p.vertices(), (std::vector<RationalPoint>{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}));
  EXPECT_EQ(dimension(p), 2);
}

TEST(Polygon, DegenerateHulls) {
  EXPECT_EQ(dimension(convex_hull({pt(1, 1)})), 0);
  const Polygon seg = convex_hull({pt(2, 2), pt(1, 1), pt(0, 0)});
  EXPECT_EQ(seg.vertices(), (std::vector<RationalPoint>{pt(0, 0), pt(2, 2)}));
  EXPECT_EQ(dimension(seg), 1);
  EXPECT_TRUE(seg.edges().empty());
  EXPECT_THROW(convex_hull(std::vector<RationalPoint>{}), std::invalid_argument);
}

TEST(Polygon, VertexRaysPointToNeighbours) {
  const Polygon p = hull({{0, 0}, {1, 0}, {0, -1}, {3, -1}});
  const auto [r1, r2] = vertex_rays(p, pt(0, 0));
  EXPECT_EQ(r1, (Weight{0, -1}));
  EXPECT_EQ(r2, (Weight{1, 0}));
  EXPECT_GT(determinant(r1, r2), 0);
  EXPECT_THROW(vertex_rays(p, pt(5, 5)), std::invalid_argument);
}

TEST(Polygon, InwardNormals) {
  const Polygon p = hull({{0, 0}, {1, 0}, {0, -1}, {3, -1}});
  EXPECT_EQ(inward_primitive_normal(p, {pt(1, 0), pt(3, -1)}), (Weight{-1, -2}));
  EXPECT_EQ(inward_primitive_normal(p, {pt(3, -1), pt(1, 0)}), (Weight{-1, -2}));
  EXPECT_EQ(inward_primitive_normal(p, {pt(0, -1), pt(3, -1)}), (Weight{0, 1}));
  EXPECT_THROW(inward_primitive_normal(p, {pt(0, 0), pt(3, -1)}), std::invalid_argument);
}

TEST(Polygon, WallVerticesAndChamber) {
  const Polygon p = hull({{0, 0}, {1, 1}, {3, 2}});
  EXPECT_TRUE(is_in_chamber(p));
  EXPECT_EQ(wall_vertices(p), (std::vector<RationalPoint>{pt(0, 0), pt(1, 1)}));
  EXPECT_THROW(wall_vertices(hull({{0, 1}, {2, 0}, {3, 0}})), ChamberError);
}

TEST(Polygon, TPolytopeOfTrapezoid) {
  // (0,1) is the mirror of a vertex but lies inside the hull.
  EXPECT_EQ(t_polytope(hull({{0, 0}, {1, 0}, {0, -1}, {3, -1}})), hull({{-1, 0}, {0, -1}, {3, -1}, {-1, 3}}));
  EXPECT_EQ(t_polytope(hull({{0, 0}, {1, 0}, {0, -1}})), hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
}

TEST(Polygon, BoundaryAndInterior) {
  const Polygon sq = hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  EXPECT_TRUE(boundary_contains(sq, pt(1, 0)));
  EXPECT_TRUE(boundary_contains(sq, RationalPoint(Rational(1, 2), Rational(1, 2))));
  EXPECT_FALSE(boundary_contains(sq, pt(0, 0)));
  EXPECT_TRUE(interior_contains(sq, pt(0, 0)));
  EXPECT_FALSE(interior_contains(sq, pt(1, 0)));
  EXPECT_FALSE(boundary_contains(sq, pt(2, 0)));
}

TEST(Polygon, Transform) {
  EXPECT_EQ(transform(hull({{0, 0}, {1, -1}, {1, 0}}), -1, 1), hull({{-1, -1}, {0, -2}, {0, -1}}));
  EXPECT_EQ(transform(hull({{0, 0}, {1, -1}, {1, 0}}), 0, Rational(1, 2)),
            convex_hull({pt(0, 0), RationalPoint(Rational(1, 2), Rational(-1, 2)), RationalPoint(Rational(1, 2), 0)}));
  EXPECT_THROW(transform(hull({{0, 0}, {1, 0}, {1, -1}}), 0, 0), std::invalid_argument);
}

TEST(Polygon, AlphaParallel) {
  EXPECT_TRUE(parallel_to_alpha(pt(2, 2), pt(4, 0)));
  EXPECT_FALSE(parallel_to_alpha(pt(2, 2), pt(4, 1)));
  EXPECT_FALSE(parallel_to_alpha(pt(2, 2), pt(2, 2)));
}

TEST(PolygonProperty, HullIsIdempotentAndOrderInsensitive) {
  testgen::Gen g;
  for (std::size_t i = 0; i < testgen::kSamples; ++i) {
    auto pts = g.points(1, 8);
    const Polygon h = convex_hull(pts);
    ASSERT_EQ(convex_hull(h.vertices()), h);
    std::shuffle(pts.begin(), pts.end(), g.engine());
    ASSERT_EQ(convex_hull(pts), h);
    // Every input point lies in the closed hull.
    if (dimension(h) == 2) {
      for (const auto& q : pts) ASSERT_TRUE(interior_contains(h, q) || boundary_contains(h, q));
      // Strict convexity: every vertex makes a left turn.
      for (std::size_t k = 0; k < h.size(); ++k) {
        ASSERT_GT(cross(h.vertex(k + 1) - h.vertex(k), h.vertex(k + 2) - h.vertex(k + 1)), Rational(0));
      }
    }
  }
}

TEST(PolygonProperty, TPolytopeIsReflectionStableAndContainsP) {
  testgen::Gen g(testgen::kSeed + 3);
  for (std::size_t i = 0; i < testgen::kSamples; ++i) {
    const Polygon p = convex_hull(g.points(3, 6, true));
    const Polygon t = t_polytope(p);
    std::vector<RationalPoint> mirrored;
    for (const auto& v : t.vertices()) mirrored.push_back(weyl_reflect(v));
    ASSERT_EQ(convex_hull(mirrored), t);
    ASSERT_EQ(t_polytope(t), t);
    if (dimension(t) == 2) {
      for (const auto& v : p.vertices()) ASSERT_TRUE(boundary_contains(t, v) || interior_contains(t, v));
    }
  }
}

TEST(PolygonProperty, TransformComposesAndInverts) {
  testgen::Gen g(testgen::kSeed + 4);
  for (std::size_t i = 0; i < testgen::kSamples; ++i) {
    const Polygon p = convex_hull(g.points(1, 6));
    const Rational s1 = g.rational(), t1 = g.positive(), s2 = g.rational(), t2 = g.positive();
    ASSERT_EQ(transform(transform(p, s1, t1), -s1 / t1, Rational(1) / t1), p);
    ASSERT_EQ(transform(transform(p, s1, t1), s2, t2), transform(p, t2 * s1 + s2, t2 * t1));
    ASSERT_EQ(dimension(transform(p, s1, t1)), dimension(p));
  }
}

TEST(PolygonProperty, VertexRaysAreCounterclockwise) {
  testgen::Gen g(testgen::kSeed + 5);
  for (std::size_t i = 0; i < testgen::kSamples; ++i) {
    const Polygon p = convex_hull(g.points(3, 7));
    if (dimension(p) != 2) continue;
    for (const auto& v : p.vertices()) {
      const auto [r1, r2] = vertex_rays(p, v);
      ASSERT_GT(determinant(r1, r2), 0);
    }
    for (const auto& e : p.edges()) {
      // The inward normal pairs positively with a point strictly inside.
      const Weight n = inward_primitive_normal(p, e);
      const RationalPoint c = Rational(1, 3) * (p.vertex(0) + p.vertex(1) + p.vertex(2));
      ASSERT_GT(dot(RationalPoint(n), c - e.tail), Rational(0));
    }
  }
}
