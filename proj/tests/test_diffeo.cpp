#include <gtest/gtest.h>

#include "support/gen.hpp"
#include "u2mp/census.hpp"
#include "u2mp/diffeo.hpp"

using namespace u2mp;
using testgen::hull;
using testgen::pt;

namespace {

// Residue of the rays (a1,b1), (a2,b2), written out directly.
int residue(const Weight& r1, const Weight& r2) {
  const std::int64_t c = r1.a + r2.a - r1.b - r2.b;
  return static_cast<int>(((c % 3) + 3) % 3);
}

}  // namespace

TEST(Diffeo, LineBundleChern) {
  EXPECT_EQ(line_bundle_chern(3, 1), 2);
  EXPECT_EQ(line_bundle_chern(-1, 2), -3);
  EXPECT_EQ(chern_mod3({1, -1}, {4, -3}), residue({1, -1}, {4, -3}));
  EXPECT_EQ(chern_mod3({-1, 0}, {0, -1}), 0);
}

TEST(Diffeo, FixedTypes) {
  const Polygon we = hull({{0, 0}, {1, 1}, {3, 2}});
  EXPECT_EQ(diffeo_type(classify_triangle(we), we), DiffType::ProjectiveSpace4);
  const Polygon r = hull({{0, 0}, {1, 0}, {0, -1}});
  EXPECT_EQ(diffeo_type(classify_triangle(r), r), DiffType::OrientedGrassmannian);
  EXPECT_THROW(chern_mod3_at_vertex(we, pt(0, 0)), std::invalid_argument);
  EXPECT_THROW(chern_mod3_at_vertex(r, pt(0, 0)), std::invalid_argument);
}

TEST(Diffeo, HalfReflectionBundleTrivialIffJDivisibleByThree) {
  for (std::int64_t j = 0; j <= 9; ++j) {
    for (const TriangleFamily& f : {TriangleFamily(HalfReflPlusFamily{0, 1, j}), TriangleFamily(HalfReflMinusFamily{1, 2, j})}) {
      const Polygon p = family_triangle(f);
      const DiffType want = j % 3 == 0 ? DiffType::TrivialP2Bundle : DiffType::NontrivialP2Bundle;
      EXPECT_EQ(diffeo_type(f, p), want) << family_name(f) << " j=" << j;
      for (const auto& v : p.vertices()) EXPECT_EQ(chern_mod3_at_vertex(p, v), (2 * j) % 3);
    }
  }
}

TEST(Diffeo, MismatchedFamilyThrows) {
  const Polygon p = family_triangle(HalfReflPlusFamily{0, 1, 2});
  EXPECT_THROW(diffeo_type(HalfReflPlusFamily{0, 1, 3}, p), std::invalid_argument);
  EXPECT_THROW(chern_mod3_at_vertex(p, pt(7, 7)), std::invalid_argument);
}

TEST(DiffeoProperty, ResidueIsVertexIndependentOnCensusTriangles) {
  const auto res = census_serial({4, 1, CensusShape::Triangles});
  std::size_t bundles = 0;
  for (const auto& it : res.items) {
    if (!it.valid) continue;
    const Polygon& p = it.polygon;
    const TriangleFamily f = classify_triangle(p);
    if (std::holds_alternative<WallEdgeFamily>(f) || std::holds_alternative<ReflectionFamily>(f)) continue;
    ++bundles;
    std::vector<int> seen;
    for (const auto& v : p.vertices()) {
      const auto [r1, r2] = vertex_rays(p, v);
      const int want = residue(r1, r2);
      ASSERT_EQ(chern_mod3_at_vertex(p, v), want) << to_string(p);
      seen.push_back(want);
    }
    ASSERT_EQ(seen[0], seen[1]) << to_string(p);
    ASSERT_EQ(seen[1], seen[2]) << to_string(p);
    ASSERT_EQ(diffeo_type(f, p), seen[0] == 0 ? DiffType::TrivialP2Bundle : DiffType::NontrivialP2Bundle);
  }
  EXPECT_GT(bundles, 900u);
  EXPECT_EQ(res.summary.chern_vertex_dependent, 0u);
}

TEST(DiffeoProperty, TypeInvariantUnderTransform) {
  testgen::Gen g;
  for (const TriangleFamily& f : {TriangleFamily(DelzantFamily{1, 0, 1, 1, 0, -1, 1}), TriangleFamily(HalfReflPlusFamily{0, 1, 4}),
                                  TriangleFamily(HalfReflMinusFamily{0, 1, 3}), TriangleFamily(ReflectionFamily{0, 1}),
                                  TriangleFamily(WallEdgeFamily{0, 1, -1, 1})}) {
    const Polygon p = family_triangle(f);
    const DiffType d = diffeo_type(f, p);
    for (int i = 0; i < 100; ++i) {
      const Polygon q = transform(p, g.rational(), g.positive());
      ASSERT_EQ(diffeo_type(classify_triangle(q), q), d);
    }
  }
}
