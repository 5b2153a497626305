#include <gtest/gtest.h>

#include <set>

#include "oracle/brute_oracle.hpp"
#include "u2mp/census.hpp"

using namespace u2mp;

namespace {

std::vector<oracle::P> to_oracle(const Polygon& p) {
  std::vector<oracle::P> v;
  for (const auto& q : p.vertices()) v.emplace_back(q.x.numerator().to_int64(), q.y.numerator().to_int64());
  return v;
}

std::string stream_of(const CensusResult& r) {
  std::string s;
  for (const auto& it : r.items) s += census_item_json(it) + "\n";
  return s;
}

// Vertex sets of every convex polygon on the integral grid, by subset
// enumeration.
std::set<std::vector<oracle::P>> oracle_polygons(std::int64_t m) {
  std::vector<oracle::P> grid;
  for (std::int64_t x = -m; x <= m; ++x) {
    for (std::int64_t y = -m; y <= x; ++y) grid.emplace_back(x, y);
  }
  std::set<std::vector<oracle::P>> out;
  const std::size_t n = grid.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) < 3) continue;
    std::vector<oracle::P> pts;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) pts.push_back(grid[i]);
    }
    auto h = oracle::hull(pts);
    if (h.size() != pts.size()) continue;
    std::sort(h.begin(), h.end());
    out.insert(h);
  }
  return out;
}

}  // namespace

TEST(Census, Grid) {
  const auto g = census_grid({1, 2, CensusShape::Triangles});
  // (1/2) * [-1, 1]^2 intersected with x >= y.
  EXPECT_EQ(g.size(), 6u);
  for (const auto& p : g) {
    EXPECT_GE(p.x, p.y);
    EXPECT_LE(p.x * p.x, Rational(1, 4));
    EXPECT_LE(p.y * p.y, Rational(1, 4));
  }
  EXPECT_EQ(census_grid({2, 1, CensusShape::Triangles}).size(), 15u);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
}

TEST(Census, SerialEqualsParallel) {
  for (const CensusOptions& opt : {CensusOptions{3, 1, CensusShape::Triangles}, CensusOptions{2, 1, CensusShape::All},
                                   CensusOptions{1, 2, CensusShape::All}, CensusOptions{1, 3, CensusShape::Triangles}}) {
    const auto a = census_serial(opt);
    for (int threads : {1, 2, 8}) {
      const auto b = census_parallel(opt, threads);
      ASSERT_EQ(b.summary, a.summary);
      ASSERT_EQ(b.items, a.items);
      ASSERT_EQ(census_summary_json(b.summary), census_summary_json(a.summary));
      ASSERT_EQ(stream_of(b), stream_of(a));
    }
  }
}

TEST(Census, TrianglesAgreeWithOracle) {
  for (std::int64_t m : {2, 3}) {
    const auto res = census_serial({m, 1, CensusShape::Triangles});
    std::size_t valid = 0;
    for (const auto& it : res.items) {
      ASSERT_EQ(it.polygon.size(), 3u);
      const auto v = oracle::check(to_oracle(it.polygon), m);
      ASSERT_EQ(it.valid, v.valid()) << to_string(it.polygon);
      ASSERT_EQ(it.wall_vertex_count, static_cast<std::size_t>(v.wall_vertices));
      ASSERT_EQ(it.classified.value_or(false), v.valid());
      valid += v.valid() ? 1 : 0;
    }
    EXPECT_EQ(res.summary.valid, valid);
    EXPECT_EQ(res.summary.classify_mismatches, 0u);
    EXPECT_EQ(res.summary.triangles_not_kaehler, 0u);
    EXPECT_EQ(res.summary.triangle_fixpoint_hull_mismatches, 0u);
  }
}

TEST(Census, AllPolygonsAgreeWithOracle) {
  const auto res = census_serial({2, 1, CensusShape::All});
  const auto want = oracle_polygons(2);
  std::set<std::vector<oracle::P>> got;
  for (const auto& it : res.items) {
    auto v = to_oracle(it.polygon);
    const auto verdict = oracle::check(v, 2);
    ASSERT_EQ(it.valid, verdict.valid()) << to_string(it.polygon);
    if (it.valid) {
      ASSERT_EQ(it.kaehlerizable.value(), oracle::kaehler(v)) << to_string(it.polygon);
    }
    std::sort(v.begin(), v.end());
    got.insert(v);
  }
  EXPECT_EQ(got.size(), res.items.size());
  EXPECT_EQ(got, want);
  EXPECT_EQ(res.summary.polygons, 1499u);
  EXPECT_EQ(res.summary.valid, 343u);
  EXPECT_EQ(res.summary.atiyah_disagreements, 0u);
  EXPECT_EQ(res.summary.chern_vertex_dependent, 0u);
}

TEST(Census, SummaryCountsAreConsistent) {
  const auto res = census_serial({3, 1, CensusShape::All});
  const auto& s = res.summary;
  EXPECT_EQ(s.polygons, res.items.size());
  std::size_t by_wall = 0;
  for (const auto& [k, n] : s.valid_by_wall_count) by_wall += n;
  EXPECT_EQ(by_wall, s.valid);
  EXPECT_EQ(s.kaehler_true + s.kaehler_false, s.valid);
  EXPECT_EQ(summarize(s.options, s.grid_points, res.items), s);
}
