#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "u2mp/diffeo.hpp"
#include "u2mp/polygon.hpp"

namespace u2mp {

enum class CensusShape { Triangles, All };

const char* to_string(CensusShape s);

struct CensusOptions {
  std::int64_t max_coord = 1;
  std::int64_t denominator = 1;
  CensusShape shape = CensusShape::Triangles;
  friend bool operator==(const CensusOptions&, const CensusOptions&) = default;
};

/// Points (i/d, j/d) with |i|, |j| <= max_coord and i >= j, lexicographic.
std::vector<RationalPoint> census_grid(const CensusOptions& opt);

/// Everything the census records about one polygon.
struct CensusItem {
  Polygon polygon;
  bool valid = false;
  std::vector<int> failed_conditions;
  std::size_t wall_vertex_count = 0;
  /// Triangles: whether classify_triangle accepted the polygon.
  std::optional<bool> classified;
  std::optional<std::string> family;
  std::optional<bool> kaehlerizable;
  std::optional<DiffType> diff_type;
  /// Residue at the first vertex, and whether all vertices agree.
  std::optional<int> chern_mod3;
  std::optional<bool> chern_vertex_independent;
  /// One wall vertex: Kaehler verdict equals the fixpoint boundary check.
  std::optional<bool> atiyah_agrees;
  /// conv(fixpoint images) == t_polytope(P).
  std::optional<bool> fixpoint_hull_matches;

  friend bool operator==(const CensusItem&, const CensusItem&) = default;
};

/// Pure per-polygon analysis shared by both census drivers.
CensusItem analyze_census_item(const Polygon& p);

struct CensusSummary {
  CensusOptions options;
  std::size_t grid_points = 0;
  std::size_t polygons = 0;
  std::size_t valid = 0;
  std::map<int, std::size_t> failing_condition;
  std::map<std::size_t, std::size_t> valid_by_wall_count;
  std::map<std::string, std::size_t> by_family;
  std::size_t kaehler_true = 0;
  std::size_t kaehler_false = 0;
  std::size_t triangles_not_kaehler = 0;
  std::map<std::string, std::size_t> by_diff_type;
  std::size_t classify_mismatches = 0;
  std::size_t chern_checked = 0;
  std::size_t chern_vertex_dependent = 0;
  std::size_t atiyah_checked = 0;
  std::size_t atiyah_disagreements = 0;
  std::size_t fixpoint_hull_checked = 0;
  std::size_t fixpoint_hull_mismatches = 0;
  /// Mismatches among triangles, where equality is a theorem.
  std::size_t triangle_fixpoint_hull_mismatches = 0;

  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

struct CensusResult {
  CensusSummary summary;
  std::vector<CensusItem> items;
};

/// Single-threaded reference enumeration.
CensusResult census_serial(const CensusOptions& opt);
/// OpenMP enumeration; identical output to census_serial for any thread
/// count. threads <= 0 uses the runtime default.
CensusResult census_parallel(const CensusOptions& opt, int threads);

CensusSummary summarize(const CensusOptions& opt, std::size_t grid_points, const std::vector<CensusItem>& items);

/// Deterministic JSON; excludes anything run-dependent such as thread count.
std::string census_summary_json(const CensusSummary& s);
/// One-line JSON record for streaming.
std::string census_item_json(const CensusItem& item);

}  // namespace u2mp
