#include "u2mp/census.hpp"

#include <exception>
#include <json.hpp>
#include <omp.h>
#include <stdexcept>

#include "u2mp/classifier.hpp"
#include "u2mp/error.hpp"
#include "u2mp/kaehler.hpp"

namespace u2mp {

using json = nlohmann::ordered_json;

namespace {

struct GridPoint {
  std::int64_t i, j;
};

// Sign of the orientation of (o, a, b) on the scaled integer grid.
int orient(const GridPoint& o, const GridPoint& a, const GridPoint& b) {
  const std::int64_t c = (a.i - o.i) * (b.j - o.j) - (a.j - o.j) * (b.i - o.i);
  return (c > 0) - (c < 0);
}

std::vector<GridPoint> integer_grid(const CensusOptions& opt) {
  if (opt.max_coord < 1) throw std::invalid_argument("census: max_coord must be >= 1");
  if (opt.denominator < 1) throw std::invalid_argument("census: denominator must be >= 1");
  if (opt.max_coord > 1'000'000) throw std::invalid_argument("census: max_coord too large");
  std::vector<GridPoint> g;
  for (std::int64_t i = -opt.max_coord; i <= opt.max_coord; ++i) {
    for (std::int64_t j = -opt.max_coord; j <= i; ++j) g.push_back({i, j});
  }
  return g;
}

RationalPoint to_point(const GridPoint& g, std::int64_t d) { return {Rational(g.i, d), Rational(g.j, d)}; }

Polygon make_polygon(const std::vector<GridPoint>& grid, const std::vector<std::size_t>& idx, std::int64_t d) {
  std::vector<RationalPoint> pts;
  pts.reserve(idx.size());
  for (auto k : idx) pts.push_back(to_point(grid[k], d));
  return convex_hull(pts);
}

// All polygons whose lexicographically smallest vertex is grid[a].
void polygons_at_anchor(const std::vector<GridPoint>& grid, std::size_t a, const CensusOptions& opt,
                        std::vector<CensusItem>& out) {
  const std::size_t n = grid.size();
  if (opt.shape == CensusShape::Triangles) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (orient(grid[a], grid[b], grid[c]) == 0) continue;
        out.push_back(analyze_census_item(make_polygon(grid, {a, b, c}, opt.denominator)));
      }
    }
    return;
  }
  // Counterclockwise convex chains from the anchor, closed whenever convex.
  std::vector<std::size_t> chain{a};
  auto extend = [&](auto&& self) -> void {
    const GridPoint& last = grid[chain.back()];
    for (std::size_t q = a + 1; q < n; ++q) {
      const GridPoint& gq = grid[q];
      if (chain.size() >= 2) {
        if (orient(grid[chain[chain.size() - 2]], last, gq) <= 0) continue;
        if (orient(grid[a], last, gq) <= 0) continue;
      }
      chain.push_back(q);
      if (chain.size() >= 3 && orient(last, gq, grid[a]) > 0 && orient(gq, grid[a], grid[chain[1]]) > 0) {
        out.push_back(analyze_census_item(make_polygon(grid, chain, opt.denominator)));
      }
      self(self);
      chain.pop_back();
    }
  };
  extend(extend);
}

}  // namespace

const char* to_string(CensusShape s) { return s == CensusShape::Triangles ? "triangles" : "all"; }

std::vector<RationalPoint> census_grid(const CensusOptions& opt) {
  std::vector<RationalPoint> out;
  for (const auto& g : integer_grid(opt)) out.push_back(to_point(g, opt.denominator));
  return out;
}

CensusItem analyze_census_item(const Polygon& p) {
  CensusItem it;
  it.polygon = p;
  const ClassificationReport rep = check_momentum_polytope(p);
  it.valid = rep.valid;
  for (const auto& f : rep.failures) {
    if (it.failed_conditions.empty() || it.failed_conditions.back() != f.condition) {
      it.failed_conditions.push_back(f.condition);
    }
  }
  std::sort(it.failed_conditions.begin(), it.failed_conditions.end());
  it.failed_conditions.erase(std::unique(it.failed_conditions.begin(), it.failed_conditions.end()),
                             it.failed_conditions.end());
  it.wall_vertex_count = wall_vertices(p).size();

  const bool triangle = p.size() == 3;
  std::optional<TriangleFamily> fam;
  if (triangle) {
    try {
      fam = classify_triangle(p);
    } catch (const std::invalid_argument&) {
    }
    it.classified = fam.has_value();
  }
  if (!rep.valid) return it;

  it.kaehlerizable = is_kaehlerizable(p).kaehlerizable;
  if (it.wall_vertex_count == 1) it.atiyah_agrees = *it.kaehlerizable == fixpoint_boundary_check(p);
  const auto fp = fixpoint_images(p);
  it.fixpoint_hull_matches = convex_hull(fp.points()) == t_polytope(p);

  if (fam) {
    it.family = family_name(*fam);
    it.diff_type = diffeo_type(*fam, p);
    if (!std::holds_alternative<WallEdgeFamily>(*fam) && !std::holds_alternative<ReflectionFamily>(*fam)) {
      const auto& vd = rep.vertex_data;
      it.chern_mod3 = chern_mod3(vd[0].rays.first, vd[0].rays.second);
      bool same = true;
      for (const auto& va : vd) same = same && chern_mod3(va.rays.first, va.rays.second) == *it.chern_mod3;
      it.chern_vertex_independent = same;
    }
  }
  return it;
}

CensusSummary summarize(const CensusOptions& opt, std::size_t grid_points, const std::vector<CensusItem>& items) {
  CensusSummary s;
  s.options = opt;
  s.grid_points = grid_points;
  s.polygons = items.size();
  for (const auto& it : items) {
    for (int c : it.failed_conditions) ++s.failing_condition[c];
    const bool triangle = it.polygon.size() == 3;
    if (it.classified && *it.classified != it.valid) ++s.classify_mismatches;
    if (!it.valid) continue;
    ++s.valid;
    ++s.valid_by_wall_count[it.wall_vertex_count];
    if (it.family) ++s.by_family[*it.family];
    if (it.kaehlerizable) {
      ++(*it.kaehlerizable ? s.kaehler_true : s.kaehler_false);
      if (triangle && !*it.kaehlerizable) ++s.triangles_not_kaehler;
    }
    if (it.diff_type) ++s.by_diff_type[to_string(*it.diff_type)];
    if (it.chern_vertex_independent) {
      ++s.chern_checked;
      if (!*it.chern_vertex_independent) ++s.chern_vertex_dependent;
    }
    if (it.atiyah_agrees) {
      ++s.atiyah_checked;
      if (!*it.atiyah_agrees) ++s.atiyah_disagreements;
    }
    if (it.fixpoint_hull_matches) {
      ++s.fixpoint_hull_checked;
      if (!*it.fixpoint_hull_matches) {
        ++s.fixpoint_hull_mismatches;
        if (triangle) ++s.triangle_fixpoint_hull_mismatches;
      }
    }
  }
  return s;
}

CensusResult census_serial(const CensusOptions& opt) {
  const auto grid = integer_grid(opt);
  std::vector<CensusItem> items;
  for (std::size_t a = 0; a < grid.size(); ++a) polygons_at_anchor(grid, a, opt, items);
  CensusResult r{summarize(opt, grid.size(), items), std::move(items)};
  return r;
}

CensusResult census_parallel(const CensusOptions& opt, int threads) {
  const auto grid = integer_grid(opt);
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<std::vector<CensusItem>> per_anchor(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  const int nt = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    try {
      polygons_at_anchor(grid, static_cast<std::size_t>(a), opt, per_anchor[a]);
    } catch (...) {
      errors[a] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::size_t total = 0;
  for (const auto& v : per_anchor) total += v.size();
  std::vector<CensusItem> items;
  items.reserve(total);
  for (auto& v : per_anchor) std::move(v.begin(), v.end(), std::back_inserter(items));
  CensusResult r{summarize(opt, grid.size(), items), std::move(items)};
  return r;
}

std::string census_summary_json(const CensusSummary& s) {
  json j;
  j["max_coord"] = s.options.max_coord;
  j["denominator"] = s.options.denominator;
  j["shape"] = to_string(s.options.shape);
  j["grid_points"] = s.grid_points;
  j["polygons"] = s.polygons;
  j["valid"] = s.valid;
  j["invalid"] = s.polygons - s.valid;
  json fc = json::object();
  for (const auto& [c, n] : s.failing_condition) fc[std::to_string(c)] = n;
  j["failing_condition"] = fc;
  json wc = json::object();
  for (const auto& [w, n] : s.valid_by_wall_count) wc[std::to_string(w)] = n;
  j["valid_by_wall_vertices"] = wc;
  json fam = json::object();
  for (const auto& [f, n] : s.by_family) fam[f] = n;
  j["by_family"] = fam;
  j["kaehler"] = {{"true", s.kaehler_true}, {"false", s.kaehler_false}, {"triangles_false", s.triangles_not_kaehler}};
  json dt = json::object();
  for (const auto& [d, n] : s.by_diff_type) dt[d] = n;
  j["by_diff_type"] = dt;
  j["checks"] = {
      {"classify_mismatches", s.classify_mismatches},
      {"chern_checked", s.chern_checked},
      {"chern_vertex_dependent", s.chern_vertex_dependent},
      {"atiyah_checked", s.atiyah_checked},
      {"atiyah_disagreements", s.atiyah_disagreements},
      {"fixpoint_hull_checked", s.fixpoint_hull_checked},
      {"fixpoint_hull_mismatches", s.fixpoint_hull_mismatches},
      {"triangle_fixpoint_hull_mismatches", s.triangle_fixpoint_hull_mismatches},
  };
  return j.dump(2) + "\n";
}

std::string census_item_json(const CensusItem& it) {
  json j;
  json vs = json::array();
  for (const auto& v : it.polygon.vertices()) vs.push_back(json::array({v.x.to_string(), v.y.to_string()}));
  j["vertices"] = vs;
  j["valid"] = it.valid;
  j["failed_conditions"] = it.failed_conditions;
  j["wall_vertices"] = it.wall_vertex_count;
  if (it.family) j["family"] = *it.family;
  if (it.kaehlerizable) j["kaehlerizable"] = *it.kaehlerizable;
  if (it.diff_type) j["diff_type"] = to_string(*it.diff_type);
  if (it.chern_mod3) j["chern_mod3"] = *it.chern_mod3;
  if (it.atiyah_agrees) j["atiyah_agrees"] = *it.atiyah_agrees;
  if (it.fixpoint_hull_matches) j["fixpoint_hull_matches"] = *it.fixpoint_hull_matches;
  return j.dump();
}

}  // namespace u2mp
