#include "u2mp/kaehler.hpp"

#include <algorithm>
#include <stdexcept>

#include "u2mp/classifier.hpp"
#include "u2mp/error.hpp"

namespace u2mp {

namespace {

ClassificationReport require_valid(const Polygon& p, const char* what) {
  ClassificationReport rep = check_momentum_polytope(p);
  if (!rep.valid) {
    throw std::invalid_argument(std::string(what) + ": " + to_string(p) + " is not a momentum polytope");
  }
  return rep;
}

std::size_t require_single_wall_vertex(const Polygon& p, const char* what) {
  const auto wall = wall_vertices(p);
  if (wall.size() != 1) {
    throw std::invalid_argument(std::string(what) + ": needs exactly one wall vertex, " + to_string(p) + " has " +
                                std::to_string(wall.size()));
  }
  return p.index_of(wall.front());
}

bool contains_vertex(const Edge& e, const RationalPoint& v) { return e.tail == v || e.head == v; }

}  // namespace

std::vector<Edge> positive_edges(const Polygon& p) {
  require_valid(p, "positive_edges");
  std::vector<Edge> out;
  for (const auto& e : p.edges()) {
    if (coroot_pairing(inward_primitive_normal(p, e)) > 0) out.push_back(e);
  }
  return out;
}

KaehlerVerdict is_kaehlerizable(const Polygon& p) {
  const auto pos = positive_edges(p);
  const auto wall = wall_vertices(p);
  if (wall.size() != 1) return {};
  for (const auto& e : pos) {
    if (!contains_vertex(e, wall.front())) return {false, e};
  }
  return {};
}

FixpointImages::FixpointImages(std::vector<RationalPoint> pts) : points_(std::move(pts)) {
  std::sort(points_.begin(), points_.end());
}

std::size_t FixpointImages::multiplicity(const RationalPoint& q) const {
  const auto [lo, hi] = std::equal_range(points_.begin(), points_.end(), q);
  return static_cast<std::size_t>(hi - lo);
}

std::vector<std::pair<RationalPoint, std::size_t>> FixpointImages::distinct() const {
  std::vector<std::pair<RationalPoint, std::size_t>> out;
  for (const auto& q : points_) {
    if (!out.empty() && out.back().first == q) {
      ++out.back().second;
    } else {
      out.emplace_back(q, 1);
    }
  }
  return out;
}

FixpointImages fixpoint_images(const Polygon& p) {
  const auto rep = require_valid(p, "fixpoint_images");
  std::vector<RationalPoint> pts;
  for (const auto& va : rep.vertex_data) {
    const RationalPoint& v = va.vertex;
    if (std::holds_alternative<InteriorDelzant>(va.kind)) {
      pts.push_back(v);
      pts.push_back(weyl_reflect(v));
      continue;
    }
    const auto& type = std::get<WallCone>(va.kind).type;
    if (std::holds_alternative<WallEdgePlus>(type) || std::holds_alternative<WallEdgeMinus>(type)) {
      pts.push_back(v);
    } else if (std::holds_alternative<HalfReflPlus>(type) || std::holds_alternative<HalfReflMinus>(type)) {
      pts.push_back(v);
      pts.push_back(v);
    }
  }
  return FixpointImages(std::move(pts));
}

bool fixpoint_boundary_check(const Polygon& p) {
  require_valid(p, "fixpoint_boundary_check");
  require_single_wall_vertex(p, "fixpoint_boundary_check");
  const Polygon pt = t_polytope(p);
  const auto fp = fixpoint_images(p);
  return std::all_of(fp.points().begin(), fp.points().end(),
                     [&](const RationalPoint& q) { return boundary_contains(pt, q); });
}

const char* to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::Chord: return "chord";
    case SegmentKind::Edge: return "edge";
    case SegmentKind::ReflectedEdge: return "reflected-edge";
    case SegmentKind::Cross: return "cross";
  }
  return "?";
}

XRay build_xray(const Polygon& p) {
  const auto rep = require_valid(p, "build_xray");
  const std::size_t i0 = require_single_wall_vertex(p, "build_xray");
  const auto& type = std::get<WallCone>(rep.vertex_data[i0].kind).type;
  const bool reflection = std::holds_alternative<Reflection>(type);
  if (!reflection && !std::holds_alternative<HalfReflPlus>(type) && !std::holds_alternative<HalfReflMinus>(type)) {
    throw std::invalid_argument("build_xray: wall vertex of " + to_string(p) + " has wall-edge type " +
                                type_name(type));
  }

  XRay xr;
  const std::size_t n = p.size() - 1;
  // Clockwise from v0 means walking the counterclockwise list backwards.
  for (std::size_t j = 0; j <= n; ++j) xr.labeled_vertices.push_back(p.vertex(i0 + p.size() - j));
  const auto& v = xr.labeled_vertices;
  const auto vv = [&](std::size_t j) -> const RationalPoint& { return v[j % (n + 1)]; };

  for (std::size_t j = 1; j <= n; ++j) {
    const bool alpha_edge = parallel_to_alpha(vv(j), vv(j + 1)) || parallel_to_alpha(vv(j - 1), vv(j));
    xr.strata.push_back({v[j], weyl_reflect(v[j]), alpha_edge ? 4 : 2, SegmentKind::Chord});
  }

  const auto add_edge = [&](const RationalPoint& a, const RationalPoint& b) {
    if (parallel_to_alpha(a, b)) return;
    xr.strata.push_back({a, b, 2, SegmentKind::Edge});
    xr.strata.push_back({weyl_reflect(a), weyl_reflect(b), 2, SegmentKind::ReflectedEdge});
  };
  if (reflection) {
    for (std::size_t j = 1; j < n; ++j) add_edge(v[j], v[j + 1]);
    xr.strata.push_back({v[n], weyl_reflect(v[1]), 2, SegmentKind::Cross});
    xr.strata.push_back({v[1], weyl_reflect(v[n]), 2, SegmentKind::Cross});
  } else {
    for (std::size_t j = 0; j <= n; ++j) add_edge(vv(j), vv(j + 1));
  }

  xr.fixpoint_images = fixpoint_images(p);
  return xr;
}

bool atiyah_cross_check(const Polygon& p) {
  return is_kaehlerizable(p).kaehlerizable == fixpoint_boundary_check(p);
}

}  // namespace u2mp
