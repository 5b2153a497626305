#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "u2mp/lattice.hpp"

namespace u2mp {

/// Pair of consecutive vertices, tail -> head in counterclockwise order.
struct Edge {
  RationalPoint tail;
  RationalPoint head;

  [[nodiscard]] RationalPoint direction() const { return head - tail; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Convex polygon in t*.
///
/// Vertices are pairwise distinct, counterclockwise, start at the
/// lexicographically smallest vertex and contain no collinear chains. A
/// segment stores its two endpoints (smallest first), a point stores one.
/// The only way to build one is convex_hull(), which enforces all of this.
class Polygon {
 public:
  /// The empty polygon; placeholder only.
  Polygon() = default;

  [[nodiscard]] const std::vector<RationalPoint>& vertices() const { return vertices_; }
  [[nodiscard]] std::size_t size() const { return vertices_.size(); }
  [[nodiscard]] const RationalPoint& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  /// Index of v among the vertices, or npos.
  [[nodiscard]] std::size_t index_of(const RationalPoint& v) const;
  [[nodiscard]] bool has_vertex(const RationalPoint& v) const { return index_of(v) != npos; }

  /// Counterclockwise edges; empty unless the polygon is 2-dimensional.
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  friend Polygon convex_hull(std::span<const RationalPoint> points);
  explicit Polygon(std::vector<RationalPoint> v) : vertices_(std::move(v)) {}
  std::vector<RationalPoint> vertices_;
};

/// Throws std::invalid_argument on empty input.
Polygon convex_hull(std::span<const RationalPoint> points);
Polygon convex_hull(std::initializer_list<RationalPoint> points);

/// Affine dimension: 0, 1 or 2.
int dimension(const Polygon& p);

/// Primitive rays (rho_1, rho_2) of cone(P - v). rho_1 points to the
/// counterclockwise successor of v, rho_2 to its predecessor, so
/// det(rho_1, rho_2) > 0.
std::pair<Weight, Weight> vertex_rays(const Polygon& p, const RationalPoint& v);

/// Primitive normal of e pointing into P. The edge may be given in either
/// orientation.
Weight inward_primitive_normal(const Polygon& p, const Edge& e);

[[nodiscard]] bool is_in_chamber(const Polygon& p);

/// Vertices on the wall x = y, counterclockwise. Throws ChamberError if P
/// leaves the chamber.
std::vector<RationalPoint> wall_vertices(const Polygon& p);

/// conv(P u s_alpha(P)).
Polygon t_polytope(const Polygon& p);

/// True iff q lies on an edge of P (endpoints included). P must be
/// 2-dimensional.
[[nodiscard]] bool boundary_contains(const Polygon& p, const RationalPoint& q);

/// Strict interior test, P 2-dimensional.
[[nodiscard]] bool interior_contains(const Polygon& p, const RationalPoint& q);

/// Vertex-wise s*(e1+e2) + t*v. Throws std::invalid_argument if t <= 0.
Polygon transform(const Polygon& p, const Rational& s, const Rational& t);

/// True iff the segment [a, b] is parallel to alpha.
[[nodiscard]] bool parallel_to_alpha(const RationalPoint& a, const RationalPoint& b);

/// Index of the edge {a, b} in edges(), or npos. Orientation-insensitive.
std::size_t find_edge(const Polygon& p, const RationalPoint& a, const RationalPoint& b);

std::string to_string(const Polygon& p);

}  // namespace u2mp
