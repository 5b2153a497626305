#include "u2mp/polygon.hpp"

#include <algorithm>
#include <stdexcept>

#include "u2mp/error.hpp"

namespace u2mp {

namespace {

Rational orient(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
  return cross(a - o, b - o);
}

bool on_segment(const RationalPoint& a, const RationalPoint& b, const RationalPoint& q) {
  if (orient(a, b, q).sign() != 0) return false;
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

void require_2d(const Polygon& p, const char* what) {
  if (p.size() < 3) throw std::invalid_argument(std::string(what) + ": polygon is not 2-dimensional");
}

}  // namespace

std::size_t Polygon::index_of(const RationalPoint& v) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), v);
  return it == vertices_.end() ? npos : static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Edge> Polygon::edges() const {
  std::vector<Edge> out;
  if (vertices_.size() < 3) return out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    out.push_back({vertices_[i], vertices_[(i + 1) % vertices_.size()]});
  }
  return out;
}

Polygon convex_hull(std::span<const RationalPoint> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
  std::vector<RationalPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return Polygon(std::move(pts));

  // Monotone chain; popping on orient <= 0 collapses collinear runs.
  std::vector<RationalPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[0] > hull[1]) std::swap(hull[0], hull[1]);
  return Polygon(std::move(hull));
}

Polygon convex_hull(std::initializer_list<RationalPoint> points) {
  return convex_hull(std::span<const RationalPoint>(points.begin(), points.size()));
}

int dimension(const Polygon& p) {
  if (p.size() >= 3) return 2;
  return static_cast<int>(p.size()) - 1;
}

std::pair<Weight, Weight> vertex_rays(const Polygon& p, const RationalPoint& v) {
  require_2d(p, "vertex_rays");
  const std::size_t i = p.index_of(v);
  if (i == Polygon::npos) throw std::invalid_argument("vertex_rays: " + to_string(v) + " is not a vertex");
  const std::size_t n = p.size();
  return {primitive_ray(p.vertex(i + 1) - v), primitive_ray(p.vertex(i + n - 1) - v)};
}

std::size_t find_edge(const Polygon& p, const RationalPoint& a, const RationalPoint& b) {
  const auto es = p.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if ((es[i].tail == a && es[i].head == b) || (es[i].tail == b && es[i].head == a)) return i;
  }
  return Polygon::npos;
}

Weight inward_primitive_normal(const Polygon& p, const Edge& e) {
  require_2d(p, "inward_primitive_normal");
  const std::size_t i = find_edge(p, e.tail, e.head);
  if (i == Polygon::npos) {
    throw std::invalid_argument("inward_primitive_normal: " + to_string(e.tail) + "-" + to_string(e.head) +
                                " is not an edge");
  }
  const Edge ccw = p.edges()[i];
  const RationalPoint d = ccw.direction();
  // Interior lies to the left of a counterclockwise edge.
  return primitive_ray(RationalPoint(-d.y, d.x));
}

bool is_in_chamber(const Polygon& p) {
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [](const RationalPoint& v) { return coroot_pairing(v).sign() >= 0; });
}

std::vector<RationalPoint> wall_vertices(const Polygon& p) {
  if (!is_in_chamber(p)) throw ChamberError("polygon " + to_string(p) + " leaves the Weyl chamber");
  std::vector<RationalPoint> out;
  for (const auto& v : p.vertices()) {
    if (coroot_pairing(v).is_zero()) out.push_back(v);
  }
  return out;
}

Polygon t_polytope(const Polygon& p) {
  std::vector<RationalPoint> pts = p.vertices();
  for (const auto& v : p.vertices()) pts.push_back(weyl_reflect(v));
  return convex_hull(pts);
}

bool boundary_contains(const Polygon& p, const RationalPoint& q) {
  require_2d(p, "boundary_contains");
  for (const auto& e : p.edges()) {
    if (on_segment(e.tail, e.head, q)) return true;
  }
  return false;
}

bool interior_contains(const Polygon& p, const RationalPoint& q) {
  require_2d(p, "interior_contains");
  for (const auto& e : p.edges()) {
    if (orient(e.tail, e.head, q).sign() <= 0) return false;
  }
  return true;
}

Polygon transform(const Polygon& p, const Rational& s, const Rational& t) {
  if (t.sign() <= 0) throw std::invalid_argument("transform: scale must be positive, got " + t.to_string());
  std::vector<RationalPoint> pts;
  pts.reserve(p.size());
  for (const auto& v : p.vertices()) pts.push_back({s + t * v.x, s + t * v.y});
  return convex_hull(pts);
}

bool parallel_to_alpha(const RationalPoint& a, const RationalPoint& b) {
  const RationalPoint d = b - a;
  return !d.is_zero() && (d.x + d.y).is_zero();
}

std::string to_string(const Polygon& p) {
  std::string s = "conv(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += to_string(p.vertex(i));
  }
  return s + ")";
}

}  // namespace u2mp
