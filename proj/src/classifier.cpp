#include "u2mp/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "u2mp/error.hpp"

namespace u2mp {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

std::optional<WallVertexType> match_ordered(const Weight& u, const Weight& v) {
  if (u == Weight{1, 1} && v.a == v.b + 1) return WallEdgePlus{v.b};
  if (u == Weight{-1, -1} && v.a == v.b + 1) return WallEdgeMinus{v.b};
  if (u == weights::kAlpha) {
    if (v.a + v.b == 1 && v.b <= 0) return HalfReflPlus{-v.b};
    if (v.a + v.b == -1 && v.a >= 0) return HalfReflMinus{v.a};
  }
  if (u.a + u.b == 1 && u.b <= 0 && v == Weight{u.a - 1, u.b - 1}) return Reflection{-u.b};
  return std::nullopt;
}

std::string weight_text(const Weight& w) { return to_string(w); }

// Scale t with d = t * ray, or nullopt if d is not a positive multiple.
std::optional<Rational> scale_along(const RationalPoint& d, const Weight& ray) {
  const Rational t = ray.a != 0 ? d.x / Rational(ray.a) : d.y / Rational(ray.b);
  if (t.sign() <= 0) return std::nullopt;
  if (!(t * RationalPoint(ray) == d)) return std::nullopt;
  return t;
}

Rational require_scale(const RationalPoint& d, const Weight& ray, const char* what) {
  auto t = scale_along(d, ray);
  if (!t) throw InvariantViolation(std::string("classify_triangle: ") + what + " edge " + to_string(d) +
                                   " is not a positive multiple of " + to_string(ray));
  return *t;
}

RationalPoint diag(const Rational& s) { return {s, s}; }

void require_positive(const Rational& q, const char* name) {
  if (q.sign() <= 0) throw std::invalid_argument(std::string("family_triangle: ") + name + " must be positive");
}

}  // namespace

std::string type_name(const WallVertexType& t) {
  return std::visit(overloaded{
                        [](const WallEdgePlus& w) { return "WallEdgePlus{k=" + std::to_string(w.k) + "}"; },
                        [](const WallEdgeMinus& w) { return "WallEdgeMinus{k=" + std::to_string(w.k) + "}"; },
                        [](const HalfReflPlus& w) { return "HalfReflPlus{j=" + std::to_string(w.j) + "}"; },
                        [](const HalfReflMinus& w) { return "HalfReflMinus{j=" + std::to_string(w.j) + "}"; },
                        [](const Reflection& w) { return "Reflection{j=" + std::to_string(w.j) + "}"; },
                    },
                    t);
}

std::pair<Weight, Weight> rays_of(const WallVertexType& t) {
  return std::visit(overloaded{
                        [](const WallEdgePlus& w) { return std::pair{Weight{1, 1}, Weight{w.k + 1, w.k}}; },
                        [](const WallEdgeMinus& w) { return std::pair{Weight{-1, -1}, Weight{w.k + 1, w.k}}; },
                        [](const HalfReflPlus& w) { return std::pair{weights::kAlpha, Weight{w.j + 1, -w.j}}; },
                        [](const HalfReflMinus& w) { return std::pair{weights::kAlpha, Weight{w.j, -w.j - 1}}; },
                        [](const Reflection& w) { return std::pair{Weight{w.j + 1, -w.j}, Weight{w.j, -w.j - 1}}; },
                    },
                    t);
}

std::optional<WallVertexType> classify_wall_rays(const Weight& r1, const Weight& r2) {
  if (auto m = match_ordered(r1, r2)) return m;
  return match_ordered(r2, r1);
}

bool ClassificationReport::condition_holds(int id) const {
  return std::none_of(failures.begin(), failures.end(), [id](const ConditionFailure& f) { return f.condition == id; });
}

ClassificationReport check_momentum_polytope(const Polygon& p) {
  if (!is_in_chamber(p)) throw ChamberError("polygon " + to_string(p) + " leaves the Weyl chamber");
  ClassificationReport rep;
  if (dimension(p) != 2) {
    rep.failures.push_back({1, "polytope has dimension " + std::to_string(dimension(p)) + ", expected 2"});
    return rep;
  }
  for (const auto& v : p.vertices()) {
    VertexAnalysis va;
    va.vertex = v;
    va.rays = vertex_rays(p, v);
    va.on_wall = coroot_pairing(v).is_zero();
    const auto& [r1, r2] = va.rays;
    if (!va.on_wall) {
      if (is_lattice_basis(r1, r2)) {
        va.kind = InteriorDelzant{};
      } else {
        const std::string why = "rays " + to_string(r1) + "," + to_string(r2) + " at " + to_string(v) +
                                " have determinant " + std::to_string(determinant(r1, r2));
        va.kind = InvalidVertex{3, why};
        rep.failures.push_back({3, why});
      }
    } else if (auto t = classify_wall_rays(r1, r2)) {
      va.kind = WallCone{*t};
    } else {
      const std::string why = "rays " + to_string(r1) + "," + to_string(r2) + " at wall vertex " + to_string(v) +
                              " match no admissible wall cone";
      va.kind = InvalidVertex{4, why};
      rep.failures.push_back({4, why});
    }
    rep.vertex_data.push_back(std::move(va));
  }
  rep.valid = rep.failures.empty();
  return rep;
}

std::string family_name(const TriangleFamily& f) {
  static constexpr const char* names[] = {"Delzant", "WallEdge", "HalfReflPlus", "HalfReflMinus", "Reflection"};
  return names[f.index()];
}

int family_case(const TriangleFamily& f) { return static_cast<int>(f.index()) + 1; }

Polygon family_triangle(const TriangleFamily& f) {
  return std::visit(
      overloaded{
          [](const DelzantFamily& d) {
            require_positive(d.r, "r");
            require_positive(d.t, "t");
            if (d.a1 * d.b2 - d.a2 * d.b1 != 1) throw std::invalid_argument("family_triangle: a1*b2 - a2*b1 != 1");
            if (d.a1 + d.b1 < 0 || d.a2 + d.b2 < 0) throw std::invalid_argument("family_triangle: a_i + b_i < 0");
            const RationalPoint base{d.s, d.s - d.r};
            return convex_hull(
                {base, base + d.t * RationalPoint(d.delta1()), base + d.t * RationalPoint(d.delta2())});
          },
          [](const WallEdgeFamily& w) {
            require_positive(w.t, "t");
            if (w.ell != 1 && w.ell != -1) throw std::invalid_argument("family_triangle: l must be +1 or -1");
            const RationalPoint base = diag(w.s);
            return convex_hull({base, base + w.t * RationalPoint(Weight{w.ell, w.ell}),
                                base + w.t * RationalPoint(Weight{w.k + 1, w.k})});
          },
          [](const HalfReflPlusFamily& h) {
            require_positive(h.t, "t");
            if (h.j < 0) throw std::invalid_argument("family_triangle: j must be >= 0");
            const RationalPoint base = diag(h.s);
            return convex_hull({base, base + h.t * RationalPoint(weights::kAlpha),
                                base + h.t * RationalPoint(Weight{h.j + 1, -h.j})});
          },
          [](const HalfReflMinusFamily& h) {
            require_positive(h.t, "t");
            if (h.j < 0) throw std::invalid_argument("family_triangle: j must be >= 0");
            const RationalPoint base = diag(h.s);
            return convex_hull({base, base + h.t * RationalPoint(weights::kAlpha),
                                base + h.t * RationalPoint(Weight{h.j, -h.j - 1})});
          },
          [](const ReflectionFamily& r) {
            require_positive(r.t, "t");
            const RationalPoint base = diag(r.s);
            return convex_hull({base, base + r.t * RationalPoint(weights::kEps1),
                                base - r.t * RationalPoint(weights::kEps2)});
          },
      },
      f);
}

TriangleFamily classify_triangle(const Polygon& p) {
  if (p.size() != 3) throw std::invalid_argument("classify_triangle: " + to_string(p) + " is not a triangle");
  const ClassificationReport rep = check_momentum_polytope(p);
  if (!rep.valid) {
    throw std::invalid_argument("classify_triangle: " + to_string(p) + " is not a momentum polytope (" +
                                rep.failures.front().reason + ")");
  }
  const auto wall = wall_vertices(p);
  TriangleFamily fam;

  if (wall.empty()) {
    std::size_t bi = 0;
    for (std::size_t i = 1; i < 3; ++i) {
      const auto c = coroot_pairing(p.vertex(i)) <=> coroot_pairing(p.vertex(bi));
      if (c < 0 || (c == 0 && p.vertex(i) < p.vertex(bi))) bi = i;
    }
    const RationalPoint& base = p.vertex(bi);
    const auto [d1, d2] = vertex_rays(p, base);
    const Rational t1 = require_scale(p.vertex(bi + 1) - base, d1, "first Delzant");
    const Rational t2 = require_scale(p.vertex(bi + 2) - base, d2, "second Delzant");
    if (t1 != t2) {
      throw InvariantViolation("classify_triangle: Delzant edge scales disagree at " + to_string(base) + ": " +
                               t1.to_string() + " vs " + t2.to_string());
    }
    DelzantFamily d{base.x - base.y, base.x, t1, -d1.b, d1.a, -d2.b, d2.a};
    if (d.a1 * d.b2 - d.a2 * d.b1 != 1 || d.a1 + d.b1 < 0 || d.a2 + d.b2 < 0) {
      throw InvariantViolation("classify_triangle: Delzant rays " + to_string(d1) + "," + to_string(d2) +
                               " violate the family constraints");
    }
    fam = d;
  } else if (wall.size() == 2) {
    const RationalPoint base = std::min(wall[0], wall[1]);
    const RationalPoint top = std::max(wall[0], wall[1]);
    RationalPoint apex;
    for (const auto& v : p.vertices()) {
      if (v != base && v != top) apex = v;
    }
    const Rational t = require_scale(top - base, weights::kDiagonal, "wall");
    const Weight ray = primitive_ray(apex - base);
    if (ray.a != ray.b + 1) {
      throw InvariantViolation("classify_triangle: wall-edge apex ray " + to_string(ray) + " is not (k+1,k)");
    }
    if (require_scale(apex - base, ray, "apex") != t) {
      throw InvariantViolation("classify_triangle: wall-edge scales disagree in " + to_string(p));
    }
    fam = WallEdgeFamily{base.x, t, ray.b, 1};
  } else {
    const RationalPoint& v0 = wall.front();
    const auto& va = rep.vertex_data[p.index_of(v0)];
    const WallVertexType type = std::get<WallCone>(va.kind).type;
    std::vector<RationalPoint> others;
    for (const auto& v : p.vertices()) {
      if (v != v0) others.push_back(v);
    }
    const auto [ra, rb] = rays_of(type);
    // Assign each non-wall vertex to the ray it lies on.
    RationalPoint pa = others[0], pb = others[1];
    if (!scale_along(pa - v0, ra)) std::swap(pa, pb);
    const Rational ta = require_scale(pa - v0, ra, "first wall-cone");
    const Rational tb = require_scale(pb - v0, rb, "second wall-cone");
    if (ta != tb) throw InvariantViolation("classify_triangle: wall-cone scales disagree in " + to_string(p));
    fam = std::visit(overloaded{
                         [&](const HalfReflPlus& h) -> TriangleFamily { return HalfReflPlusFamily{v0.x, ta, h.j}; },
                         [&](const HalfReflMinus& h) -> TriangleFamily {
                           return HalfReflMinusFamily{v0.x, ta, h.j};
                         },
                         [&](const Reflection& r) -> TriangleFamily {
                           if (r.j != 0) {
                             throw InvariantViolation("classify_triangle: reflection vertex with j=" +
                                                      std::to_string(r.j) + " in a valid triangle");
                           }
                           return ReflectionFamily{v0.x, ta};
                         },
                         [&](const auto&) -> TriangleFamily {
                           throw InvariantViolation("classify_triangle: wall-edge cone at a lone wall vertex");
                         },
                     },
                     type);
  }

  if (!(family_triangle(fam) == p)) {
    throw InvariantViolation("classify_triangle: parameters of " + family_name(fam) + " do not reconstruct " +
                             to_string(p));
  }
  return fam;
}

LocalModel local_model(const RationalPoint& vertex, const WallVertexType& t) {
  LocalModel lm{vertex, t, 0, {}};
  std::visit(overloaded{
                 [&](const WallEdgePlus& w) {
                   lm.table_case = 11;
                   lm.variety = "(C^2 (x) C_det^" + std::to_string(-(w.k + 1)) + ") x C_det^-1";
                 },
                 [&](const WallEdgeMinus& w) {
                   lm.table_case = 11;
                   lm.variety = "(C^2 (x) C_det^" + std::to_string(-(w.k + 1)) + ") x C_det^1";
                 },
                 [&](const HalfReflPlus& h) {
                   lm.table_case = 14;
                   lm.variety = "GL(2) x_{T^C} C_" + weight_text(-Weight{h.j + 1, -h.j});
                 },
                 [&](const HalfReflMinus& h) {
                   lm.table_case = 14;
                   lm.variety = "GL(2) x_{T^C} C_" + weight_text(-Weight{h.j, -h.j - 1});
                 },
                 [&](const Reflection& r) {
                   lm.table_case = 15;
                   lm.variety = "GL(2)/{diag(z^" + std::to_string(r.j) + ", z^" + std::to_string(r.j + 1) + ")}";
                 },
             },
             t);
  return lm;
}

ManifoldModel manifold_model(const TriangleFamily& f) {
  ManifoldModel m;
  m.family = f;
  const Polygon tri = family_triangle(f);
  for (const auto& v : tri.vertices()) {
    if (!coroot_pairing(v).is_zero()) continue;
    const auto [r1, r2] = vertex_rays(tri, v);
    m.local_models.push_back(local_model(v, *classify_wall_rays(r1, r2)));
  }

  std::visit(
      overloaded{
          [&](const DelzantFamily& d) {
            const Weight w1 = -d.delta1(), w2 = -d.delta2();
            m.total_space = {TotalSpaceKind::ProjectivizedBundle, {Weight{0, 0}, w1, w2},
                             "U(2) x_T P(V) over S^2 = U(2)/T"};
            const std::string v = "P(C + C_" + weight_text(w1) + " + C_" + weight_text(w2) + ")";
            m.u2_manifold_label = "U(2) x_T " + v;
            m.gl2_variety_label = "GL(2) x_{B^-} " + v;
          },
          [&](const WallEdgeFamily& w) {
            const std::int64_t c = w.k + 1;
            m.total_space = {TotalSpaceKind::ProjectiveRepresentation,
                             {Weight{1 - c, -c}, Weight{-c, 1 - c}, Weight{-w.ell, -w.ell}, Weight{0, 0}},
                             "P(V) for a 4-dimensional U(2)-representation V"};
            m.u2_manifold_label = "P((C^2 (x) C_det^" + std::to_string(-c) + ") + C_det^" +
                                  std::to_string(-w.ell) + " + C)";
            m.gl2_variety_label = m.u2_manifold_label;
          },
          [&](const HalfReflPlusFamily& h) {
            const Weight ja = h.j * weights::kAlpha;
            m.total_space = {TotalSpaceKind::ProjectivizedBundle, {weights::kEps1, weights::kEps2, -ja},
                             "U(2) x_T P(V) over S^2 = U(2)/T"};
            const std::string v = "P(C^2 + C_" + weight_text(-ja) + ")";
            m.u2_manifold_label = "U(2) x_T " + v;
            m.gl2_variety_label = "GL(2) x_{B^-} " + v;
          },
          [&](const HalfReflMinusFamily& h) {
            const Weight ja = h.j * weights::kAlpha;
            m.total_space = {TotalSpaceKind::ProjectivizedBundle, {-weights::kEps1, -weights::kEps2, -ja},
                             "U(2) x_T P(V) over S^2 = U(2)/T"};
            const std::string v = "P((C^2)* + C_" + weight_text(-ja) + ")";
            m.u2_manifold_label = "U(2) x_T " + v;
            m.gl2_variety_label = "GL(2) x_{B^-} " + v;
          },
          [&](const ReflectionFamily&) {
            m.total_space = {TotalSpaceKind::OrientedGrassmannian, {}, "oriented 2-planes in R^5"};
            m.u2_manifold_label = "SO(5)/[SO(2)xSO(3)]";
            m.gl2_variety_label = "SO(5,C)/P";
          },
      },
      f);
  return m;
}

}  // namespace u2mp
