#include "u2mp/selftest.hpp"

#include <algorithm>
#include <exception>
#include <random>

#include "u2mp/census.hpp"
#include "u2mp/classifier.hpp"
#include "u2mp/diffeo.hpp"
#include "u2mp/kaehler.hpp"

namespace u2mp {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok && r_.failures.size() < 20) r_.failures.push_back(what);
  }

  SuiteResult done() { return std::move(r_); }

 private:
  SuiteResult r_;
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }
  Rational rational() { return {integer(-60, 60), integer(1, 12)}; }
  Rational positive() { return {integer(1, 40), integer(1, 9)}; }
  RationalPoint point() { return {rational(), rational()}; }
  Weight weight() { return {integer(-30, 30), integer(-30, 30)}; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

Polygon hull(std::initializer_list<std::pair<std::int64_t, std::int64_t>> pts) {
  std::vector<RationalPoint> v;
  for (const auto& [x, y] : pts) v.emplace_back(Rational(x), Rational(y));
  return convex_hull(v);
}

RationalPoint pt(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

SuiteResult lattice_suite(const SelftestOptions& opt) {
  Suite s("lattice invariants");
  Gen g(opt.seed);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const RationalPoint v = g.point();
    s.check(weyl_reflect(weyl_reflect(v)) == v, "reflection involution at " + to_string(v));
    s.check(coroot_pairing(weyl_reflect(v)) == -coroot_pairing(v), "pairing sign flip at " + to_string(v));
    if (!v.is_zero()) {
      const Weight r = primitive_ray(v);
      s.check(is_primitive(r), "primitive_ray not primitive at " + to_string(v));
      s.check(primitive_ray(RationalPoint(r)) == r, "primitive_ray idempotence at " + to_string(v));
      s.check(primitive_ray(g.positive() * v) == r, "primitive_ray homogeneity at " + to_string(v));
    }
    const Weight u = g.weight(), w = g.weight();
    s.check(determinant(u, w) == -determinant(w, u), "determinant antisymmetry");
    s.check(is_lattice_basis(u, w) == is_lattice_basis(w, u), "basis test symmetry");
    s.check(weyl_reflect(weyl_reflect(u)) == u, "weight reflection involution");
  }
  return s.done();
}

SuiteResult polygon_suite(const SelftestOptions& opt) {
  Suite s("polygon invariants");
  Gen g(opt.seed + 1);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    std::vector<RationalPoint> pts(static_cast<std::size_t>(g.integer(1, 7)));
    for (auto& p : pts) p = g.point();
    const Polygon h = convex_hull(pts);
    s.check(convex_hull(h.vertices()) == h, "hull idempotence for " + to_string(h));
    std::shuffle(pts.begin(), pts.end(), g.engine());
    s.check(convex_hull(pts) == h, "hull order-insensitivity for " + to_string(h));
    const Polygon pt_h = t_polytope(h);
    std::vector<RationalPoint> refl;
    for (const auto& v : pt_h.vertices()) refl.push_back(weyl_reflect(v));
    s.check(convex_hull(refl) == pt_h, "t_polytope reflection symmetry for " + to_string(h));
    const Rational sh = g.rational(), sc = g.positive();
    const Polygon back = transform(transform(h, sh, sc), -sh / sc, Rational(1) / sc);
    s.check(back == h, "transform inverse for " + to_string(h));
    if (dimension(h) == 2) {
      for (const auto& v : h.vertices()) {
        const auto [r1, r2] = vertex_rays(h, v);
        s.check(determinant(r1, r2) > 0, "vertex rays orientation at " + to_string(v));
      }
    }
  }
  return s.done();
}

SuiteResult classifier_suite(const SelftestOptions& opt) {
  Suite s("classifier fixtures");
  s.check(classify_wall_rays({1, 1}, {3, 2}) == WallVertexType{WallEdgePlus{opt.inject_fault ? 3 : 2}},
          "{(1,1),(3,2)} is WallEdgePlus{2}");
  s.check(classify_wall_rays({1, -1}, {4, -3}) == WallVertexType{HalfReflPlus{3}}, "{(1,-1),(4,-3)} is HalfReflPlus{3}");
  s.check(classify_wall_rays({1, 0}, {0, -1}) == WallVertexType{Reflection{0}}, "{(1,0),(0,-1)} is Reflection{0}");
  s.check(!classify_wall_rays({1, 1}, {1, -1}).has_value(), "{(1,1),(1,-1)} is invalid");
  s.check(check_momentum_polytope(hull({{0, 0}, {1, 0}, {0, -1}, {3, -1}})).valid, "trapezoid valid");
  {
    const auto rep = check_momentum_polytope(hull({{0, 0}, {2, 2}}));
    s.check(!rep.valid && !rep.condition_holds(1), "segment fails condition 1");
  }
  s.check(classify_triangle(hull({{0, 0}, {1, 1}, {3, 2}})) == TriangleFamily{WallEdgeFamily{0, 1, 2, 1}},
          "wall-edge triangle parameters");
  s.check(classify_triangle(hull({{0, 0}, {1, -1}, {4, -3}})) == TriangleFamily{HalfReflPlusFamily{0, 1, 3}},
          "half-reflection triangle parameters");
  s.check(classify_triangle(hull({{1, 0}, {0, -1}, {0, -2}})) == TriangleFamily{DelzantFamily{1, 0, 1, 1, 0, -1, 1}},
          "Delzant triangle parameters");
  // Family round trip.
  for (std::int64_t k = -3; k <= 3; ++k) {
    for (int l : {1, -1}) {
      const Polygon p = family_triangle(WallEdgeFamily{1, 2, k, l});
      const auto f = classify_triangle(p);
      s.check(family_triangle(f) == p, "wall-edge round trip k=" + std::to_string(k));
    }
  }
  for (std::int64_t j = 0; j <= 4; ++j) {
    for (const TriangleFamily& f : {TriangleFamily{HalfReflPlusFamily{-1, 2, j}}, TriangleFamily{HalfReflMinusFamily{-1, 2, j}}}) {
      s.check(classify_triangle(family_triangle(f)) == f, family_name(f) + " round trip j=" + std::to_string(j));
    }
  }
  s.check(classify_triangle(family_triangle(ReflectionFamily{0, 1})) == TriangleFamily{ReflectionFamily{0, 1}},
          "reflection round trip");
  return s.done();
}

SuiteResult kaehler_suite() {
  Suite s("kaehler fixtures");
  const Polygon wood = hull({{0, 0}, {1, 0}, {0, -1}, {3, -1}});
  {
    const auto v = is_kaehlerizable(wood);
    s.check(!v.kaehlerizable && v.witness && find_edge(wood, pt(1, 0), pt(3, -1)) != Polygon::npos &&
                ((v.witness->tail == pt(1, 0) && v.witness->head == pt(3, -1)) ||
                 (v.witness->tail == pt(3, -1) && v.witness->head == pt(1, 0))),
            "trapezoid witness edge");
  }
  s.check(!is_kaehlerizable(hull({{0, 0}, {1, 0}, {1, -1}, {3, -1}})).kaehlerizable, "second trapezoid");
  const Polygon left_w = hull({{2, 2}, {5, 2}, {5, 1}, {2, 1}});
  const Polygon right_w = hull({{2, 2}, {3, 2}, {5, 1}, {2, 1}});
  const Polygon left_m = hull({{2, 2}, {5, 2}, {5, 0}, {4, 0}});
  const Polygon right_m = hull({{2, 2}, {3, 2}, {5, 1}, {3, 1}});
  for (const auto* p : {&left_w, &left_m}) {
    s.check(fixpoint_boundary_check(*p) && is_kaehlerizable(*p).kaehlerizable, "boundary fixture " + to_string(*p));
  }
  for (const auto* p : {&right_w, &right_m}) {
    s.check(!fixpoint_boundary_check(*p) && !is_kaehlerizable(*p).kaehlerizable, "interior fixture " + to_string(*p));
  }
  for (const auto* p : {&left_w, &right_w, &left_m, &right_m}) s.check(atiyah_cross_check(*p), "atiyah " + to_string(*p));
  s.check(fixpoint_images(hull({{0, 0}, {1, 0}, {0, -1}})) ==
              FixpointImages({pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)}),
          "reflection triangle fixpoints");
  s.check(t_polytope(hull({{0, 0}, {1, 0}, {0, -1}})) == hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
          "reflection triangle square");
  s.check(fixpoint_images(hull({{0, 0}, {1, 1}, {3, 2}})) == FixpointImages({pt(3, 2), pt(2, 3), pt(1, 1), pt(0, 0)}),
          "wall-edge triangle fixpoints");
  for (std::int64_t j = 0; j <= 4; ++j) {
    const Polygon p = family_triangle(HalfReflPlusFamily{-1, 1, j});
    const FixpointImages want({pt(-1, -1), pt(-1, -1), pt(0, -2), pt(-2, 0), pt(j, -j - 1), pt(-j - 1, j)});
    s.check(fixpoint_images(p) == want, "half-reflection fixpoints j=" + std::to_string(j));
  }
  return s.done();
}

SuiteResult diffeo_suite() {
  Suite s("diffeomorphism fixtures");
  s.check(line_bundle_chern(4, 4) == 0 && line_bundle_chern(1, 0) == 1 && line_bundle_chern(0, -3) == 3,
          "line bundle Chern numbers");
  const Polygon j3 = hull({{0, 0}, {1, -1}, {4, -3}});
  const Polygon j1 = hull({{0, 0}, {1, -1}, {2, -1}});
  s.check(chern_mod3_at_vertex(j3, pt(0, 0)) == 0, "j=3 residue");
  s.check(chern_mod3_at_vertex(j1, pt(0, 0)) == 2, "j=1 residue");
  s.check(chern_mod3_at_vertex(hull({{1, 0}, {0, -1}, {0, -2}}), pt(0, -1)) == 1, "Delzant residue");
  const auto type = [](const Polygon& p) { return diffeo_type(classify_triangle(p), p); };
  s.check(type(hull({{0, 0}, {1, 1}, {3, 2}})) == DiffType::ProjectiveSpace4, "wall edge is P(C^4)");
  s.check(type(hull({{0, 0}, {1, 0}, {0, -1}})) == DiffType::OrientedGrassmannian, "reflection is the Grassmannian");
  s.check(type(j3) == DiffType::TrivialP2Bundle, "j=3 is the trivial bundle");
  s.check(type(j1) == DiffType::NontrivialP2Bundle, "j=1 is the nontrivial bundle");
  return s.done();
}

SuiteResult census_suite(const SelftestOptions& opt) {
  Suite s("census determinism");
  for (const CensusOptions& co : {CensusOptions{2, 1, CensusShape::Triangles}, CensusOptions{1, 2, CensusShape::Triangles},
                                  CensusOptions{1, 1, CensusShape::All}}) {
    const auto a = census_serial(co);
    const auto b = census_parallel(co, opt.threads);
    const auto c = census_parallel(co, 1);
    const std::string tag = std::string(to_string(co.shape)) + " m=" + std::to_string(co.max_coord) +
                            " d=" + std::to_string(co.denominator);
    s.check(a.items == b.items && a.summary == b.summary, "serial vs parallel " + tag);
    s.check(census_summary_json(b.summary) == census_summary_json(c.summary), "thread count invariance " + tag);
    const auto& m = a.summary;
    s.check(m.classify_mismatches == 0, "classify succeeds exactly on valid triangles " + tag);
    s.check(m.triangles_not_kaehler == 0, "valid triangles are Kaehlerizable " + tag);
    s.check(m.chern_vertex_dependent == 0, "Chern residue vertex independence " + tag);
    s.check(m.atiyah_disagreements == 0, "Kaehler verdict matches fixpoint boundary check " + tag);
    s.check(m.triangle_fixpoint_hull_mismatches == 0, "triangle fixpoints span the T-polytope " + tag);
  }
  return s.done();
}

}  // namespace

bool SelftestResult::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& r) { return r.passed(); });
}

SelftestResult run_selftest(const SelftestOptions& opt) {
  SelftestResult r;
  const auto run = [&](const char* name, auto&& suite) {
    try {
      r.suites.push_back(suite());
    } catch (const std::exception& e) {
      r.suites.push_back({name, 1, {std::string("threw: ") + e.what()}});
    }
  };
  run("lattice invariants", [&] { return lattice_suite(opt); });
  run("polygon invariants", [&] { return polygon_suite(opt); });
  run("classifier fixtures", [&] { return classifier_suite(opt); });
  run("kaehler fixtures", [] { return kaehler_suite(); });
  run("diffeomorphism fixtures", [] { return diffeo_suite(); });
  run("census determinism", [&] { return census_suite(opt); });
  return r;
}

}  // namespace u2mp
