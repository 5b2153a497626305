#include "u2mp/diffeo.hpp"

#include <stdexcept>

namespace u2mp {

const char* to_string(DiffType d) {
  switch (d) {
    case DiffType::ProjectiveSpace4: return "ProjectiveSpace4";
    case DiffType::OrientedGrassmannian: return "OrientedGrassmannian";
    case DiffType::TrivialP2Bundle: return "TrivialP2Bundle";
    case DiffType::NontrivialP2Bundle: return "NontrivialP2Bundle";
  }
  return "?";
}

std::int64_t line_bundle_chern(std::int64_t k1, std::int64_t k2) { return k1 - k2; }

int chern_mod3(const Weight& r1, const Weight& r2) {
  // Each ray contributes the Chern number of the line bundle with weights
  // a and b at the poles.
  const std::int64_t c = line_bundle_chern(r1.a, r1.b) + line_bundle_chern(r2.a, r2.b);
  return static_cast<int>(((c % 3) + 3) % 3);
}

int chern_mod3_at_vertex(const Polygon& p, const RationalPoint& v) {
  const TriangleFamily fam = classify_triangle(p);
  if (std::holds_alternative<WallEdgeFamily>(fam) || std::holds_alternative<ReflectionFamily>(fam)) {
    throw std::invalid_argument("chern_mod3_at_vertex: family " + family_name(fam) + " carries no bundle residue");
  }
  if (!p.has_vertex(v)) throw std::invalid_argument("chern_mod3_at_vertex: " + to_string(v) + " is not a vertex");
  const auto [r1, r2] = vertex_rays(p, v);
  return chern_mod3(r1, r2);
}

DiffType diffeo_type(const TriangleFamily& fam, const Polygon& p) {
  if (!(classify_triangle(p) == fam)) {
    throw std::invalid_argument("diffeo_type: " + family_name(fam) + " parameters do not describe " + to_string(p));
  }
  if (std::holds_alternative<WallEdgeFamily>(fam)) return DiffType::ProjectiveSpace4;
  if (std::holds_alternative<ReflectionFamily>(fam)) return DiffType::OrientedGrassmannian;
  const auto [r1, r2] = vertex_rays(p, p.vertex(0));
  return chern_mod3(r1, r2) == 0 ? DiffType::TrivialP2Bundle : DiffType::NontrivialP2Bundle;
}

}  // namespace u2mp
