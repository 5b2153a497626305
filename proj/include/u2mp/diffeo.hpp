#pragma once

#include <cstdint>
#include <string>

#include "u2mp/classifier.hpp"

namespace u2mp {

enum class DiffType {
  ProjectiveSpace4,      ///< P(C^4)
  OrientedGrassmannian,  ///< oriented 2-planes in R^5
  TrivialP2Bundle,       ///< S^2 x P(C^3)
  NontrivialP2Bundle,    ///< non-trivial P(C^3)-bundle over S^2
};

const char* to_string(DiffType d);

/// First Chern number of the line bundle over S^2 with weights k1, k2 at
/// the two poles. Sign convention: +(k1 - k2).
std::int64_t line_bundle_chern(std::int64_t k1, std::int64_t k2);

/// (a1 + a2 - b1 - b2) mod 3 for the primitive rays (a1,b1), (a2,b2).
int chern_mod3(const Weight& r1, const Weight& r2);

/// chern_mod3 of the rays at vertex v. P must be a valid triangle of the
/// Delzant or half-reflection families; throws std::invalid_argument
/// otherwise or if v is not a vertex.
int chern_mod3_at_vertex(const Polygon& p, const RationalPoint& v);

/// Requires fam == classify_triangle(P); throws std::invalid_argument on a
/// mismatch.
DiffType diffeo_type(const TriangleFamily& fam, const Polygon& p);

}  // namespace u2mp
