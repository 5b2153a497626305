#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "u2mp/lattice.hpp"
#include "u2mp/polygon.hpp"

namespace u2mp {

// Cone types allowed at a vertex on the wall. Each names the unordered pair
// of primitive rays it stands for.

/// {e1+e2, k(e1+e2)+e1}
struct WallEdgePlus {
  std::int64_t k = 0;
  friend bool operator==(const WallEdgePlus&, const WallEdgePlus&) = default;
};
/// {-(e1+e2), k(e1+e2)+e1}
struct WallEdgeMinus {
  std::int64_t k = 0;
  friend bool operator==(const WallEdgeMinus&, const WallEdgeMinus&) = default;
};
/// {alpha, j*alpha+e1}, j >= 0
struct HalfReflPlus {
  std::int64_t j = 0;
  friend bool operator==(const HalfReflPlus&, const HalfReflPlus&) = default;
};
/// {alpha, j*alpha-e2}, j >= 0
struct HalfReflMinus {
  std::int64_t j = 0;
  friend bool operator==(const HalfReflMinus&, const HalfReflMinus&) = default;
};
/// {j*alpha+e1, j*alpha-e2}, j >= 0
struct Reflection {
  std::int64_t j = 0;
  friend bool operator==(const Reflection&, const Reflection&) = default;
};

using WallVertexType = std::variant<WallEdgePlus, WallEdgeMinus, HalfReflPlus, HalfReflMinus, Reflection>;

std::string type_name(const WallVertexType& t);
/// The two rays the type stands for.
std::pair<Weight, Weight> rays_of(const WallVertexType& t);

/// Matches an unordered ray pair against the five wall-cone families.
/// std::nullopt means the pair fits none of them.
std::optional<WallVertexType> classify_wall_rays(const Weight& r1, const Weight& r2);

struct InteriorDelzant {
  friend bool operator==(const InteriorDelzant&, const InteriorDelzant&) = default;
};
struct WallCone {
  WallVertexType type;
  friend bool operator==(const WallCone&, const WallCone&) = default;
};
struct InvalidVertex {
  int condition = 0;
  std::string reason;
  friend bool operator==(const InvalidVertex&, const InvalidVertex&) = default;
};
using VertexKind = std::variant<InteriorDelzant, WallCone, InvalidVertex>;

struct VertexAnalysis {
  RationalPoint vertex;
  std::pair<Weight, Weight> rays;
  bool on_wall = false;
  VertexKind kind;
  friend bool operator==(const VertexAnalysis&, const VertexAnalysis&) = default;
};

struct ConditionFailure {
  int condition = 0;
  std::string reason;
  friend bool operator==(const ConditionFailure&, const ConditionFailure&) = default;
};

struct ClassificationReport {
  bool valid = false;
  std::vector<VertexAnalysis> vertex_data;
  std::vector<ConditionFailure> failures;

  /// Rationality holds for every representable polygon.
  static constexpr bool kRationalByConstruction = true;

  [[nodiscard]] bool condition_holds(int id) const;
  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Decides whether P is the momentum polytope of a multiplicity free
/// U(2)-manifold with trivial principal isotropy. Conditions:
///  1. P is 2-dimensional;
///  2. P is rational (always true here);
///  3. rays at every vertex off the wall form a lattice basis;
///  4. rays at every wall vertex match one of the five wall-cone types.
/// Throws ChamberError if P leaves the chamber.
ClassificationReport check_momentum_polytope(const Polygon& p);

// Triangle families. Each reconstructs its triangle exactly through
// family_triangle().

/// r(-e2) + s(e1+e2) + t*conv(0, delta_1, delta_2) with
/// delta_i = a_i(-e2) + b_i e1, a1*b2 - a2*b1 = 1, a_i + b_i >= 0.
struct DelzantFamily {
  Rational r, s, t;
  std::int64_t a1 = 0, b1 = 0, a2 = 0, b2 = 0;
  [[nodiscard]] Weight delta1() const { return {b1, -a1}; }
  [[nodiscard]] Weight delta2() const { return {b2, -a2}; }
  friend bool operator==(const DelzantFamily&, const DelzantFamily&) = default;
};
/// s(e1+e2) + t*conv(0, l(e1+e2), k(e1+e2)+e1).
struct WallEdgeFamily {
  Rational s, t;
  std::int64_t k = 0;
  int ell = 1;
  friend bool operator==(const WallEdgeFamily&, const WallEdgeFamily&) = default;
};
/// s(e1+e2) + t*conv(0, alpha, j*alpha+e1).
struct HalfReflPlusFamily {
  Rational s, t;
  std::int64_t j = 0;
  friend bool operator==(const HalfReflPlusFamily&, const HalfReflPlusFamily&) = default;
};
/// s(e1+e2) + t*conv(0, alpha, j*alpha-e2).
struct HalfReflMinusFamily {
  Rational s, t;
  std::int64_t j = 0;
  friend bool operator==(const HalfReflMinusFamily&, const HalfReflMinusFamily&) = default;
};
/// s(e1+e2) + t*conv(0, e1, -e2).
struct ReflectionFamily {
  Rational s, t;
  friend bool operator==(const ReflectionFamily&, const ReflectionFamily&) = default;
};

using TriangleFamily =
    std::variant<DelzantFamily, WallEdgeFamily, HalfReflPlusFamily, HalfReflMinusFamily, ReflectionFamily>;

std::string family_name(const TriangleFamily& f);
/// 1..5 in the order Delzant, wall edge, half-reflection +, -, reflection.
int family_case(const TriangleFamily& f);

/// Throws std::invalid_argument on out-of-range parameters.
Polygon family_triangle(const TriangleFamily& f);

/// Recognizes the family of a valid triangle and extracts canonical
/// parameters:
///  - no wall vertex: Delzant, base = vertex of minimal coroot pairing
///    (lexicographically smallest on ties), delta_1/delta_2 counterclockwise;
///  - two wall vertices: wall edge, base = the smaller wall vertex, so l = +1;
///  - one wall vertex: half-reflection or reflection by its cone type.
/// Throws std::invalid_argument unless P is a valid triangle.
TriangleFamily classify_triangle(const Polygon& p);

enum class TotalSpaceKind { ProjectivizedBundle, ProjectiveRepresentation, OrientedGrassmannian };

struct TotalSpace {
  TotalSpaceKind kind = TotalSpaceKind::ProjectivizedBundle;
  /// Fiber weights of the bundle U(2) x_T P(V) over the 2-sphere, or the
  /// weights of the 4-dimensional representation. Empty for the Grassmannian.
  std::vector<Weight> weights;
  std::string description;
  friend bool operator==(const TotalSpace&, const TotalSpace&) = default;
};

struct LocalModel {
  RationalPoint vertex;
  WallVertexType type;
  int table_case = 0;
  std::string variety;
  friend bool operator==(const LocalModel&, const LocalModel&) = default;
};

struct ManifoldModel {
  TriangleFamily family;
  TotalSpace total_space;
  std::string u2_manifold_label;
  std::string gl2_variety_label;
  std::vector<LocalModel> local_models;
  friend bool operator==(const ManifoldModel&, const ManifoldModel&) = default;
};

ManifoldModel manifold_model(const TriangleFamily& f);

/// Smooth affine spherical GL(2)-variety realizing the wall cone, with its
/// case number in the classification of such varieties.
LocalModel local_model(const RationalPoint& vertex, const WallVertexType& t);

}  // namespace u2mp
