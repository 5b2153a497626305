#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "u2mp/lattice.hpp"
#include "u2mp/polygon.hpp"

namespace u2mp {

/// Edges of P whose inward primitive normal n has <alpha^vee, n> > 0.
/// Throws std::invalid_argument unless P is a valid momentum polytope.
std::vector<Edge> positive_edges(const Polygon& p);

struct KaehlerVerdict {
  bool kaehlerizable = true;
  /// First positive edge (counterclockwise) missing the wall vertex.
  std::optional<Edge> witness;
  friend bool operator==(const KaehlerVerdict&, const KaehlerVerdict&) = default;
};

/// With exactly one wall vertex v0, P is Kaehlerizable iff every positive
/// edge contains v0. Otherwise always true.
KaehlerVerdict is_kaehlerizable(const Polygon& p);

/// Images of the T-fixpoints under the T-momentum map, sorted, with
/// repetition.
class FixpointImages {
 public:
  FixpointImages() = default;
  explicit FixpointImages(std::vector<RationalPoint> pts);

  [[nodiscard]] const std::vector<RationalPoint>& points() const { return points_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] std::size_t multiplicity(const RationalPoint& q) const;
  /// Distinct points with their multiplicities, sorted.
  [[nodiscard]] std::vector<std::pair<RationalPoint, std::size_t>> distinct() const;

  friend bool operator==(const FixpointImages&, const FixpointImages&) = default;

 private:
  std::vector<RationalPoint> points_;
};

/// Interior vertex v -> {v, s(v)}; wall-edge cone -> {v}; half-reflection
/// cone -> {v, v}; reflection cone -> nothing.
FixpointImages fixpoint_images(const Polygon& p);

/// Every fixpoint image lies on the boundary of t_polytope(P). Requires one
/// wall vertex.
bool fixpoint_boundary_check(const Polygon& p);

enum class SegmentKind { Chord, Edge, ReflectedEdge, Cross };

const char* to_string(SegmentKind k);

struct XRaySegment {
  RationalPoint from;
  RationalPoint to;
  /// Real dimension of the stratum of M lying over the segment.
  int stratum_dimension = 2;
  SegmentKind kind = SegmentKind::Chord;
  friend bool operator==(const XRaySegment&, const XRaySegment&) = default;
};

struct XRay {
  /// v0 (the wall vertex), v1, ..., vn clockwise.
  std::vector<RationalPoint> labeled_vertices;
  FixpointImages fixpoint_images;
  std::vector<XRaySegment> strata;
  friend bool operator==(const XRay&, const XRay&) = default;
};

/// X-ray of the T-action for a valid polytope with exactly one wall vertex of
/// half-reflection or reflection type:
///  - chords (v_j, s(v_j)), 4-dimensional iff an edge at v_j is parallel to
///    alpha;
///  - half-reflection: all edges not parallel to alpha and their mirrors;
///  - reflection: edges (v_j, v_j+1), j >= 1, not parallel to alpha, their
///    mirrors, and the crosses (v_n, s(v_1)), (v_1, s(v_n)).
/// Throws std::invalid_argument otherwise.
XRay build_xray(const Polygon& p);

/// is_kaehlerizable(P) agrees with fixpoint_boundary_check(P).
bool atiyah_cross_check(const Polygon& p);

}  // namespace u2mp
