#pragma once

// Brute-force reference checker for integral polygons. Deliberately shares
// nothing with the library: plain int64 arithmetic, its own hull, and the
// admissible wall cones listed as explicit sets instead of pattern matching.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using P = std::pair<std::int64_t, std::int64_t>;

/// Gift-wrapping hull, counterclockwise, no collinear points.
std::vector<P> hull(std::vector<P> pts);

struct Verdict {
  bool dim2 = false;
  bool interior_ok = true;  // condition 3
  bool wall_ok = true;      // condition 4
  int wall_vertices = 0;
  [[nodiscard]] bool valid() const { return dim2 && interior_ok && wall_ok; }
};

/// Conditions 1, 3 and 4 for conv(pts); pts must lie in x >= y, and all
/// coordinates must be bounded by `bound` in absolute value.
Verdict check(const std::vector<P>& pts, std::int64_t bound);

/// With one wall vertex: every edge whose inward normal n has n.x > n.y
/// contains it. Otherwise true. Requires a valid polygon.
bool kaehler(const std::vector<P>& pts);

}  // namespace oracle
