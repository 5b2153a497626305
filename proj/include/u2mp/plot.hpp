#pragma once

#include <string>

#include "u2mp/polygon.hpp"

namespace u2mp {

struct PlotOverlays {
  bool reflection = false;
  bool xray = false;
  bool fixpoints = false;
};

/// SVG drawing of P with the dashed wall and the requested overlays. Output
/// is byte-for-byte deterministic. Throws std::invalid_argument when an
/// overlay's preconditions fail (x-ray and fixpoints need a valid momentum
/// polytope, x-ray additionally one non-wall-edge wall vertex).
std::string plot_svg(const Polygon& p, const PlotOverlays& overlays);

}  // namespace u2mp
