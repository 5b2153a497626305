#include "u2mp/plot.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <optional>

#include "u2mp/kaehler.hpp"

namespace u2mp {

namespace {

constexpr double kUnit = 60.0;
constexpr double kPad = 1.0;

struct Frame {
  double xmin, xmax, ymin, ymax;

  [[nodiscard]] double px(double x) const { return (x - xmin) * kUnit; }
  [[nodiscard]] double py(double y) const { return (ymax - y) * kUnit; }
  [[nodiscard]] double width() const { return (xmax - xmin) * kUnit; }
  [[nodiscard]] double height() const { return (ymax - ymin) * kUnit; }
};

Frame frame_for(const std::vector<RationalPoint>& pts) {
  Frame f{pts[0].x.to_double(), pts[0].x.to_double(), pts[0].y.to_double(), pts[0].y.to_double()};
  for (const auto& p : pts) {
    f.xmin = std::min(f.xmin, p.x.to_double());
    f.xmax = std::max(f.xmax, p.x.to_double());
    f.ymin = std::min(f.ymin, p.y.to_double());
    f.ymax = std::max(f.ymax, p.y.to_double());
  }
  f.xmin -= kPad;
  f.xmax += kPad;
  f.ymin -= kPad;
  f.ymax += kPad;
  return f;
}

std::string points_attr(const Frame& f, const std::vector<RationalPoint>& vs) {
  std::string s;
  for (const auto& v : vs) {
    if (!s.empty()) s += ' ';
    s += fmt::format("{:.3f},{:.3f}", f.px(v.x.to_double()), f.py(v.y.to_double()));
  }
  return s;
}

std::string line(const Frame& f, const RationalPoint& a, const RationalPoint& b, const char* style) {
  return fmt::format("  <line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" {}/>\n", f.px(a.x.to_double()),
                     f.py(a.y.to_double()), f.px(b.x.to_double()), f.py(b.y.to_double()), style);
}

std::string shape(const Frame& f, const Polygon& p, const char* style) {
  if (p.size() == 1) {
    return fmt::format("  <circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3\" {}/>\n", f.px(p.vertex(0).x.to_double()),
                       f.py(p.vertex(0).y.to_double()), style);
  }
  const char* tag = p.size() == 2 ? "polyline" : "polygon";
  return fmt::format("  <{} points=\"{}\" {}/>\n", tag, points_attr(f, p.vertices()), style);
}

}  // namespace

std::string plot_svg(const Polygon& p, const PlotOverlays& ov) {
  std::optional<XRay> xr;
  std::optional<FixpointImages> fp;
  if (ov.xray) xr = build_xray(p);
  if (ov.fixpoints) fp = fixpoint_images(p);

  std::vector<RationalPoint> extent = p.vertices();
  if (ov.reflection || ov.xray) {
    for (const auto& v : p.vertices()) extent.push_back(weyl_reflect(v));
  }
  if (fp) extent.insert(extent.end(), fp->points().begin(), fp->points().end());
  const Frame f = frame_for(extent);

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.3f}\" height=\"{:.3f}\" viewBox=\"0 0 {:.3f} {:.3f}\">\n",
      f.width(), f.height(), f.width(), f.height());
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const double lo = std::max(f.xmin, f.ymin);
  const double hi = std::min(f.xmax, f.ymax);
  if (lo < hi) {
    out += fmt::format(
        "  <line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n",
        f.px(lo), f.py(lo), f.px(hi), f.py(hi));
  }

  if (ov.reflection) {
    std::vector<RationalPoint> refl;
    for (const auto& v : p.vertices()) refl.push_back(weyl_reflect(v));
    out += shape(f, convex_hull(refl), "fill=\"none\" stroke=\"steelblue\" stroke-dasharray=\"3,3\"");
  }

  out += shape(f, p, "fill=\"#e8e8e8\" stroke=\"black\" stroke-width=\"1.5\"");

  if (xr) {
    for (const auto& s : xr->strata) {
      out += line(f, s.from, s.to,
                  s.stratum_dimension == 4 ? "stroke=\"firebrick\" stroke-width=\"4\""
                                           : "stroke=\"darkred\" stroke-width=\"1.5\"");
    }
  }

  if (fp) {
    for (const auto& [q, m] : fp->distinct()) {
      const double x = f.px(q.x.to_double());
      const double y = f.py(q.y.to_double());
      out += fmt::format("  <circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"4\" fill=\"black\"/>\n", x, y);
      if (m > 1) {
        out += fmt::format("  <text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"12\" font-family=\"monospace\">{}</text>\n",
                           x + 6, y - 6, m);
      }
    }
  }

  out += "</svg>\n";
  return out;
}

}  // namespace u2mp
