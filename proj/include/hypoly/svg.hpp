#pragma once

// Static SVG figure in the Klein disk: the unit circle, a polygon and
// optionally a cycle traced through its vertices.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>

#include "hypoly/area.hpp"
#include "hypoly/construct.hpp"

namespace hypoly {

struct CycleTrace {
  Cycle cycle;
  /// Parameters of the polygon vertices on the anchored cycle.
  std::span<const double> params;
};

namespace detail {

inline constexpr double kCanvas = 800.0;
inline constexpr double kHalf = 400.0;
inline constexpr double kRadius = 380.0;
inline constexpr int kTraceSamples = 256;

inline void svg_point(std::ostream &os, const KleinPoint &p) {
  os << kHalf + kRadius * p.xi << ',' << kHalf - kRadius * p.eta;
}

}  // namespace detail

inline void write_svg(std::ostream &os, const Polygon &poly, const std::optional<CycleTrace> &trace = std::nullopt) {
  using detail::kCanvas, detail::kHalf, detail::kRadius;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
     << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <circle cx=\"" << kHalf << "\" cy=\"" << kHalf << "\" r=\"" << kRadius
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  if (trace) {
    double lo = -std::numbers::pi;
    double hi = std::numbers::pi;
    if (trace->cycle.type != CycleType::DistanceCircle) {
      double reach = 0.0;
      for (double t : trace->params) {
        reach = std::max(reach, std::abs(t));
      }
      lo = -(reach + 4.0);
      hi = reach + 4.0;
    }
    os << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"";
    for (int i = 0; i < detail::kTraceSamples; ++i) {
      const double t = lo + (hi - lo) * i / (detail::kTraceSamples - 1);
      if (i > 0) {
        os << ' ';
      }
      detail::svg_point(os, project(anchored_cycle_point(trace->cycle, t)));
    }
    os << "\"/>\n";
  }

  os << "  <path fill=\"rgba(220,80,60,0.15)\" stroke=\"firebrick\" stroke-width=\"2\" d=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    os << (i == 0 ? "M" : " L");
    detail::svg_point(os, poly.vertex(i));
  }
  os << " Z\"/>\n";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const KleinPoint v = poly.vertex(i);
    os << "  <circle cx=\"" << kHalf + kRadius * v.xi << "\" cy=\"" << kHalf - kRadius * v.eta
       << "\" r=\"3\" fill=\"firebrick\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace hypoly
