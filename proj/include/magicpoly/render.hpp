#pragma once

// SVG figures of magic polygon structures, optionally labeled.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "magicpoly/structure.hpp"
#include "magicpoly/verify.hpp"

namespace magicpoly {

struct LayoutPoint {
  PointId point = 0;
  double x = 0.0;
  double y = 0.0;  // mathematical orientation, y up
};

/// Scale of ring t (1 = outermost) relative to the outer polygon.
inline double ring_scale(const StructureSpec& spec, int t) {
  const int rings = ring_count(spec);
  if (rings == 1) return 1.0;
  return 1.0 - 0.5 * (t - 1) / std::max(1, rings - 1);
}

namespace detail {

struct Vec2 {
  double x, y;
};

// Vertex m (0-based) of the unit regular n-gon, first vertex on top, running
// clockwise.
inline Vec2 unit_vertex(int n, int m) {
  const double a = std::numbers::pi / 2 - 2 * std::numbers::pi * m / n;
  return {std::cos(a), std::sin(a)};
}

inline Vec2 lerp(Vec2 a, Vec2 b, double f) {
  return {a.x + (b.x - a.x) * f, a.y + (b.y - a.y) * f};
}

}  // namespace detail

/// Coordinates of every point, indexed by PointId. P rings are concentric
/// regular n-gons around the origin. D rings are homothetic copies of the
/// outer polygon about the shared root vertex, which sits on top.
inline std::vector<LayoutPoint> layout(const IncidenceStructure& s) {
  validate(s.spec);
  const StructureSpec& spec = s.spec;
  const int n = spec.n;
  const int k = spec.k;
  std::vector<LayoutPoint> pts(s.point_count);
  for (PointId id = 0; id < s.point_count; ++id) pts[id].point = id;

  if (spec.family == Family::MagicP) {
    for (int t = 1; t <= ring_count(spec); ++t) {
      const double r = ring_scale(spec, t);
      for (int q = 1; q <= ring_length(spec); ++q) {
        const int edge = (q - 1) / k;
        const int j = (q - 1) % k;
        const auto a = detail::unit_vertex(n, edge);
        const auto b = detail::unit_vertex(n, (edge + 1) % n);
        const auto p = detail::lerp(a, b, static_cast<double>(j) / k);
        auto& lp = pts[point_id(spec, {t, q})];
        lp.x = r * p.x;
        lp.y = r * p.y;
      }
    }
  } else {
    const auto root = detail::unit_vertex(n, 0);
    pts[0].x = root.x;
    pts[0].y = root.y;
    for (int t = 1; t <= ring_count(spec); ++t) {
      const double r = ring_scale(spec, t);
      for (int q = 1; q <= ring_length(spec); ++q) {
        // Path vertices V_1..V_{n-1} follow the root clockwise.
        const int edge = (q - 1) / k;
        const int j = (q - 1) % k;
        const auto a = detail::unit_vertex(n, edge + 1);
        const auto p = j == 0 ? a
                              : detail::lerp(a, detail::unit_vertex(n, edge + 2),
                                             static_cast<double>(j) / k);
        auto& lp = pts[point_id(spec, {t, q})];
        lp.x = root.x + r * (p.x - root.x);
        lp.y = root.y + r * (p.y - root.y);
      }
    }
  }
  return pts;
}

namespace detail {

inline std::string fmt(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace detail

/// SVG 1.1 document: one polyline per segment, one circle per point and, when
/// a labeling is supplied, one text element per point.
inline std::string to_svg(const IncidenceStructure& s,
                          const std::optional<Labeling>& labeling = std::nullopt) {
  if (labeling) check_domain(s, *labeling);
  const auto pts = layout(s);
  auto xy = [&](PointId p) {
    return detail::fmt(pts[p].x) + "," + detail::fmt(-pts[p].y);
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "viewBox=\"-1.2 -1.2 2.4 2.4\" width=\"600\" height=\"600\">\n"
      << "<title>" << s.spec.to_string() << "</title>\n"
      << "<rect x=\"-1.2\" y=\"-1.2\" width=\"2.4\" height=\"2.4\" fill=\"white\"/>\n"
      << "<g id=\"segments\" fill=\"none\" stroke-width=\"0.008\">\n";
  const int rings = ring_count(s.spec);
  for (const auto& seg : s.segments) {
    std::vector<PointId> path = seg.points;
    if (seg.kind == SegmentKind::Central && s.spec.family == Family::MagicP) {
      // Stored outer..inner, center, outer..inner; draw the far half inward-out.
      std::reverse(path.begin() + rings + 1, path.end());
    }
    out << "<polyline class=\""
        << (seg.kind == SegmentKind::Edge ? "edge" : "central") << "\" stroke=\""
        << (seg.kind == SegmentKind::Edge ? "#1f3b73" : "#b0b0b0") << "\" points=\"";
    for (std::size_t i = 0; i < path.size(); ++i) {
      out << (i ? " " : "") << xy(path[i]);
    }
    out << "\"/>\n";
  }
  out << "</g>\n<g id=\"points\" stroke=\"#1f3b73\" stroke-width=\"0.006\">\n";
  for (const auto& p : pts) {
    out << "<circle cx=\"" << detail::fmt(p.x) << "\" cy=\"" << detail::fmt(-p.y)
        << "\" r=\"0.045\" fill=\"" << (p.point == 0 ? "#f2c14e" : "white")
        << "\"/>\n";
  }
  out << "</g>\n";
  if (labeling) {
    out << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"0.05\" "
           "text-anchor=\"middle\" dominant-baseline=\"central\">\n";
    for (const auto& p : pts) {
      out << "<text x=\"" << detail::fmt(p.x) << "\" y=\"" << detail::fmt(-p.y)
          << "\">" << (*labeling)[p.point] << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace magicpoly
