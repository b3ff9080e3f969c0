#include "hexacent/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "hexacent/centroid_bound.hpp"

namespace hexacent {

namespace {

struct View {
    double scale = 1, ox = 0, oy = 0;

    // World y grows upward, canvas y downward.
    Point<double> map(const Point<double>& p) const { return {ox + scale * p.x, oy - scale * p.y}; }
};

View fit(const std::vector<Point<double>>& pts) {
    double x0 = pts.front().x, x1 = x0, y0 = pts.front().y, y1 = y0;
    for (const auto& p : pts) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    const double pad_x = 0.05 * (x1 - x0), pad_y = 0.05 * (y1 - y0);
    x0 -= pad_x, x1 += pad_x, y0 -= pad_y, y1 += pad_y;
    View v;
    v.scale = std::min(kCanvasWidth / (x1 - x0), kCanvasHeight / (y1 - y0));
    v.ox = 0.5 * kCanvasWidth - v.scale * 0.5 * (x0 + x1);
    v.oy = 0.5 * kCanvasHeight + v.scale * 0.5 * (y0 + y1);
    return v;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string path(const View& view, const std::vector<Point<double>>& ring, bool closed) {
    std::string d;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point<double> q = view.map(ring[i]);
        d += (i == 0 ? "M" : " L") + num(q.x) + "," + num(q.y);
    }
    if (closed) d += " Z";
    return d;
}

void point_label(std::ostringstream& os, const View& view, const Point<double>& p, const std::string& label,
                 const std::string& cls) {
    const Point<double> q = view.map(p);
    os << "  <circle class=\"" << cls << "\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\"2.5\"/>\n";
    os << "  <text class=\"label\" x=\"" << num(q.x + 4) << "\" y=\"" << num(q.y - 4) << "\">" << label << "</text>\n";
}

}  // namespace

std::string render_svg(const ConvexPolygon<double>& body, const std::optional<AffineRegularHexagon<double>>& hexagon,
                       const Overlays& overlays) {
    std::vector<Point<double>> extent = body.vertices();
    std::optional<Star<double>> st;
    if (hexagon) {
        st = star(*hexagon);
        extent.insert(extent.end(), st->ring.begin(), st->ring.end());
    }
    const View view = fit(extent);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvasWidth << "\" height=\"" << kCanvasHeight
       << "\" viewBox=\"0 0 " << kCanvasWidth << " " << kCanvasHeight << "\">\n";
    os << "  <style>path{fill:none;stroke-width:1.5}.body{stroke:#000;fill:#eee}.hexagon{stroke:#1f4e9c}"
          ".star{stroke:#888;stroke-dasharray:4 3}.homothet{stroke:#b03a2e}.vertex{fill:#1f4e9c}"
          ".outer{fill:#888}.construction{fill:#2e7d32}.centroid{fill:#b03a2e}"
          ".label{font:11px sans-serif}</style>\n";
    os << "  <path class=\"body\" d=\"" << path(view, body.vertices(), true) << "\"/>\n";

    if (hexagon && overlays.star) os << "  <path class=\"star\" d=\"" << path(view, st->ring, true) << "\"/>\n";
    if (hexagon && overlays.hexagon) {
        const auto vs = hexagon->vertices();
        os << "  <path class=\"hexagon\" d=\"" << path(view, {vs.begin(), vs.end()}, true) << "\"/>\n";
        for (int i = 0; i < 6; ++i) point_label(os, view, vs[static_cast<std::size_t>(i)], "a" + std::to_string(i + 1), "vertex");
    }
    if (hexagon && overlays.outer_vertices) {
        const auto outer = outer_vertices(*hexagon);
        for (int i = 0; i < 6; ++i)
            point_label(os, view, outer[static_cast<std::size_t>(i)], "b" + std::to_string(i + 1), "outer");
    }
    if (hexagon && overlays.homothet) {
        const ConvexPolygon<double> small = homothet(hexagon->polygon(), 4.0 / 21.0, hexagon->center);
        os << "  <path class=\"homothet\" d=\"" << path(view, small.vertices(), true) << "\"/>\n";
    }
    if (hexagon && overlays.construction) {
        try {
            const AffineMap<double> to_canon = hexagon->to_canonical();
            const double w = support_parameter_w(apply_map(to_canon, body));
            const AffineMap<double> back = to_canon.inverse();
            const Point<double> m1 = point_m1(w);
            point_label(os, view, back.apply({0, w}), "u", "construction");
            point_label(os, view, back.apply(m1), "m1", "construction");
            point_label(os, view, back.apply({-m1.x, m1.y}), "m2", "construction");
        } catch (const GeometryError&) {
            // Not in the heptagon family's normal form; nothing to draw.
        }
    }
    if (overlays.centroid) {
        const Point<double> c = area_and_centroid(body).centroid;
        const Point<double> q = view.map(c);
        os << "  <circle class=\"centroid\" data-x=\"" << to_string(c.x) << "\" data-y=\"" << to_string(c.y)
           << "\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\"3.5\"/>\n";
        os << "  <text class=\"label\" x=\"" << num(q.x + 5) << "\" y=\"" << num(q.y - 5) << "\">cen</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace hexacent
