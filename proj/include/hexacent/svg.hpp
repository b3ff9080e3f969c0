#pragma once

#include <optional>
#include <string>

#include "hexacent/geometry.hpp"
#include "hexacent/hexagon.hpp"

namespace hexacent {

struct Overlays {
    bool hexagon = false;
    bool star = false;
    bool outer_vertices = false;
    bool centroid = false;
    bool homothet = false;      // the hexagon scaled by 4/21 about its center
    bool construction = false;  // u, m1, m2 of the heptagon family, when w is defined
};

constexpr int kCanvasWidth = 800;
constexpr int kCanvasHeight = 450;

// Byte-for-byte deterministic: fixed canvas, fixed element order, three
// decimals. The view fits the star of the hexagon (or the body when no
// hexagon is given) with 5% padding.
std::string render_svg(const ConvexPolygon<double>& body, const std::optional<AffineRegularHexagon<double>>& hexagon,
                       const Overlays& overlays);

}  // namespace hexacent
