#pragma once

#include <vector>

#include "hexacent/geometry.hpp"

namespace hexacent {

/// Horizontal chord queries on a convex polygon: x-range of P ∩ {y = h}.
///
/// The boundary is split into a right chain and a left chain, both strictly
/// monotone in y, so each query is a binary search plus one interpolation.
/// Exact for rational polygons.
template <typename T>
class ChordOracle {
public:
    explicit ChordOracle(const std::vector<Point<T>>& ccw_vertices);

    const T& y_min() const { return y_min_; }
    const T& y_max() const { return y_max_; }

    // Requires y_min <= h <= y_max.
    T left(const T& h) const { return interpolate(left_chain_, h); }
    T right(const T& h) const { return interpolate(right_chain_, h); }
    T length(const T& h) const { return T(right(h) - left(h)); }

    // Distinct vertex heights in increasing order; chord length is affine between them.
    const std::vector<T>& breakpoints() const { return breakpoints_; }

private:
    static T interpolate(const std::vector<Point<T>>& chain, const T& h);

    T y_min_{}, y_max_{};
    std::vector<Point<T>> right_chain_;  // increasing y
    std::vector<Point<T>> left_chain_;   // increasing y
    std::vector<T> breakpoints_;
};

// Steiner symmetrization about `axis`: every chord perpendicular to the axis is
// slid along itself until its midpoint lies on the axis. Works exactly for any
// rational axis because the reduction to the axis x = 0 uses a similarity with
// rational entries.
template <typename T>
ConvexPolygon<T> steiner_symmetrize(const ConvexPolygon<T>& poly, const Line<T>& axis);

// Mirror image across a line.
template <typename T>
Point<T> reflect(const Point<T>& p, const Line<T>& axis);

}  // namespace hexacent
