#include "hexacent/steiner.hpp"

#include <algorithm>

namespace hexacent {

template <typename T>
ChordOracle<T>::ChordOracle(const std::vector<Point<T>>& v) {
    const std::size_t n = v.size();
    if (n < 3) throw GeometryError(GeometryErrorKind::DegenerateInput, "chord oracle needs a polygon");

    // Rightmost lowest and rightmost highest vertices bound the right chain;
    // leftmost highest and leftmost lowest bound the left chain.
    auto pick = [&](bool lowest, bool rightmost) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i) {
            const Point<T>& p = v[i];
            const Point<T>& b = v[best];
            const bool further = lowest ? p.y < b.y : p.y > b.y;
            const bool tie_break = p.y == b.y && (rightmost ? p.x > b.x : p.x < b.x);
            if (further || tie_break) best = i;
        }
        return best;
    };
    const std::size_t bottom_right = pick(true, true), top_right = pick(false, true);
    const std::size_t top_left = pick(false, false), bottom_left = pick(true, false);
    y_min_ = v[bottom_right].y;
    y_max_ = v[top_right].y;

    for (std::size_t i = bottom_right;; i = (i + 1) % n) {
        right_chain_.push_back(v[i]);
        if (i == top_right) break;
    }
    for (std::size_t i = bottom_left;; i = (i + n - 1) % n) {
        left_chain_.push_back(v[i]);
        if (i == top_left) break;
    }

    breakpoints_.reserve(n);
    for (const auto& p : v) breakpoints_.push_back(p.y);
    std::sort(breakpoints_.begin(), breakpoints_.end());
    breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());
}

template <typename T>
T ChordOracle<T>::interpolate(const std::vector<Point<T>>& chain, const T& h) {
    if (chain.size() == 1) return chain.front().x;
    if (!(h > chain.front().y)) return chain.front().x;
    if (!(h < chain.back().y)) return chain.back().x;
    // first vertex strictly above h
    auto it = std::upper_bound(chain.begin(), chain.end(), h,
                               [](const T& value, const Point<T>& p) { return value < p.y; });
    const Point<T>& hi = *it;
    const Point<T>& lo = *(it - 1);
    if (hi.y == lo.y) return lo.x;
    const T t = (h - lo.y) / (hi.y - lo.y);
    return T(lo.x + t * (hi.x - lo.x));
}

template <typename T>
Point<T> reflect(const Point<T>& p, const Line<T>& axis) {
    const T norm2 = axis.a * axis.a + axis.b * axis.b;
    const T k = 2 * axis.eval(p) / norm2;
    return {T(p.x - k * axis.a), T(p.y - k * axis.b)};
}

template <typename T>
ConvexPolygon<T> steiner_symmetrize(const ConvexPolygon<T>& poly, const Line<T>& axis) {
    // Similarity (x, y) -> (a x + b y - c, -b x + a y): the axis becomes x = 0
    // and chords perpendicular to it become horizontal.
    AffineMap<T> to_frame;
    to_frame.m11 = axis.a;
    to_frame.m12 = axis.b;
    to_frame.m21 = -axis.b;
    to_frame.m22 = axis.a;
    to_frame.tx = -axis.c;
    to_frame.ty = 0;
    const AffineMap<T> from_frame = to_frame.inverse();

    const ConvexPolygon<T> framed = apply_map(to_frame, poly);
    const ChordOracle<T> chords(framed.vertices());
    const auto& levels = chords.breakpoints();

    std::vector<Point<T>> out;
    out.reserve(2 * levels.size());
    for (const auto& h : levels) out.push_back({T(chords.length(h) / 2), h});
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) out.push_back({T(-(chords.length(*it) / 2)), *it});

    return apply_map(from_frame, ConvexPolygon<T>(std::move(out)));
}

template class ChordOracle<double>;
template class ChordOracle<Rational>;
template ConvexPolygon<double> steiner_symmetrize(const ConvexPolygon<double>&, const Line<double>&);
template ConvexPolygon<Rational> steiner_symmetrize(const ConvexPolygon<Rational>&, const Line<Rational>&);
template Point<double> reflect(const Point<double>&, const Line<double>&);
template Point<Rational> reflect(const Point<Rational>&, const Line<Rational>&);

}  // namespace hexacent
