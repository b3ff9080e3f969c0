#include "hexacent/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace hexacent {

namespace {

template <typename T>
double squared_extent(std::span<const Point<T>> pts) {
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto pi = to_double(pts[i]);
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const auto pj = to_double(pts[j]);
            const double dx = pi.x - pj.x, dy = pi.y - pj.y;
            best = std::max(best, dx * dx + dy * dy);
        }
    }
    return best;
}

// Sign of an orientation value with the collinearity tolerance of the mode:
// exact zero test for rationals, |cross| <= 1e-12 * diam^2 for binary64.
template <typename T>
int tolerant_sign(const T& value, double scale2) {
    if constexpr (is_exact_v<T>) {
        (void)scale2;
        return sgn(value);
    } else {
        const double tol = 1e-12 * scale2;
        if (value > tol) return 1;
        if (value < -tol) return -1;
        return 0;
    }
}

template <typename T>
bool same_point(const Point<T>& a, const Point<T>& b, double scale2) {
    if constexpr (is_exact_v<T>) {
        (void)scale2;
        return a == b;
    } else {
        const double dx = a.x - b.x, dy = a.y - b.y;
        return dx * dx + dy * dy <= 1e-24 * scale2;
    }
}

// Upper half-plane of directions (angle in [0, pi)).
template <typename T>
bool upper_half(const Point<T>& d) {
    return d.y > 0 || (d.y == 0 && d.x > 0);
}

template <typename T>
bool angle_less(const Point<T>& a, const Point<T>& b) {
    const bool ua = upper_half(a), ub = upper_half(b);
    if (ua != ub) return ua;
    return cross(a, b) > 0;
}

std::string triple_message(std::size_t i, std::size_t j, std::size_t k, const char* why) {
    std::ostringstream os;
    os << "polygon is not convex: " << why << " at input vertices (" << i << ", " << j << ", " << k << ")";
    return os.str();
}

}  // namespace

Point<Rational> to_exact(const Point<double>& p) {
    return {exact_from_double(p.x), exact_from_double(p.y)};
}

template <typename T>
Line<T>::Line(T a_, T b_, T c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a == 0 && b == 0) throw GeometryError(GeometryErrorKind::InvalidLine, "line normal (a, b) is zero");
    if constexpr (!is_exact_v<T>) {
        if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
            throw GeometryError(GeometryErrorKind::InvalidLine, "line coefficients must be finite");
        }
    }
}

template <typename T>
Line<T> Line<T>::through(const Point<T>& p, const Point<T>& q) {
    if (p == q) throw GeometryError(GeometryErrorKind::InvalidLine, "line through coincident points");
    T a = q.y - p.y;
    T b = p.x - q.x;
    T c = a * p.x + b * p.y;
    return Line(std::move(a), std::move(b), std::move(c));
}

template <typename T>
ConvexPolygon<T>::ConvexPolygon(std::vector<Point<T>> input) {
    if constexpr (!is_exact_v<T>) {
        for (const auto& p : input) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                throw GeometryError(GeometryErrorKind::DegenerateInput, "polygon vertex is not finite");
            }
        }
    }
    const double scale2 = squared_extent<T>(input);

    std::vector<std::size_t> ids;
    {
        // consecutive duplicates, cyclically
        std::vector<Point<T>> kept;
        kept.reserve(input.size());
        for (std::size_t i = 0; i < input.size(); ++i) {
            if (!kept.empty() && same_point(kept.back(), input[i], scale2)) continue;
            kept.push_back(input[i]);
            ids.push_back(i);
        }
        while (kept.size() > 1 && same_point(kept.back(), kept.front(), scale2)) {
            kept.pop_back();
            ids.pop_back();
        }
        input = std::move(kept);
    }
    if (input.size() < 3) {
        throw GeometryError(GeometryErrorKind::DegenerateInput, "polygon needs at least 3 distinct vertices");
    }

    const T area2 = signed_area<T>(input);
    const int orientation = tolerant_sign(area2, scale2);
    if (orientation == 0) throw GeometryError(GeometryErrorKind::DegenerateInput, "polygon has zero area");
    if (orientation < 0) {
        std::reverse(input.begin(), input.end());
        std::reverse(ids.begin(), ids.end());
    }

    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t n = input.size();
        if (n < 3) break;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
            const Point<T> e1 = input[i] - input[prev];
            const Point<T> e2 = input[next] - input[i];
            const int turn = tolerant_sign(cross(e1, e2), scale2);
            if (turn < 0) {
                throw GeometryError(GeometryErrorKind::NotConvex,
                                    triple_message(ids[prev], ids[i], ids[next], "reflex turn"));
            }
            if (turn == 0) {
                if (dot(e1, e2) < 0) {
                    throw GeometryError(GeometryErrorKind::NotConvex,
                                        triple_message(ids[prev], ids[i], ids[next], "edge folds back"));
                }
                input.erase(input.begin() + static_cast<std::ptrdiff_t>(i));
                ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (input.size() < 3) throw GeometryError(GeometryErrorKind::DegenerateInput, "polygon is degenerate");

    // All left turns; a convex polygon's edge directions wind around exactly once.
    const std::size_t n = input.size();
    std::size_t wraps = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point<T> d1 = input[(i + 1) % n] - input[i];
        const Point<T> d2 = input[(i + 2) % n] - input[(i + 1) % n];
        if (angle_less(d2, d1)) ++wraps;
    }
    if (wraps != 1) {
        throw GeometryError(GeometryErrorKind::NotConvex,
                            triple_message(ids[0], ids[1 % n], ids[2 % n], "boundary winds more than once"));
    }
    vertices_ = std::move(input);
}

template <typename T>
const Point<T>& ConvexPolygon<T>::vertex(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
    return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

template <typename T>
AffineMap<T> AffineMap<T>::from_frames(const Point<T>& p0, const Point<T>& e1, const Point<T>& e2,
                                       const Point<T>& q0, const Point<T>& f1, const Point<T>& f2) {
    const T det = cross(e1, e2);
    if (det == 0) throw GeometryError(GeometryErrorKind::SingularMap, "source frame is degenerate");
    // L = [f1 f2] * [e1 e2]^-1
    const T i11 = e2.y / det, i12 = -e2.x / det;
    const T i21 = -e1.y / det, i22 = e1.x / det;
    AffineMap m;
    m.m11 = f1.x * i11 + f2.x * i21;
    m.m12 = f1.x * i12 + f2.x * i22;
    m.m21 = f1.y * i11 + f2.y * i21;
    m.m22 = f1.y * i12 + f2.y * i22;
    const Point<T> lp = m.apply_linear(p0);
    m.tx = q0.x - lp.x;
    m.ty = q0.y - lp.y;
    return m;
}

template <typename T>
AffineMap<T> AffineMap<T>::inverse() const {
    const T det = determinant();
    if (det == 0) throw GeometryError(GeometryErrorKind::SingularMap, "affine map is singular");
    AffineMap inv;
    inv.m11 = m22 / det;
    inv.m12 = -m12 / det;
    inv.m21 = -m21 / det;
    inv.m22 = m11 / det;
    inv.tx = -(inv.m11 * tx + inv.m12 * ty);
    inv.ty = -(inv.m21 * tx + inv.m22 * ty);
    return inv;
}

template <typename T>
AffineMap<T> AffineMap<T>::compose(const AffineMap& inner) const {
    AffineMap r;
    r.m11 = m11 * inner.m11 + m12 * inner.m21;
    r.m12 = m11 * inner.m12 + m12 * inner.m22;
    r.m21 = m21 * inner.m11 + m22 * inner.m21;
    r.m22 = m21 * inner.m12 + m22 * inner.m22;
    const Point<T> t = apply({inner.tx, inner.ty});
    r.tx = t.x;
    r.ty = t.y;
    return r;
}

template <typename T>
ConvexPolygon<T> convex_hull(std::vector<Point<T>> points) {
    std::sort(points.begin(), points.end(), [](const Point<T>& a, const Point<T>& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) {
        throw GeometryError(GeometryErrorKind::DegenerateInput, "convex hull needs at least 3 distinct points");
    }
    const double scale2 = squared_extent<T>(points);

    // Andrew's monotone chain, dropping collinear boundary points.
    std::vector<Point<T>> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && tolerant_sign(orient(hull[k - 2], hull[k - 1], p), scale2) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
        const auto& p = points[i];
        while (k >= lower && tolerant_sign(orient(hull[k - 2], hull[k - 1], p), scale2) <= 0) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    if (hull.size() < 3) {
        throw GeometryError(GeometryErrorKind::DegenerateInput, "all points are collinear");
    }
    return ConvexPolygon<T>(std::move(hull));
}

template <typename T>
T signed_area(std::span<const Point<T>> ring) {
    T twice{0};
    if (ring.empty()) return twice;
    const Point<T>& o = ring[0];
    for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
        twice += cross(ring[i] - o, ring[i + 1] - o);
    }
    return T(twice / 2);
}

template <typename T>
AreaCentroid<T> area_and_centroid(const ConvexPolygon<T>& poly) {
    const auto& v = poly.vertices();
    const Point<T>& o = v[0];
    T twice{0}, sx{0}, sy{0};
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const Point<T> p = v[i] - o, q = v[i + 1] - o;
        const T c = cross(p, q);
        twice += c;
        sx += (p.x + q.x) * c;
        sy += (p.y + q.y) * c;
    }
    AreaCentroid<T> out;
    out.area = twice / 2;
    out.centroid = {T(o.x + sx / (3 * twice)), T(o.y + sy / (3 * twice))};
    return out;
}

template <typename T>
Point<T> composite_centroid(std::span<const AreaCentroid<T>> parts) {
    if (parts.empty()) throw GeometryError(GeometryErrorKind::EmptyInput, "composite centroid of no parts");
    T total{0}, sx{0}, sy{0};
    for (const auto& part : parts) {
        if (!(part.area > 0)) {
            throw GeometryError(GeometryErrorKind::DegenerateInput, "composite part with non-positive area");
        }
        total += part.area;
        sx += part.area * part.centroid.x;
        sy += part.area * part.centroid.y;
    }
    return {T(sx / total), T(sy / total)};
}

template <typename T>
Point<T> line_intersect(const Line<T>& l1, const Line<T>& l2) {
    const T det = l1.a * l2.b - l2.a * l1.b;
    bool parallel = det == 0;
    if constexpr (!is_exact_v<T>) {
        const double n1 = std::hypot(l1.a, l1.b), n2 = std::hypot(l2.a, l2.b);
        parallel = std::abs(det) <= 1e-12 * n1 * n2;
    }
    if (parallel) throw GeometryError(GeometryErrorKind::Parallel, "lines are parallel");
    return {T((l1.c * l2.b - l2.c * l1.b) / det), T((l1.a * l2.c - l2.a * l1.c) / det)};
}

template <typename T>
std::optional<ConvexPolygon<T>> clip_halfplane(const ConvexPolygon<T>& poly, const Line<T>& line,
                                               HalfPlane keep) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    auto side = [&](const Point<T>& p) {
        T s = line.eval(p);
        return keep == HalfPlane::NonPositive ? s : T(-s);
    };
    std::vector<Point<T>> out;
    out.reserve(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        const Point<T>& p = v[i];
        const Point<T>& q = v[(i + 1) % n];
        const T sp = side(p), sq = side(q);
        if (sp <= 0) out.push_back(p);
        if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) {
            const T t = sp / (sp - sq);
            out.push_back(p + t * (q - p));
        }
    }
    if (out.size() < 3) return std::nullopt;
    try {
        return convex_hull(std::move(out));
    } catch (const GeometryError& e) {
        if (e.kind() == GeometryErrorKind::DegenerateInput) return std::nullopt;
        throw;
    }
}

template <typename T>
ConvexPolygon<T> homothet(const ConvexPolygon<T>& poly, const T& ratio, const Point<T>& center) {
    if (!(ratio > 0)) throw GeometryError(GeometryErrorKind::NonPositiveRatio, "homothety ratio must be positive");
    std::vector<Point<T>> out;
    out.reserve(poly.size());
    for (const auto& p : poly.vertices()) out.push_back(center + ratio * (p - center));
    return ConvexPolygon<T>(std::move(out));
}

template <typename T>
T gauge(const ConvexPolygon<T>& body, const Point<T>& center, const Point<T>& p) {
    const auto& v = body.vertices();
    const Point<T> d = p - center;
    T best{0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point<T> e = v[(i + 1) % v.size()] - v[i];
        const Point<T> normal{e.y, T(-e.x)};  // outward for CCW
        const T reach = dot(normal, v[i] - center);
        if (!(reach > 0)) {
            throw GeometryError(GeometryErrorKind::DegenerateInput, "gauge center is not interior to the body");
        }
        const T t = dot(normal, d) / reach;
        if (t > best) best = t;
    }
    return best;
}

template <typename T>
ConvexPolygon<T> apply_map(const AffineMap<T>& map, const ConvexPolygon<T>& poly) {
    if (map.determinant() == 0) throw GeometryError(GeometryErrorKind::SingularMap, "affine map is singular");
    std::vector<Point<T>> out;
    out.reserve(poly.size());
    for (const auto& p : poly.vertices()) out.push_back(map.apply(p));
    return ConvexPolygon<T>(std::move(out));
}

template <typename T>
std::pair<Line<T>, Line<T>> supporting_cone(const ConvexPolygon<T>& poly, std::size_t index) {
    if (index >= poly.size()) throw GeometryError(GeometryErrorKind::OutOfRange, "vertex index out of range");
    const auto i = static_cast<std::ptrdiff_t>(index);
    const Point<T>& v = poly.vertex(i);
    return {Line<T>::through(poly.vertex(i - 1), v), Line<T>::through(v, poly.vertex(i + 1))};
}

template <typename T>
bool contains(const ConvexPolygon<T>& poly, const Point<T>& p) {
    const auto& v = poly.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (orient(v[i], v[(i + 1) % v.size()], p) < 0) return false;
    }
    return true;
}

bool contains(const ConvexPolygon<double>& poly, const Point<double>& p, double tol) {
    const auto& v = poly.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point<double> e = v[(i + 1) % v.size()] - v[i];
        if (orient(v[i], v[(i + 1) % v.size()], p) < -tol * std::hypot(e.x, e.y)) return false;
    }
    return true;
}

bool on_boundary(const ConvexPolygon<Rational>& poly, const Point<Rational>& p) {
    if (!contains(poly, p)) return false;
    const auto& v = poly.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(orient(v[i], v[(i + 1) % v.size()], p)) == 0) return true;
    }
    return false;
}

double boundary_distance(const ConvexPolygon<double>& poly, const Point<double>& p) {
    const auto& v = poly.vertices();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point<double> a = v[i], b = v[(i + 1) % v.size()];
        const Point<double> e = b - a;
        double t = dot(p - a, e) / dot(e, e);
        t = std::clamp(t, 0.0, 1.0);
        const Point<double> q = a + t * e;
        best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
    }
    return best;
}

double diameter(const ConvexPolygon<double>& poly) {
    return std::sqrt(squared_extent<double>(poly.vertices()));
}

double min_width(const ConvexPolygon<double>& poly) {
    const auto& v = poly.vertices();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point<double> a = v[i], e = v[(i + 1) % v.size()] - a;
        const double len = std::hypot(e.x, e.y);
        double reach = 0.0;
        for (const auto& q : v) reach = std::max(reach, cross(e, q - a) / len);
        best = std::min(best, reach);
    }
    return best;
}

ConvexPolygon<double> to_double(const ConvexPolygon<Rational>& poly) {
    std::vector<Point<double>> out;
    out.reserve(poly.size());
    for (const auto& p : poly.vertices()) out.push_back(to_double(p));
    return ConvexPolygon<double>(std::move(out));
}

ConvexPolygon<Rational> to_exact(const ConvexPolygon<double>& poly) {
    std::vector<Point<Rational>> out;
    out.reserve(poly.size());
    for (const auto& p : poly.vertices()) out.push_back(to_exact(p));
    return ConvexPolygon<Rational>(std::move(out));
}

AffineMap<Rational> to_exact(const AffineMap<double>& m) {
    AffineMap<Rational> r;
    r.m11 = exact_from_double(m.m11);
    r.m12 = exact_from_double(m.m12);
    r.m21 = exact_from_double(m.m21);
    r.m22 = exact_from_double(m.m22);
    r.tx = exact_from_double(m.tx);
    r.ty = exact_from_double(m.ty);
    return r;
}

AffineMap<double> to_double(const AffineMap<Rational>& m) {
    return {m.m11.get_d(), m.m12.get_d(), m.m21.get_d(), m.m22.get_d(), m.tx.get_d(), m.ty.get_d()};
}

#define HEXACENT_INSTANTIATE(T)                                                                          \
    template struct Line<T>;                                                                             \
    template class ConvexPolygon<T>;                                                                     \
    template struct AffineMap<T>;                                                                        \
    template ConvexPolygon<T> convex_hull(std::vector<Point<T>>);                                        \
    template AreaCentroid<T> area_and_centroid(const ConvexPolygon<T>&);                                 \
    template T signed_area(std::span<const Point<T>>);                                                   \
    template Point<T> composite_centroid(std::span<const AreaCentroid<T>>);                              \
    template Point<T> line_intersect(const Line<T>&, const Line<T>&);                                    \
    template std::optional<ConvexPolygon<T>> clip_halfplane(const ConvexPolygon<T>&, const Line<T>&,     \
                                                            HalfPlane);                                  \
    template ConvexPolygon<T> homothet(const ConvexPolygon<T>&, const T&, const Point<T>&);              \
    template T gauge(const ConvexPolygon<T>&, const Point<T>&, const Point<T>&);                         \
    template ConvexPolygon<T> apply_map(const AffineMap<T>&, const ConvexPolygon<T>&);                   \
    template std::pair<Line<T>, Line<T>> supporting_cone(const ConvexPolygon<T>&, std::size_t);         \
    template bool contains(const ConvexPolygon<T>&, const Point<T>&);

HEXACENT_INSTANTIATE(double)
HEXACENT_INSTANTIATE(Rational)

#undef HEXACENT_INSTANTIATE

}  // namespace hexacent
