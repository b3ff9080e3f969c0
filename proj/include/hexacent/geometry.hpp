#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hexacent/rational.hpp"

namespace hexacent {

enum class GeometryErrorKind {
    DegenerateInput,
    NotConvex,
    Parallel,
    NonPositiveRatio,
    SingularMap,
    EmptyInput,
    InvalidLine,
    NotCanonical,
    OutOfRange,
};

class GeometryError : public std::runtime_error {
public:
    GeometryError(GeometryErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    GeometryErrorKind kind() const noexcept { return kind_; }

private:
    GeometryErrorKind kind_;
};

template <typename T>
struct Point {
    T x{};
    T y{};

    friend Point operator+(const Point& a, const Point& b) { return {T(a.x + b.x), T(a.y + b.y)}; }
    friend Point operator-(const Point& a, const Point& b) { return {T(a.x - b.x), T(a.y - b.y)}; }
    friend Point operator-(const Point& a) { return {T(-a.x), T(-a.y)}; }
    friend Point operator*(const T& s, const Point& p) { return {T(s * p.x), T(s * p.y)}; }
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

template <typename T>
T cross(const Point<T>& a, const Point<T>& b) {
    return T(a.x * b.y - a.y * b.x);
}

template <typename T>
T dot(const Point<T>& a, const Point<T>& b) {
    return T(a.x * b.x + a.y * b.y);
}

// Twice the signed area of triangle abc; positive for a left turn.
template <typename T>
T orient(const Point<T>& a, const Point<T>& b, const Point<T>& c) {
    return cross(b - a, c - a);
}

template <typename T>
Point<double> to_double(const Point<T>& p) {
    return {to_double(p.x), to_double(p.y)};
}

Point<Rational> to_exact(const Point<double>& p);

/// The line {p : a*x + b*y = c}.
template <typename T>
struct Line {
    T a{};
    T b{};
    T c{};

    Line() = default;
    Line(T a_, T b_, T c_);

    static Line through(const Point<T>& p, const Point<T>& q);

    // a*x + b*y - c; negative on the "below" side.
    T eval(const Point<T>& p) const { return T(a * p.x + b * p.y - c); }
};

enum class HalfPlane {
    NonPositive,  // a*x + b*y <= c
    NonNegative,  // a*x + b*y >= c
};

template <typename T>
class ConvexPolygon {
public:
    // Validates convexity, normalizes to CCW and prunes duplicate and collinear
    // vertices. Throws GeometryError(NotConvex) naming the offending input
    // triple, or DegenerateInput when nothing with positive area remains.
    explicit ConvexPolygon(std::vector<Point<T>> vertices);

    const std::vector<Point<T>>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const Point<T>& operator[](std::size_t i) const { return vertices_[i]; }
    const Point<T>& vertex(std::ptrdiff_t i) const;  // cyclic index

    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    std::vector<Point<T>> vertices_;
};

template <typename T>
struct AreaCentroid {
    T area{};
    Point<T> centroid{};
};

template <typename T>
struct AffineMap {
    T m11{1}, m12{0}, m21{0}, m22{1}, tx{0}, ty{0};

    static AffineMap identity() { return AffineMap{}; }
    // Map with p0 -> q0, p0 + e1 -> q0 + f1, p0 + e2 -> q0 + f2.
    static AffineMap from_frames(const Point<T>& p0, const Point<T>& e1, const Point<T>& e2,
                                 const Point<T>& q0, const Point<T>& f1, const Point<T>& f2);

    T determinant() const { return T(m11 * m22 - m12 * m21); }
    Point<T> apply(const Point<T>& p) const {
        return {T(m11 * p.x + m12 * p.y + tx), T(m21 * p.x + m22 * p.y + ty)};
    }
    Point<T> apply_linear(const Point<T>& v) const {
        return {T(m11 * v.x + m12 * v.y), T(m21 * v.x + m22 * v.y)};
    }
    AffineMap inverse() const;
    // (this ∘ inner)(p) = this(inner(p))
    AffineMap compose(const AffineMap& inner) const;
};

template <typename T>
ConvexPolygon<T> convex_hull(std::vector<Point<T>> points);

template <typename T>
AreaCentroid<T> area_and_centroid(const ConvexPolygon<T>& poly);

// Shoelace area of an arbitrary simple polygon (signed, CCW positive).
template <typename T>
T signed_area(std::span<const Point<T>> ring);

template <typename T>
Point<T> composite_centroid(std::span<const AreaCentroid<T>> parts);

template <typename T>
Point<T> line_intersect(const Line<T>& l1, const Line<T>& l2);

template <typename T>
std::optional<ConvexPolygon<T>> clip_halfplane(const ConvexPolygon<T>& poly, const Line<T>& line,
                                               HalfPlane keep);

template <typename T>
ConvexPolygon<T> homothet(const ConvexPolygon<T>& poly, const T& ratio, const Point<T>& center);

// Minkowski gauge of p with respect to `body` scaled about `center`, which must
// be an interior point of body.
template <typename T>
T gauge(const ConvexPolygon<T>& body, const Point<T>& center, const Point<T>& p);

template <typename T>
ConvexPolygon<T> apply_map(const AffineMap<T>& map, const ConvexPolygon<T>& poly);

// The two extreme supporting lines at vertex `index`: through the vertex and
// each of its neighbours (previous first).
template <typename T>
std::pair<Line<T>, Line<T>> supporting_cone(const ConvexPolygon<T>& poly, std::size_t index);

// Closed containment; the floating version accepts points within tol of the boundary.
template <typename T>
bool contains(const ConvexPolygon<T>& poly, const Point<T>& p);
bool contains(const ConvexPolygon<double>& poly, const Point<double>& p, double tol);

// Exact test that p lies on the boundary of poly.
bool on_boundary(const ConvexPolygon<Rational>& poly, const Point<Rational>& p);

double boundary_distance(const ConvexPolygon<double>& poly, const Point<double>& p);
double diameter(const ConvexPolygon<double>& poly);
double min_width(const ConvexPolygon<double>& poly);

ConvexPolygon<double> to_double(const ConvexPolygon<Rational>& poly);
ConvexPolygon<Rational> to_exact(const ConvexPolygon<double>& poly);

AffineMap<Rational> to_exact(const AffineMap<double>& map);
AffineMap<double> to_double(const AffineMap<Rational>& map);

}  // namespace hexacent
