#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hexacent/geometry.hpp"

namespace hexacent {

class InscriptionFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Affine image of the regular hexagon: vertices c+u, c+v, c+v-u, c-u, c-v,
/// c+u-v in counterclockwise order.
template <typename T>
struct AffineRegularHexagon {
    Point<T> center;
    Point<T> u;
    Point<T> v;

    // Swaps u and v when they are clockwise; throws DegenerateInput when parallel.
    AffineRegularHexagon(Point<T> center_, Point<T> u_, Point<T> v_);

    static AffineRegularHexagon canonical();

    // a_1 .. a_6 at indices 0 .. 5.
    std::array<Point<T>, 6> vertices() const;
    ConvexPolygon<T> polygon() const;
    // Affine map sending this hexagon onto the canonical one.
    AffineMap<T> to_canonical() const;
};

// Outer vertex i (1-based index i at position i-1): intersection of the lines
// a_i a_{i+1} and a_{i-1} a_{i-2}.
template <typename T>
std::array<Point<T>, 6> outer_vertices(const AffineRegularHexagon<T>& h);

template <typename T>
struct Star {
    // a6, ā1, a1, ā2, a2, ā3, a3, ā4, a4, ā5, a5, ā6 (simple, not convex).
    std::vector<Point<T>> ring;
    // T_i = a_{i-1} ā_i a_i for i = 1..6.
    std::vector<ConvexPolygon<T>> wings;
};

template <typename T>
Star<T> star(const AffineRegularHexagon<T>& h);

// Point-in-star test (closed), exact for rationals.
template <typename T>
bool star_contains(const Star<T>& s, const AffineRegularHexagon<T>& h, const Point<T>& p);

struct HexagonFit {
    AffineRegularHexagon<double> hexagon;
    double residual = 0;  // max vertex distance to the boundary of A over diam(A)
    AffineMap<double> to_canonical;
    double theta = 0;     // chord direction at which the search converged
};

// Max over the six vertices of the distance to the boundary of A, over diam(A).
double fit_residual(const ConvexPolygon<double>& body, const AffineRegularHexagon<double>& h);

// Finds an affine-regular hexagon with all six vertices on the boundary of A.
HexagonFit inscribe(const ConvexPolygon<double>& body);

// Rounds a floating fit to nearby rationals and keeps it if every vertex lies
// exactly on the boundary of the rational body.
std::optional<AffineRegularHexagon<Rational>> snap_exact(const AffineRegularHexagon<double>& h,
                                                         const ConvexPolygon<Rational>& body);

AffineRegularHexagon<double> to_double(const AffineRegularHexagon<Rational>& h);
AffineRegularHexagon<Rational> to_exact(const AffineRegularHexagon<double>& h);

}  // namespace hexacent
