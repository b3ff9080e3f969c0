#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "generators.hpp"
#include "hexacent/centroid_bound.hpp"
#include "hexacent/steiner.hpp"

using namespace hexacent;
using Q = Rational;
using P = Point<Rational>;

namespace {

template <typename T>
std::vector<Point<T>> sorted(std::vector<Point<T>> v) {
    std::sort(v.begin(), v.end(), [](const Point<T>& p, const Point<T>& q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });
    return v;
}

Line<Q> random_axis(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-6, 6);
    while (true) {
        const int a = c(rng), b = c(rng);
        if (a == 0 && b == 0) continue;
        return Line<Q>(a, b, fraction(c(rng), 4));
    }
}

}  // namespace

TEST_CASE("symmetric bodies are fixed") {
    const ConvexPolygon<Q> sq({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(sorted(steiner_symmetrize(sq, Line<Q>(1, 0, 1)).vertices()) == sorted(sq.vertices()));

    const ConvexPolygon<Q> hex({{1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}, {2, 0}});
    CHECK(sorted(steiner_symmetrize(hex, Line<Q>(1, 0, 0)).vertices()) == sorted(hex.vertices()));
}

TEST_CASE("right triangle about the x-axis") {
    const ConvexPolygon<Q> tri({{0, 0}, {1, 0}, {0, 1}});
    const auto sym = steiner_symmetrize(tri, Line<Q>(0, 1, 0));
    CHECK(sorted(sym.vertices()) == sorted<Q>({{0, Q(1, 2)}, {0, Q(-1, 2)}, {1, 0}}));
}

TEST_CASE("oblique axis in floating mode agrees with the exact result") {
    const ConvexPolygon<Q> tri({{0, 0}, {3, 0}, {1, 2}});
    const Line<Q> axis(1, 1, 1);
    const auto exact = steiner_symmetrize(tri, axis);
    const auto approx = steiner_symmetrize(to_double(tri), Line<double>(1, 1, 1));
    REQUIRE(exact.size() == approx.size());
    for (const auto& v : exact.vertices()) {
        bool found = false;
        for (const auto& q : approx.vertices()) found |= std::hypot(q.x - to_double(v.x), q.y - to_double(v.y)) < 1e-12;
        CHECK(found);
    }
}

TEST_CASE("property: area, convexity, mirror symmetry and centroid under rational axes") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        const auto poly = gen::rational_polygon(rng);
        const auto axis = random_axis(rng);
        const auto sym = steiner_symmetrize(poly, axis);

        const auto before = area_and_centroid(poly);
        const auto after = area_and_centroid(sym);
        CHECK(after.area == before.area);

        // Strict convexity, checked independently of the constructor.
        const auto& v = sym.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(orient(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]) > 0);

        std::vector<P> mirrored;
        for (const auto& p : v) mirrored.push_back(reflect(p, axis));
        CHECK(sorted(mirrored) == sorted(v));

        const P dir{-axis.b, axis.a};
        CHECK(dot(after.centroid, dir) == dot(before.centroid, dir));
        CHECK(axis.eval(after.centroid) == 0);
    }
}

TEST_CASE("property: floating symmetrization keeps area and the axial centroid component") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 200; ++t) {
        const auto poly = gen::float_polygon(rng);
        const Line<double> axis(u(rng), u(rng), u(rng));
        if (std::hypot(axis.a, axis.b) < 0.1) continue;
        const auto sym = steiner_symmetrize(poly, axis);
        const auto before = area_and_centroid(poly);
        const auto after = area_and_centroid(sym);
        CHECK(std::fabs(after.area - before.area) <= 1e-10 * before.area);
        const Point<double> dir{-axis.b, axis.a};
        const double scale = diameter(poly) * std::hypot(axis.a, axis.b);
        CHECK(std::fabs(dot(after.centroid, dir) - dot(before.centroid, dir)) <= 1e-10 * scale);
        CHECK(std::fabs(axis.eval(after.centroid)) <= 1e-10 * scale);
    }
}

TEST_CASE("property: a symmetric convex subset stays inside the symmetrization") {
    const auto hex = AffineRegularHexagon<double>::canonical().vertices();
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const RandomBody body = random_body(seed, {Generator::Star, 12});
        const auto sym = steiner_symmetrize(body.polygon, Line<double>(1, 0, 0));
        for (const auto& a : hex) CHECK(contains(sym, a, 1e-9));
    }
}

TEST_CASE("property: symmetrizing about x = 0 keeps the height of the centroid and the verdict") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const RandomBody body = random_body(seed, {Generator::Star, 10});
        const auto sym = steiner_symmetrize(body.polygon, Line<double>(1, 0, 0));
        CHECK(std::fabs(area_and_centroid(sym).centroid.y - area_and_centroid(body.polygon).centroid.y) <= 1e-10);
        const auto hexagon = AffineRegularHexagon<double>::canonical();
        const auto before = check_theorem(body.polygon, hexagon, 4.0 / 21.0);
        const auto after = check_theorem(sym, hexagon, 4.0 / 21.0);
        if (before.contained) CHECK(after.contained);
    }
}

TEST_CASE("chord oracle") {
    const ChordOracle<Q> oracle(ConvexPolygon<Q>({{1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}, {2, 0}}).vertices());
    CHECK(oracle.y_min() == -1);
    CHECK(oracle.y_max() == 1);
    CHECK(oracle.length(0) == 4);
    CHECK(oracle.length(Q(1, 2)) == 3);
    CHECK(oracle.left(Q(-1, 2)) == Q(-3, 2));
    CHECK(oracle.breakpoints() == std::vector<Q>{-1, 0, 1});
}
