#include <doctest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "hexacent/centroid_bound.hpp"
#include "hexacent/hexagon.hpp"

using namespace hexacent;
using Q = Rational;
using P = Point<Rational>;

namespace {

double dist(const Point<double>& a, const Point<double>& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Independent predicate: six points in ccw order form an affine-regular
// hexagon iff opposite vertices are symmetric about a common center and
// a2 - a1 = a3 - center.
bool affine_regular(const std::array<Point<double>, 6>& a, double tol) {
    const Point<double> c = 0.5 * (a[0] + a[3]);
    for (int i = 0; i < 3; ++i)
        if (dist(0.5 * (a[i] + a[i + 3]), c) > tol) return false;
    return dist(a[1] - a[0], a[2] - c) <= tol && orient(a[0], a[1], a[2]) > 0;
}

}  // namespace

TEST_CASE("disk: the inscribed hexagon is nearly regular") {
    std::vector<Point<double>> ring;
    for (int k = 0; k < 96; ++k) ring.push_back({std::cos(2 * M_PI * k / 96), std::sin(2 * M_PI * k / 96)});
    const ConvexPolygon<double> disk(ring);
    const HexagonFit fit = inscribe(disk);
    CHECK(fit.residual <= 1e-7);
    const double lu = std::hypot(fit.hexagon.u.x, fit.hexagon.u.y), lv = std::hypot(fit.hexagon.v.x, fit.hexagon.v.y);
    CHECK(lu == doctest::Approx(1).epsilon(2e-3));
    CHECK(lv == doctest::Approx(1).epsilon(2e-3));
    const double angle = std::acos(dot(fit.hexagon.u, fit.hexagon.v) / (lu * lv));
    CHECK(angle == doctest::Approx(M_PI / 3).epsilon(5e-3));
    CHECK(affine_regular(fit.hexagon.vertices(), 1e-9));
}

TEST_CASE("square: six vertices on the boundary") {
    const ConvexPolygon<double> sq({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    const HexagonFit fit = inscribe(sq);
    CHECK(fit.residual <= 1e-7);
    for (const auto& a : fit.hexagon.vertices()) CHECK(boundary_distance(sq, a) <= 1e-7 * diameter(sq));
    CHECK(affine_regular(fit.hexagon.vertices(), 1e-9));

    // The family member quoted as an example satisfies the same predicate.
    const AffineRegularHexagon<double> member({0, 0}, {1, 0}, {0, 1});
    CHECK(fit_residual(sq, member) == 0);
    CHECK(affine_regular(member.vertices(), 0));
}

TEST_CASE("canonical hexagon is its own inscribed hexagon") {
    const auto canon = AffineRegularHexagon<double>::canonical();
    const HexagonFit fit = inscribe(canon.polygon());
    CHECK(fit.residual <= 1e-7);
    CHECK(dist(fit.hexagon.center, {0, 0}) <= 1e-7);
    for (const auto& a : fit.hexagon.vertices()) {
        double best = 1e9;
        for (const auto& b : canon.vertices()) best = std::min(best, dist(a, b));
        CHECK(best <= 1e-7);
    }
    const auto snapped = snap_exact(fit.hexagon, to_exact(canon.polygon()));
    REQUIRE(snapped);
    CHECK(snapped->polygon() == AffineRegularHexagon<Q>::canonical().polygon());
}

TEST_CASE("hexagon vertices and orientation") {
    const auto h = AffineRegularHexagon<Q>::canonical();
    const auto v = h.vertices();
    CHECK(v[0] == P{1, 1});
    CHECK(v[1] == P{-1, 1});
    CHECK(v[2] == P{-2, 0});
    CHECK(v[3] == P{-1, -1});
    CHECK(v[4] == P{1, -1});
    CHECK(v[5] == P{2, 0});
    // Clockwise frames are swapped.
    const AffineRegularHexagon<Q> cw({0, 0}, {-1, 1}, {1, 1});
    CHECK(cw.u == P{1, 1});
    CHECK_THROWS_AS(AffineRegularHexagon<Q>({0, 0}, {1, 1}, {2, 2}), GeometryError);
}

TEST_CASE("outer vertices") {
    const auto outer = outer_vertices(AffineRegularHexagon<Q>::canonical());
    CHECK(outer[1] == P{0, 2});
    CHECK(outer[0] == P{3, 1});
    for (int i = 0; i < 3; ++i) CHECK(outer[static_cast<std::size_t>(i + 3)] == -outer[static_cast<std::size_t>(i)]);

    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
        const P c{gen::rational_in(rng, -3, 3), gen::rational_in(rng, -3, 3)};
        const P u{gen::rational_in(rng, -3, 3), gen::rational_in(rng, -3, 3)};
        const P w{gen::rational_in(rng, -3, 3), gen::rational_in(rng, -3, 3)};
        if (cross(u, w) == 0) continue;
        const AffineRegularHexagon<Q> h(c, u, w);
        const auto o = outer_vertices(h);
        for (int i = 0; i < 3; ++i)
            CHECK(o[static_cast<std::size_t>(i + 3)] == Q(2) * h.center - o[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("star of the canonical hexagon") {
    const auto s = star(AffineRegularHexagon<Q>::canonical());
    REQUIRE(s.ring.size() == 12);
    const std::vector<P> tips{{3, 1}, {0, 2}, {-3, 1}, {-3, -1}, {0, -2}, {3, -1}};
    for (const auto& tip : tips) CHECK(std::find(s.ring.begin(), s.ring.end(), tip) != s.ring.end());
    CHECK(signed_area<Q>(s.ring) == 12);
    REQUIRE(s.wings.size() == 6);
    for (const auto& wing : s.wings) CHECK(area_and_centroid(wing).area == 1);
    const auto h = AffineRegularHexagon<Q>::canonical();
    CHECK(star_contains(s, h, P{0, 2}));
    CHECK(star_contains(s, h, P{Q(5, 2), 1}));
    CHECK_FALSE(star_contains(s, h, P{Q(3, 2), Q(3, 2)}));
}

TEST_CASE("property: star bodies lie inside the star") {
    const auto h = AffineRegularHexagon<double>::canonical();
    const auto s = star(h);
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const RandomBody body = random_body(seed, {Generator::Star, 3 + static_cast<int>(seed % 60)});
        for (const auto& p : body.polygon.vertices()) CHECK(star_contains(s, h, p));
    }
}

TEST_CASE("property: inscription commutes with affine maps") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 60; ++t) {
        const auto body = gen::float_polygon(rng);
        const auto m = gen::affine_map(rng);
        const auto image = apply_map(m, body);
        const HexagonFit fit = inscribe(image);
        CHECK(fit.residual <= 1e-7);
        CHECK(affine_regular(fit.hexagon.vertices(), 1e-9 * diameter(image)));

        const HexagonFit base = inscribe(body);
        const auto h = base.hexagon;
        const AffineRegularHexagon<double> mapped(m.apply(h.center), m.apply_linear(h.u), m.apply_linear(h.v));
        CHECK(std::fabs(fit_residual(image, mapped) - fit.residual) <= 1e-6);
        CHECK(check_theorem(image).contained == check_theorem(body).contained);
    }
}

TEST_CASE("property: the canonicalization map sends the fit to the canonical six") {
    std::mt19937_64 rng(33);
    const auto canon = AffineRegularHexagon<double>::canonical().vertices();
    for (int t = 0; t < 100; ++t) {
        const HexagonFit fit = inscribe(gen::float_polygon(rng));
        const auto v = fit.hexagon.vertices();
        for (std::size_t i = 0; i < 6; ++i) CHECK(dist(fit.to_canonical.apply(v[i]), canon[i]) <= 1e-9);
    }
}

TEST_CASE("property: the centroid of a hexagon is its center") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 100; ++t) {
        const P c{gen::rational_in(rng, -5, 5), gen::rational_in(rng, -5, 5)};
        const P u{gen::rational_in(rng, -3, 3), gen::rational_in(rng, -3, 3)};
        const P w{gen::rational_in(rng, -3, 3), gen::rational_in(rng, -3, 3)};
        if (cross(u, w) == 0) continue;
        const AffineRegularHexagon<Q> h(c, u, w);
        CHECK(area_and_centroid(h.polygon()).centroid == h.center);
    }
}

TEST_CASE("flat bodies are rejected") {
    const ConvexPolygon<double> sliver({{0, 0}, {1, 0}, {1, 1e-8}, {0, 1e-8}});
    CHECK_THROWS_AS(inscribe(sliver), InscriptionFailed);
}
