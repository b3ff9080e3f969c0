#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "generators.hpp"
#include "hexacent/centroid_bound.hpp"
#include "hexacent/geometry.hpp"
#include "hexacent/hexagon.hpp"

using namespace hexacent;
using Q = Rational;
using P = Point<Rational>;

namespace {

ConvexPolygon<Q> canonical_hexagon() { return ConvexPolygon<Q>({{1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}, {2, 0}}); }

bool same_vertex_set(const ConvexPolygon<Q>& a, std::vector<P> b) {
    auto va = a.vertices();
    auto less = [](const P& p, const P& q) { return p.x < q.x || (p.x == q.x && p.y < q.y); };
    std::sort(va.begin(), va.end(), less);
    std::sort(b.begin(), b.end(), less);
    return va == b;
}

// Independent centroid oracle: fan triangulation from vertex 0.
Point<Q> fan_centroid(const std::vector<P>& v) {
    Q area = 0, cx = 0, cy = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const Q a = orient(v[0], v[i], v[i + 1]) / 2;
        area += a;
        cx += a * (v[0].x + v[i].x + v[i + 1].x) / 3;
        cy += a * (v[0].y + v[i].y + v[i + 1].y) / 3;
    }
    return {cx / area, cy / area};
}

}  // namespace

TEST_CASE("convex_hull drops interior points and keeps ccw order") {
    const auto sq = convex_hull<Q>({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
    CHECK(sq.size() == 4);
    CHECK(same_vertex_set(sq, {{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    CHECK(signed_area<Q>(sq.vertices()) > 0);

    const auto hex = convex_hull<Q>({{1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}, {2, 0}});
    CHECK(same_vertex_set(hex, canonical_hexagon().vertices()));

    CHECK_THROWS_AS(convex_hull<Q>({{0, 0}, {1, 1}, {2, 2}}), GeometryError);
    CHECK_THROWS_AS(convex_hull<Q>({{0, 0}, {0, 0}, {1, 1}}), GeometryError);
}

TEST_CASE("polygon construction rejects reflex input and names the triple") {
    try {
        ConvexPolygon<Q>({{0, 0}, {4, 0}, {1, 1}, {4, 4}, {0, 4}});
        FAIL("expected NotConvex");
    } catch (const GeometryError& e) {
        CHECK(e.kind() == GeometryErrorKind::NotConvex);
        CHECK(std::string(e.what()).find("(1, 2, 3)") != std::string::npos);
    }
    // Collinear vertices are pruned, clockwise input is reversed.
    const ConvexPolygon<Q> p({{0, 0}, {0, 2}, {2, 2}, {2, 1}, {2, 0}});
    CHECK(p.size() == 4);
    CHECK(signed_area<Q>(p.vertices()) == 4);
}

TEST_CASE("area and centroid") {
    const auto hex = area_and_centroid(canonical_hexagon());
    CHECK(hex.area == 6);
    CHECK(hex.centroid == P{0, 0});

    const Q w(3, 2);
    const auto tri = area_and_centroid(ConvexPolygon<Q>({{1, 1}, {0, w}, {-1, 1}}));
    CHECK(tri.area == w - 1);
    CHECK(tri.area == Q(1, 2));
    CHECK(tri.centroid.y == (2 + w) / 3);
    CHECK(tri.centroid.y == Q(7, 6));

    const auto pent = area_and_centroid(tight_pentagon<Q>());
    CHECK(pent.area == 7);
    CHECK(pent.centroid == P{0, Q(4, 21)});
}

TEST_CASE("composite centroid") {
    const std::vector<AreaCentroid<Q>> squares{{1, {Q(1, 2), Q(1, 2)}}, {1, {Q(3, 2), Q(1, 2)}}};
    CHECK(composite_centroid<Q>(squares) == P{1, Q(1, 2)});

    const std::vector<AreaCentroid<Q>> union_parts{{6, {0, 0}}, {1, {0, Q(4, 3)}}};
    CHECK(composite_centroid<Q>(union_parts).y == Q(4, 21));

    const std::vector<AreaCentroid<Q>> single{{5, {Q(2, 3), 7}}};
    CHECK(composite_centroid<Q>(single) == P{Q(2, 3), 7});
    CHECK_THROWS_AS(composite_centroid<Q>(std::vector<AreaCentroid<Q>>{}), GeometryError);
}

TEST_CASE("line intersection") {
    const auto a2a3 = Line<Q>::through({-1, 1}, {-2, 0});
    const auto a1a6 = Line<Q>::through({1, 1}, {2, 0});
    CHECK(line_intersect(a2a3, a1a6) == P{0, 2});

    const Q w(3, 2);
    const auto l1 = Line<Q>::through({0, w}, {1, 1});
    const auto lower = Line<Q>::through({2, 0}, {3, 1});  // y = x - 2
    CHECK(line_intersect(l1, lower) == P{Q(7, 3), Q(1, 3)});
    CHECK(line_intersect(l1, lower) == point_m1(w));

    CHECK_THROWS_AS(line_intersect(Line<Q>(0, 1, 0), Line<Q>(0, 1, 1)), GeometryError);
}

TEST_CASE("clip to a half-plane") {
    const auto lower = clip_halfplane(canonical_hexagon(), Line<Q>(0, 1, 0), HalfPlane::NonPositive);
    REQUIRE(lower);
    CHECK(same_vertex_set(*lower, {{-2, 0}, {-1, -1}, {1, -1}, {2, 0}}));

    // At w = 2 the pentagon below y = 1 is the heptagon family's member.
    const auto cut = clip_halfplane(tight_pentagon<Q>(), Line<Q>(0, 1, 1), HalfPlane::NonPositive);
    REQUIRE(cut);
    CHECK(same_vertex_set(*cut, {{1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}, {2, 0}}));

    const ConvexPolygon<Q> unit({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK_FALSE(clip_halfplane(unit, Line<Q>(1, 0, 2), HalfPlane::NonNegative));
    // Touching along an edge has zero area.
    CHECK_FALSE(clip_halfplane(unit, Line<Q>(1, 0, 1), HalfPlane::NonNegative));
}

TEST_CASE("homothety") {
    const auto small = homothet(canonical_hexagon(), Q(4, 21), P{0, 0});
    CHECK(same_vertex_set(small, {{Q(4, 21), Q(4, 21)},
                                  {Q(-4, 21), Q(4, 21)},
                                  {Q(-8, 21), 0},
                                  {Q(-4, 21), Q(-4, 21)},
                                  {Q(4, 21), Q(-4, 21)},
                                  {Q(8, 21), 0}}));
    CHECK(homothet(canonical_hexagon(), Q(1), P{5, 7}) == canonical_hexagon());
    const auto half = homothet(canonical_hexagon(), Q(1, 2), P{2, 0});
    CHECK(std::find(half.vertices().begin(), half.vertices().end(), P{2, 0}) != half.vertices().end());
    CHECK_THROWS_AS(homothet(canonical_hexagon(), Q(0), P{0, 0}), GeometryError);
    CHECK_THROWS_AS(homothet(canonical_hexagon(), Q(-1), P{0, 0}), GeometryError);
}

TEST_CASE("gauge with respect to the hexagon") {
    const auto hex = canonical_hexagon();
    CHECK(gauge(hex, P{0, 0}, P{0, Q(4, 21)}) == Q(4, 21));
    CHECK(gauge(hex, P{0, 0}, P{0, 0}) == 0);
    CHECK(gauge(hex, P{0, 0}, P{1, 1}) == 1);
    CHECK(gauge(hex, P{0, 0}, P{4, 0}) == 2);
}

TEST_CASE("affine maps") {
    const auto hex = canonical_hexagon();
    CHECK(apply_map(AffineMap<Q>::identity(), hex) == hex);

    // Regular hexagon of circumradius 2 -> canonical: match two vertex pairs.
    const auto m = AffineMap<double>::from_frames({0, 0}, {2, 0}, {1, std::sqrt(3.0)}, {0, 0}, {2, 0}, {1, 1});
    std::vector<Point<double>> regular;
    for (int k = 0; k < 6; ++k) regular.push_back({2 * std::cos(k * M_PI / 3), 2 * std::sin(k * M_PI / 3)});
    const auto mapped = apply_map(m, ConvexPolygon<double>(regular));
    const auto hex_d = to_double(hex);
    for (const auto& v : hex_d.vertices()) {
        bool found = false;
        for (const auto& q : mapped.vertices()) found |= std::hypot(q.x - v.x, q.y - v.y) < 1e-12;
        CHECK(found);
    }

    const AffineMap<Q> mirror{-1, 0, 0, 1, 0, 0};
    const auto reflected = apply_map(mirror, hex);
    CHECK(same_vertex_set(reflected, hex.vertices()));
    CHECK(signed_area<Q>(reflected.vertices()) > 0);
    CHECK_THROWS_AS(apply_map(AffineMap<Q>{1, 2, 2, 4, 0, 0}, hex), GeometryError);
}

TEST_CASE("supporting cone at a vertex") {
    const ConvexPolygon<Q> sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    std::size_t idx = 0;
    for (std::size_t i = 0; i < sq.size(); ++i)
        if (sq[i] == P{1, 1}) idx = i;
    const auto [l1, l2] = supporting_cone(sq, idx);
    for (const auto& l : {l1, l2}) {
        CHECK(l.eval({1, 1}) == 0);
        int pos = 0, neg = 0;
        for (const auto& v : sq.vertices()) {
            pos += l.eval(v) > 0;
            neg += l.eval(v) < 0;
        }
        CHECK(pos * neg == 0);
    }
    // One line is x = 1 and the other y = 1.
    CHECK(((l1.eval({1, 0}) == 0 && l2.eval({0, 1}) == 0) || (l1.eval({0, 1}) == 0 && l2.eval({1, 0}) == 0)));

    const auto hex = canonical_hexagon();
    std::size_t a1 = 0;
    for (std::size_t i = 0; i < hex.size(); ++i)
        if (hex[i] == P{1, 1}) a1 = i;
    const auto [h1, h2] = supporting_cone(hex, a1);
    CHECK(h1.eval({-1, 1}) * h2.eval({-1, 1}) == 0);
    CHECK(h1.eval({2, 0}) * h2.eval({2, 0}) == 0);
}

TEST_CASE("property: shoelace centroid agrees with a fan triangulation and ignores rotation") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto poly = gen::rational_polygon(rng);
        const auto ac = area_and_centroid(poly);
        CHECK(ac.centroid == fan_centroid(poly.vertices()));
        auto rotated = poly.vertices();
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        CHECK(area_and_centroid(ConvexPolygon<Q>(rotated)).centroid == ac.centroid);
    }
}

TEST_CASE("property: a chord splits area and centroid exactly") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> c(-40, 40);
    int splits = 0;
    for (int t = 0; t < 400 && splits < 200; ++t) {
        const auto poly = gen::rational_polygon(rng);
        Q a = c(rng), b = c(rng);
        if (a == 0 && b == 0) continue;
        const Line<Q> line(a, b, fraction(c(rng), 8));
        const auto lo = clip_halfplane(poly, line, HalfPlane::NonPositive);
        const auto hi = clip_halfplane(poly, line, HalfPlane::NonNegative);
        if (!lo || !hi) continue;
        ++splits;
        const std::vector<AreaCentroid<Q>> parts{area_and_centroid(*lo), area_and_centroid(*hi)};
        CHECK(composite_centroid<Q>(parts) == area_and_centroid(poly).centroid);
        CHECK(parts[0].area + parts[1].area == area_and_centroid(poly).area);
    }
    CHECK(splits >= 100);
}

TEST_CASE("property: homothety scales area by the square of the ratio") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        const auto poly = gen::rational_polygon(rng);
        const Q r = gen::rational_in(rng, Q(1, 10), Q(3));
        const P c{gen::rational_in(rng, -2, 2), gen::rational_in(rng, -2, 2)};
        CHECK(area_and_centroid(homothet(poly, r, c)).area == r * r * area_and_centroid(poly).area);
    }
}

TEST_CASE("property: gauge is positively homogeneous") {
    std::mt19937_64 rng(14);
    const auto hex = canonical_hexagon();
    for (int t = 0; t < 200; ++t) {
        const P p{gen::rational_in(rng, -3, 3), gen::rational_in(rng, -3, 3)};
        const Q s = gen::rational_in(rng, 0, 5);
        CHECK(gauge(hex, P{0, 0}, P{s * p.x, s * p.y}) == s * gauge(hex, P{0, 0}, p));
    }
}

TEST_CASE("floating mode matches rational mode") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 50; ++t) {
        const auto poly = gen::rational_polygon(rng);
        const auto exact = area_and_centroid(poly);
        const auto approx = area_and_centroid(to_double(poly));
        CHECK(approx.area == doctest::Approx(to_double(exact.area)).epsilon(1e-12));
        CHECK(std::fabs(approx.centroid.y - to_double(exact.centroid.y)) <= 1e-12);
    }
}
