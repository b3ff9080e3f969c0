#include <doctest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "hexacent/certify.hpp"

using namespace hexacent;
using Q = Rational;

namespace {

BiPoly random_bipoly(std::mt19937_64& rng, int max_degree = 3) {
    std::uniform_int_distribution<int> c(-6, 6);
    BiPoly p;
    for (int i = 0; i <= max_degree; ++i)
        for (int j = 0; i + j <= max_degree; ++j) p = p + BiPoly::monomial(c(rng), i, j);
    return p;
}

ParamPoint random_point(std::mt19937_64& rng, const Region& r) {
    if (const auto* b = std::get_if<Box>(&r)) return {gen::rational_in(rng, b->w1, b->w2), gen::rational_in(rng, b->z1, b->z2)};
    if (const auto* t = std::get_if<Triangle>(&r)) {
        Q s = gen::rational_in(rng, 0, 1), u = gen::rational_in(rng, 0, 1);
        if (s + u > 1) s = 1 - s, u = 1 - u;
        return {t->a.w + s * (t->b.w - t->a.w) + u * (t->c.w - t->a.w), t->a.z + s * (t->b.z - t->a.z) + u * (t->c.z - t->a.z)};
    }
    const auto& iv = std::get<WInterval>(r);
    return {gen::rational_in(rng, iv.w1, iv.w2), 0};
}

void check_soundness(const BiPoly& p, const Region& region, Relation rel, std::mt19937_64& rng) {
    const SignCertificate cert = certify_sign(p, region, rel, {30, 200000});
    if (cert.status == CertStatus::Proved) {
        for (int k = 0; k < 1000; ++k) {
            const ParamPoint q = random_point(rng, region);
            REQUIRE(holds(rel, p.eval(q.w, q.z)));
        }
    } else if (cert.status == CertStatus::Disproved) {
        REQUIRE(cert.witness);
        CHECK(region_contains(region, cert.witness->at));
        CHECK(cert.witness->value == p.eval(cert.witness->at.w, cert.witness->at.z));
        CHECK_FALSE(holds(rel, cert.witness->value));
    }
}

}  // namespace

TEST_CASE("simple certificates") {
    const UniPoly x = UniPoly::x();
    const UniPoly q = (x - Q(1)) * (x - Q(2));
    CHECK(certify_sign(q, WInterval{1, 2}, Relation::LessEq).status == CertStatus::Proved);
    const auto strict = certify_sign(q, WInterval{1, 2}, Relation::Less);
    CHECK(strict.status == CertStatus::Disproved);
    REQUIRE(strict.witness);
    CHECK(strict.witness->value == 0);

    CHECK(certify_sign(x * x + Q(1), WInterval{-5, 5}, Relation::Greater).status == CertStatus::Proved);
    CHECK(certify_sign(x * x - Q(1, 100), WInterval{-1, 1}, Relation::GreaterEq).status == CertStatus::Disproved);

    const BiPoly b = BiPoly::w() * BiPoly::z() - BiPoly(1);
    CHECK(certify_sign(b, Box{0, 1, 0, 1}, Relation::LessEq).status == CertStatus::Proved);
    CHECK(certify_sign(b, Box{0, 2, 0, 1}, Relation::LessEq).status == CertStatus::Disproved);
    CHECK(certify_sign(b, Triangle{{0, 0}, {1, 0}, {0, 1}}, Relation::LessEq).status == CertStatus::Proved);
    // wz - 1 touches zero at (1, 1) inside this one: never Disproved.
    CHECK(certify_sign(b, Triangle{{0, 0}, {2, 0}, {0, 2}}, Relation::LessEq, {12, 5000}).status != CertStatus::Disproved);

    // A root line on the boundary is divided out for the weak relation.
    const BiPoly edge = (BiPoly::w() - BiPoly(2)) * (BiPoly::z() + BiPoly(1));
    const auto cert = certify_sign(edge, Box{1, 2, 0, 1}, Relation::LessEq);
    CHECK(cert.status == CertStatus::Proved);
    CHECK_FALSE(cert.factored.empty());
}

TEST_CASE("budget exhaustion is inconclusive") {
    const UniPoly x = UniPoly::x();
    // Tangent double root in the interior: never separable by subdivision.
    const UniPoly p = -(x - Q(1, 3)) * (x - Q(1, 3));
    const auto cert = certify_sign(p, WInterval{0, 1}, Relation::Less, {8, 1000});
    CHECK(cert.status != CertStatus::Proved);
}

TEST_CASE("regions") {
    CHECK_THROWS_AS(validate_region(Box{1, 1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_region(Triangle{{0, 0}, {1, 1}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_region(WInterval{2, 1}), std::invalid_argument);
    const Triangle t{{2, 1}, {Q(8, 5), 1}, {2, Q(5, 7)}};
    CHECK(region_contains(t, {Q(9, 5), Q(19, 20)}));
    CHECK_FALSE(region_contains(t, {Q(8, 5), Q(5, 7)}));
}

TEST_CASE("property: certificates are sound on random polynomials") {
    std::mt19937_64 rng(51);
    int proved = 0, disproved = 0;
    for (int t = 0; t < 40; ++t) {
        const BiPoly p = random_bipoly(rng);
        const Box box{gen::rational_in(rng, -2, 0), gen::rational_in(rng, Q(1, 10), 2), gen::rational_in(rng, -2, 0),
                      gen::rational_in(rng, Q(1, 10), 2)};
        // Shift so that roughly half the cases are provable.
        const auto [lo, hi] = bernstein_range(p, box);
        const BiPoly shifted = p - BiPoly(t % 2 ? Q(hi + 1) : Q((lo + hi) / 2));
        for (const Relation rel : {Relation::LessEq, Relation::Less}) {
            const auto cert = certify_sign(shifted, box, rel, {30, 200000});
            proved += cert.status == CertStatus::Proved;
            disproved += cert.status == CertStatus::Disproved;
            check_soundness(shifted, box, rel, rng);
        }
        const Triangle tri{{box.w1, box.z1}, {box.w2, box.z1}, {box.w1, box.z2}};
        check_soundness(shifted, tri, Relation::LessEq, rng);
    }
    CHECK(proved > 0);
    CHECK(disproved > 0);
}

TEST_CASE("property: Bernstein range encloses sampled values") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 50; ++t) {
        const BiPoly p = random_bipoly(rng, 4);
        const Box box{gen::rational_in(rng, -1, 0), gen::rational_in(rng, Q(1, 10), 1), gen::rational_in(rng, -1, 0),
                      gen::rational_in(rng, Q(1, 10), 1)};
        const auto [lo, hi] = bernstein_range(p, box);
        for (int k = 0; k < 50; ++k) {
            const ParamPoint q = random_point(rng, box);
            const Q v = p.eval(q.w, q.z);
            CHECK(lo <= v);
            CHECK(v <= hi);
        }
    }
}

TEST_CASE("real root isolation") {
    const UniPoly x = UniPoly::x();
    const auto r2 = real_roots(x * x - Q(2));
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].approx() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(r2[1].approx() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(r2[1].hi - r2[1].lo <= Q(1, 1000000000000));
    CHECK((r2[1].lo * r2[1].lo - 2) * (r2[1].hi * r2[1].hi - 2) <= 0);

    const auto exact = isolate_real_roots((x - Q(1, 3)) * (x - Q(2)) * (x - Q(7)), 0, 5);
    REQUIRE(exact.size() == 2);
    CHECK(exact[0].lo <= Q(1, 3));
    CHECK(Q(1, 3) <= exact[0].hi);
    CHECK(exact[1].lo <= 2);
    CHECK(2 <= exact[1].hi);

    // Repeated roots are reported once.
    CHECK(real_roots((x - Q(1)) * (x - Q(1)) * (x + Q(1))).size() == 2);
    CHECK(real_roots(x * x + Q(1)).empty());

    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> c(-20, 20);
    for (int t = 0; t < 50; ++t) {
        std::vector<Q> rts;
        UniPoly p(Q(1));
        for (int k = 0; k < 4; ++k) {
            rts.push_back(fraction(c(rng), 4));
            p = p * (x - rts.back());
        }
        std::sort(rts.begin(), rts.end());
        rts.erase(std::unique(rts.begin(), rts.end()), rts.end());
        const auto found = real_roots(p);
        REQUIRE(found.size() == rts.size());
        for (std::size_t i = 0; i < rts.size(); ++i) {
            CHECK(found[i].lo <= rts[i]);
            CHECK(rts[i] <= found[i].hi);
        }
    }
}

TEST_CASE("resultant") {
    const BiPoly w = BiPoly::w(), z = BiPoly::z();
    // z = w and z = 2 - w meet at w = 1.
    const auto r1 = real_roots(resultant_z(z - w, z + w - BiPoly(2)));
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].lo <= 1);
    CHECK(1 <= r1[0].hi);

    // z^2 = w and z = w: w = 0 or w = 1.
    const UniPoly r2 = resultant_z(z * z - w, z - w);
    CHECK(r2.eval(Q(0)) == 0);
    CHECK(r2.eval(Q(1)) == 0);
    CHECK(r2.degree() == 2);

    // Circle and line: x^2 + z^2 = 1, z = 0 gives w = +-1.
    const UniPoly r3 = resultant_z(w * w + z * z - BiPoly(1), z);
    CHECK(r3.eval(Q(1)) == 0);
    CHECK(r3.eval(Q(-1)) == 0);
    CHECK(r3.eval(Q(0)) != 0);
}

TEST_CASE("critical points of a concave quadratic") {
    const BiPoly w = BiPoly::w(), z = BiPoly::z();
    const BiPoly p = -(w - BiPoly(Q(3, 2))) * (w - BiPoly(Q(3, 2))) - (z - BiPoly(Q(1, 2))) * (z - BiPoly(Q(1, 2)));
    const auto report = critical_points(p, Box{1, 2, 0, 1});
    CHECK(report.maximum.kind == CriticalPoint::Kind::Interior);
    CHECK(report.maximum.w == doctest::Approx(1.5));
    CHECK(report.maximum.z == doctest::Approx(0.5));
    CHECK(report.maximum.value == doctest::Approx(0));

    const BiPoly lin = w + z;
    const auto corner = critical_points(lin, Box{1, 2, 0, 1});
    CHECK(corner.maximum.kind == CriticalPoint::Kind::Vertex);
    REQUIRE(corner.maximum.exact_value);
    CHECK(*corner.maximum.exact_value == 3);
}

TEST_CASE("interval arithmetic encloses exact results") {
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int t = 0; t < 1000; ++t) {
        const double a = u(rng), b = u(rng);
        const Q qa = exact_from_double(a), qb = exact_from_double(b);
        const Interval ia(a), ib(b);
        auto inside = [](const Interval& i, const Q& q) { return exact_from_double(i.lo) <= q && q <= exact_from_double(i.hi); };
        CHECK(inside(ia + ib, qa + qb));
        CHECK(inside(ia - ib, qa - qb));
        CHECK(inside(ia * ib, qa * qb));
        if (b != 0) CHECK(inside(ia / ib, qa / qb));
        const Interval s = sqrt(Interval(std::fabs(a)));
        CHECK(exact_from_double(s.lo) * exact_from_double(s.lo) <= abs(qa));
        CHECK(abs(qa) <= exact_from_double(s.hi) * exact_from_double(s.hi));
    }
    const Interval third = Interval::enclose(Q(1, 3));
    CHECK(third.lo < third.hi);
    CHECK(exact_from_double(third.lo) <= Q(1, 3));
    CHECK(Q(1, 3) <= exact_from_double(third.hi));
    CHECK_THROWS_AS(Interval(1) / Interval(-1, 1), std::domain_error);
    CHECK_THROWS_AS(sqrt(Interval(-1, 1)), std::domain_error);
}

TEST_CASE("interval certificates") {
    const IntervalFunction f = [](const IntervalDual& w) { return sqrt(w) - IntervalDual(0.5); };
    CHECK(certify_interval_sign(f, 1, 4, Relation::GreaterEq).status == CertStatus::Proved);
    // Zero at an endpoint: outward rounding may leave it open, but it is never refuted.
    const IntervalFunction touch = [](const IntervalDual& w) { return sqrt(w) - IntervalDual(1.0); };
    CHECK(certify_interval_sign(touch, 1, 4, Relation::GreaterEq, 12).status != CertStatus::Disproved);
    const IntervalFunction g = [](const IntervalDual& w) { return sqrt(w) - IntervalDual(1.5); };
    const auto bad = certify_interval_sign(g, 1, 4, Relation::GreaterEq);
    CHECK(bad.status == CertStatus::Disproved);
    REQUIRE(bad.witness);
    CHECK(*bad.witness < Q(9, 4));
    const IntervalFunction h = [](const IntervalDual& w) { return w * w - IntervalDual(2.0) * w + IntervalDual(1.0); };
    CHECK(certify_interval_sign(h, 2, 3, Relation::Greater).status == CertStatus::Proved);
}
