#include "hexacent/formulas.hpp"

#include <cmath>

namespace hexacent {

namespace {

BiPoly W() { return BiPoly::w(); }
BiPoly Z() { return BiPoly::z(); }
BiPoly C(long c) { return BiPoly(c); }

void check_domain(double w, double z) {
    if (!(w >= 1 && w <= 2 && z >= 0 && z <= 1)) throw DomainError("cen_G needs w in [1,2] and z in [0,1]");
}

}  // namespace

RationalFunction cen_G_function() {
    // Multiply numerator and denominator of the area-weighted average by w^2.
    const BiPoly w = W(), z = Z();
    const BiPoly wing = z * (C(2) - w);                      // w * area of one wing
    const BiPoly wing_height = C(2) * w + z * (C(2) - C(2) * w);  // w * (2 + z(2-2w)/w)
    const BiPoly num = C(2) * wing_height * wing + w * w * (w * w + w - C(2));
    const BiPoly den = C(6) * wing * w + w * w * (C(3) * w + C(15));
    return {num, den};
}

Rational cen_G_formula(const Rational& w, const Rational& z) {
    if (w < 1 || w > 2 || z < 0 || z > 1) throw DomainError("cen_G needs w in [1,2] and z in [0,1]");
    static const RationalFunction f = cen_G_function();
    return f.eval(w, z);
}

double cen_G_formula(double w, double z) {
    check_domain(w, z);
    const double t = z * (2 - w) / w;
    const double h = 2 + z * (2 - 2 * w) / w;
    return (2 * h * t + w * w + w - 2) / (6 * t + 3 * w + 15);
}

const CenGDerivative& dcenG_dz_symbolic() {
    static const CenGDerivative d = [] {
        const RationalFunction f = cen_G_function();
        // The quotient rule numerator carries the factor 6w(w - 2).
        const BiPoly k = f.num.derivative_z() * f.den - f.num * f.den.derivative_z();
        const UniPoly factor = UniPoly::descending({6, -12, 0});  // 6w(w - 2)
        BiPoly q;
        if (!k.divide_by_w_poly(factor, q)) throw std::logic_error("quotient rule numerator lost its factor 6w(w-2)");
        BiPoly e;
        if (!f.den.divide_by_w_poly(UniPoly::descending({3, 0}), e)) throw std::logic_error("denominator lost its factor 3w");
        CenGDerivative out;
        out.derivative = f.derivative_z();
        out.quadratic = q;
        out.e = e;
        return out;
    }();
    return d;
}

Rational dcenG_dz(const Rational& w, const Rational& z) {
    const auto& d = dcenG_dz_symbolic();
    const Rational e = d.e.eval(w, z);
    return 2 * (w - 2) * d.quadratic.eval(w, z) / (3 * w * e * e);
}

double dcenG_dz(double w, double z) {
    const auto& d = dcenG_dz_symbolic();
    const double e = d.e.eval(w, z);
    return 2 * (w - 2) * d.quadratic.eval(w, z) / (3 * w * e * e);
}

UniPoly zstar_discriminant() { return UniPoly::descending({2, 4, -1, -6, 1}); }

double z_star(double w) {
    if (w > 2 || w < w0() - 1e-9) throw DomainError("z_w is defined for w in [w0, 2]");
    const double disc = zstar_discriminant().eval(w);
    return w * (-w * w + w + 12) / (2 * (w * w + 4 * w - 5 + std::sqrt(disc)));
}

IntervalDual z_star(const IntervalDual& w) {
    static const UniPoly disc = zstar_discriminant();
    static const UniPoly disc_d = disc.derivative();
    const IntervalDual d{disc.eval(w.v), disc_d.eval(w.v) * w.d};
    const IntervalDual num = w * (IntervalDual(12.0) + w - w * w);
    const IntervalDual den = IntervalDual(2.0) * (w * w + IntervalDual(4.0) * w - IntervalDual(5.0) + sqrt(d));
    return num / den;
}

Rational z_star_limit_at_two() {
    // Printed form N/D with N = w(b - sqrt(D)), b = w^2 + 4w - 5 and
    // D(w) = 2(w^2 - 3w + 2). Both vanish at 2, so the limit is N'(2)/D'(2).
    const UniPoly disc = zstar_discriminant();
    const UniPoly b = UniPoly::descending({1, 4, -5});
    const Rational two = 2;
    const Rational d2 = disc.eval(two);
    mpz_class num = d2.get_num(), den = d2.get_den();
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (rn * rn != num || rd * rd != den) throw std::logic_error("discriminant at 2 is not a rational square");
    const Rational root(rn, rd);
    if (b.eval(two) != root) throw std::logic_error("printed form of z_w is not 0/0 at w = 2");
    const Rational root_d = disc.derivative().eval(two) / (2 * root);
    const Rational n_d = (b.eval(two) - root) + two * (b.derivative().eval(two) - root_d);
    const Rational d_d = UniPoly::descending({2, -6, 4}).derivative().eval(two);
    return n_d / d_d;
}

UniPoly w0_cubic() { return UniPoly::descending({1, 1, -2, -4}); }

double w0() {
    const double r = std::sqrt(177.0);
    const double value = (std::cbrt(44 - 3 * r) + std::cbrt(44 + 3 * r) - 1) / 3;
    if (std::fabs(w0_cubic().eval(value)) > 1e-12) throw std::logic_error("closed form of w0 is not a root of its cubic");
    return value;
}

RootInterval w0_interval() {
    const auto roots = isolate_real_roots(w0_cubic(), 1, 2);
    if (roots.size() != 1) throw std::logic_error("expected exactly one root of the w0 cubic in [1,2]");
    return roots.front();
}

}  // namespace hexacent
