#pragma once

#include <stdexcept>

#include "hexacent/certify.hpp"
#include "hexacent/interval.hpp"
#include "hexacent/polynomial.hpp"
#include "hexacent/rational.hpp"

namespace hexacent {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Height of the centroid of the heptagon G(w, z), as the quotient of two
// polynomials obtained by clearing the 1/w factors.
RationalFunction cen_G_function();

// Throws DomainError outside [1,2] x [0,1].
Rational cen_G_formula(const Rational& w, const Rational& z);
double cen_G_formula(double w, double z);

// Partial derivative of cen_G in z: 2(w-2) q(w,z) / (3w E(w,z)^2) with
// E = w^2 - 2wz + 5w + 4z. Both pieces are recomputed by the quotient rule.
struct CenGDerivative {
    RationalFunction derivative;
    BiPoly quadratic;  // q
    BiPoly e;          // E
};
const CenGDerivative& dcenG_dz_symbolic();
Rational dcenG_dz(const Rational& w, const Rational& z);
double dcenG_dz(double w, double z);

// The discriminant 2w^4 + 4w^3 - w^2 - 6w + 1 under the square root of z_w.
UniPoly zstar_discriminant();

// The stationary point z_w of cen_G(w, .). Evaluated in the conjugate form
// w(-w^2 + w + 12) / (2(w^2 + 4w - 5 + sqrt(D))), which is regular at w = 2.
// Throws DomainError for w < w0 - 1e-9 or w > 2.
double z_star(double w);
IntervalDual z_star(const IntervalDual& w);
// Limit of the printed form at w = 2 by one step of l'Hopital's rule, exact.
Rational z_star_limit_at_two();

// The cubic w^3 + w^2 - 2w - 4 whose only real root is w0.
UniPoly w0_cubic();
// Cardano closed form.
double w0();
// Exact isolating interval for w0.
RootInterval w0_interval();

}  // namespace hexacent
