#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hexacent/interval.hpp"
#include "hexacent/rational.hpp"

namespace hexacent {

/// Dense univariate polynomial with exact rational coefficients, lowest degree first.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> ascending);
    UniPoly(const Rational& constant);  // NOLINT: constants promote implicitly
    UniPoly(long constant) : UniPoly(Rational(constant)) {}  // NOLINT

    // Coefficients listed highest degree first, the way formulas are printed.
    static UniPoly descending(std::initializer_list<Rational> coeffs);
    static UniPoly x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    UniPoly derivative() const;
    UniPoly compose(const UniPoly& inner) const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;
    Interval eval(const Interval& x) const;
    // Sign at x; exact.
    int sign_at(const Rational& x) const { return sgn(eval(x)); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    // Exact division; throws std::domain_error if the remainder is non-zero.
    UniPoly exact_div(const UniPoly& d) const;

    UniPoly monic() const;
    UniPoly squarefree() const;

    std::string str(const std::string& var = "w") const;

private:
    void trim();
    std::vector<Rational> c_;
};

UniPoly gcd(UniPoly a, UniPoly b);

/// Sparse bivariate polynomial in (w, z) with exact rational coefficients.
/// Keys are (degree in w, degree in z); no zero coefficient is ever stored.
class BiPoly {
public:
    using Key = std::pair<int, int>;
    static constexpr int kMaxTotalDegree = 8;

    BiPoly() = default;
    BiPoly(const Rational& constant);  // NOLINT
    BiPoly(long constant) : BiPoly(Rational(constant)) {}  // NOLINT
    static BiPoly w();
    static BiPoly z();
    static BiPoly monomial(const Rational& coeff, int dw, int dz);
    static BiPoly from_w(const UniPoly& p);
    static BiPoly from_z(const UniPoly& p);

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree_w() const;
    int degree_z() const;
    int total_degree() const;
    Rational coeff(int dw, int dz) const;

    BiPoly derivative_w() const;
    BiPoly derivative_z() const;

    Rational eval(const Rational& w, const Rational& z) const;
    double eval(double w, double z) const;
    Interval eval(const Interval& w, const Interval& z) const;

    // Coefficient of z^j as a polynomial in w.
    UniPoly z_coefficient(int j) const;
    // p(w, value) as a polynomial in w, and p(value, z) as a polynomial in z.
    UniPoly at_z(const Rational& value) const;
    UniPoly at_w(const Rational& value) const;
    // p(w, g(w)).
    UniPoly substitute_z(const UniPoly& g) const;
    // p(w0 + dw*t, z0 + dz*t) as a polynomial in t.
    UniPoly along(const Rational& w0, const Rational& dw, const Rational& z0, const Rational& dz) const;

    // Largest monomial w^a z^b dividing every term.
    Key monomial_content() const;
    BiPoly shift_down(int dw, int dz) const;  // divide by w^dw z^dz (must divide)

    // Exact division by a polynomial in w alone (e.g. the root line w - 2).
    // Returns false if it does not divide.
    bool divide_by_w_poly(const UniPoly& d, BiPoly& quotient) const;
    bool divide_by_z_poly(const UniPoly& d, BiPoly& quotient) const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    void add_term(const Key& k, const Rational& c);
    std::map<Key, Rational> terms_;
};

/// Quotient of two bivariate polynomials, with common monomial factors cancelled.
struct RationalFunction {
    BiPoly num;
    BiPoly den{1};

    RationalFunction() = default;
    RationalFunction(BiPoly n, BiPoly d = BiPoly(1));  // NOLINT

    Rational eval(const Rational& w, const Rational& z) const;
    RationalFunction derivative_z() const;
    RationalFunction derivative_w() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    // a/b == c/d as rational functions (cross-multiplication).
    bool same_as(const RationalFunction& other) const;
};

}  // namespace hexacent
