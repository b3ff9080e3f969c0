#pragma once

#include <string>

#include "hexacent/rational.hpp"

namespace hexacent {

/// Closed interval of binary64 values with outward rounding: every operation
/// widens its result by one ulp on each side, so the true real result of the
/// operation on any members of the operands is always enclosed.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double value) : lo(value), hi(value) {}  // NOLINT
    Interval(double lo_, double hi_);

    static Interval enclose(const Rational& q);
    static Interval hull(const Rational& a, const Rational& b);

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool positive() const { return lo > 0.0; }
    bool negative() const { return hi < 0.0; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);
    friend Interval operator*(const Interval& a, const Interval& b);
    // Throws std::domain_error if b contains zero.
    friend Interval operator/(const Interval& a, const Interval& b);

    std::string str() const;
};

// Throws std::domain_error for intervals reaching below zero.
Interval sqrt(const Interval& x);
Interval pow(const Interval& x, int n);

/// Forward-mode derivative carried alongside the value enclosure.
struct IntervalDual {
    Interval v;
    Interval d;

    IntervalDual() = default;
    IntervalDual(const Interval& value, const Interval& deriv = Interval(0.0)) : v(value), d(deriv) {}  // NOLINT
    IntervalDual(double value) : v(value), d(0.0) {}  // NOLINT
    static IntervalDual variable(const Interval& x) { return {x, Interval(1.0)}; }

    friend IntervalDual operator+(const IntervalDual& a, const IntervalDual& b) { return {a.v + b.v, a.d + b.d}; }
    friend IntervalDual operator-(const IntervalDual& a, const IntervalDual& b) { return {a.v - b.v, a.d - b.d}; }
    friend IntervalDual operator-(const IntervalDual& a) { return {-a.v, -a.d}; }
    friend IntervalDual operator*(const IntervalDual& a, const IntervalDual& b) {
        return {a.v * b.v, a.d * b.v + a.v * b.d};
    }
    friend IntervalDual operator/(const IntervalDual& a, const IntervalDual& b) {
        return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
    }
};

IntervalDual sqrt(const IntervalDual& x);

}  // namespace hexacent
