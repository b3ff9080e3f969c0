#include "hexacent/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hexacent {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

Interval widened(double lo, double hi) {
    Interval r;
    r.lo = down(lo);
    r.hi = up(hi);
    return r;
}

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi)) throw std::domain_error("interval with lo > hi");
}

Interval Interval::enclose(const Rational& q) {
    const double d = q.get_d();  // truncates toward zero
    const Rational back(d);
    if (back == q) return Interval(d);
    return back < q ? Interval(d, up(d)) : Interval(down(d), d);
}

Interval Interval::hull(const Rational& a, const Rational& b) {
    const Interval ia = enclose(a), ib = enclose(b);
    return Interval(std::min(ia.lo, ib.lo), std::max(ia.hi, ib.hi));
}

Interval operator+(const Interval& a, const Interval& b) { return widened(a.lo + b.lo, a.hi + b.hi); }

Interval operator-(const Interval& a, const Interval& b) { return widened(a.lo - b.hi, a.hi - b.lo); }

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
    const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return widened(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
    const double q[] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    return widened(*std::min_element(q, q + 4), *std::max_element(q, q + 4));
}

std::string Interval::str() const {
    std::ostringstream os;
    os.precision(17);
    os << '[' << lo << ", " << hi << ']';
    return os.str();
}

Interval sqrt(const Interval& x) {
    if (x.lo < 0.0) throw std::domain_error("interval square root of a negative range");
    Interval r = widened(std::sqrt(x.lo), std::sqrt(x.hi));
    r.lo = std::max(r.lo, 0.0);
    return r;
}

Interval pow(const Interval& x, int n) {
    Interval r(1.0);
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}

IntervalDual sqrt(const IntervalDual& x) {
    const Interval s = sqrt(x.v);
    return {s, x.d / (Interval(2.0) * s)};
}

}  // namespace hexacent
