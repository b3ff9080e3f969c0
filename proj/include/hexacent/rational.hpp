#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hexacent {

using Rational = mpq_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// n/d in lowest terms. mpq_class(n, d) skips the reduction, and unreduced
// values compare unequal to equal reduced ones.
inline Rational fraction(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// "p/q", "-p/q", integers and plain decimals ("1.25", "-3e-2") all parse exactly.
Rational parse_rational(std::string_view text);
double parse_double(std::string_view text);

inline bool is_fraction_literal(std::string_view text) {
    return text.find('/') != std::string_view::npos;
}

// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);
// Shortest decimal that round-trips through binary64.
std::string to_string(double x);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

Rational exact_from_double(double x);

// Best rational approximation with denominator at most max_den (continued fractions).
Rational best_rational(double x, std::int64_t max_den);

// Scalar-mode traits so the geometry templates can branch on exactness.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float";
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "exact";
};

template <typename T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <typename T>
T abs_value(const T& x) {
    if constexpr (is_exact_v<T>) {
        return abs(x);
    } else {
        return x < 0 ? -x : x;
    }
}

template <typename T>
int sign_of(const T& x) {
    if constexpr (is_exact_v<T>) {
        return sgn(x);
    } else {
        return (x > 0) - (x < 0);
    }
}

template <typename T>
T scalar_from_string(std::string_view text) {
    if constexpr (is_exact_v<T>) {
        return parse_rational(text);
    } else {
        return parse_double(text);
    }
}

}  // namespace hexacent
